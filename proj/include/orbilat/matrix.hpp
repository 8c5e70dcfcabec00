#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orbilat/rat.hpp"

namespace orbilat {

// Dense row-major matrix over an exact GMP type (Int or Rat).
template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c, T fill = T(0)) : rows_(r), cols_(c), data_(r * c, fill) {}
    Mat(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& v) {
        std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i -= f * row j; f taken by value so callers may pass an entry of
    // the row being modified
    void row_axpy(std::size_t i, std::size_t j, T f) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) -= f * (*this)(j, c);
    }
    void col_axpy(std::size_t i, std::size_t j, T f) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) -= f * (*this)(r, j);
    }
    void scale_row(std::size_t i, T f) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) *= f;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend std::vector<T> operator*(const std::vector<T>& v, const Mat& m) {
        if (v.size() != m.rows_) throw std::invalid_argument("vec*mat shape mismatch");
        std::vector<T> out(m.cols_, T(0));
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < m.cols_; ++j) out[j] += v[i] * m(i, j);
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMat = Mat<Rat>;
using IntMat = Mat<Int>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Fails if any entry has a denominator.
inline IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::invalid_argument("matrix entry not integral");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

inline Int denominator_lcm(const RatMat& m) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    return l;
}

// ---- Gaussian elimination over Q ----

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

Rat det(const RatMat& m);

// Inverse of a square nonsingular matrix.
RatMat inverse(const RatMat& m);

// Solves x * A = b (row-vector convention); nullopt if inconsistent.
std::optional<RatVec> solve_left(const RatMat& a, const RatVec& b);

// Basis (rows) of { x : x * A = 0 }.
RatMat left_kernel(const RatMat& a);

// Basis (rows) of the integral left kernel { x in Z^r : x * A = 0 };
// the result is saturated (a basis of the full kernel lattice).
IntMat integral_left_kernel(const RatMat& a);

}  // namespace orbilat

#include "orbilat/matrix.hpp"

namespace orbilat {

std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        Rat inv = 1 / m(r, c);
        m.scale_row(r, inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m(i, c) != 0) m.row_axpy(i, r, m(i, c));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    RatMat a = m;
    Rat d = 1;
    std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            a.swap_rows(c, piv);
            d = -d;
        }
        d *= a(c, c);
        Rat inv = 1 / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) != 0) a.row_axpy(i, c, a(i, c) * inv);
        }
    }
    return d;
}

RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) throw std::invalid_argument("matrix not invertible");
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<RatVec> solve_left(const RatMat& a, const RatVec& b) {
    // x * a = b  <=>  a^T x^T = b^T; eliminate on [a^T | b^T].
    std::size_t r = a.rows(), c = a.cols();
    RatMat aug(c, r + 1);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = a(j, i);
        aug(i, r) = b[i];
    }
    auto piv = rref(aug);
    RatVec x(r, Rat(0));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == r) return std::nullopt;  // inconsistent
        x[piv[i]] = aug(i, r);
    }
    // check consistency of remaining rows (all-zero rows with nonzero rhs
    // already caught by pivot at column r)
    return x;
}

RatMat left_kernel(const RatMat& a) {
    // Kernel of x -> x * a: row-reduce a^T and read the free directions.
    RatMat t = a.transpose();
    auto piv = rref(t);
    std::size_t r = a.rows();
    std::vector<bool> is_pivot(r, false);
    for (auto p : piv) is_pivot[p] = true;
    RatMat k(r - piv.size(), r);
    std::size_t kr = 0;
    for (std::size_t free = 0; free < r; ++free) {
        if (is_pivot[free]) continue;
        k(kr, free) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) k(kr, piv[i]) = -t(i, free);
        ++kr;
    }
    return k;
}

}  // namespace orbilat

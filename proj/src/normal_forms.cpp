#include "orbilat/normal_forms.hpp"

namespace orbilat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division quotient
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HnfResult hnf(const IntMat& m) {
    IntMat a = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // gcd-eliminate below position (row, col), smallest pivot first
        while (true) {
            std::size_t best = a.rows();
            for (std::size_t i = row; i < a.rows(); ++i) {
                if (a(i, col) == 0) continue;
                if (best == a.rows() || abs_int(a(i, col)) < abs_int(a(best, col))) best = i;
            }
            if (best == a.rows()) break;  // column clear
            if (best != row) {
                a.swap_rows(row, best);
                u.swap_rows(row, best);
            }
            bool reduced_all = true;
            for (std::size_t i = row + 1; i < a.rows(); ++i) {
                if (a(i, col) == 0) continue;
                Int q = fdiv(a(i, col), a(row, col));
                if (q != 0) {
                    a.row_axpy(i, row, q);
                    u.row_axpy(i, row, q);
                }
                if (a(i, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0) {
            a.scale_row(row, Int(-1));
            u.scale_row(row, Int(-1));
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = fdiv(a(i, col), a(row, col));
            if (q != 0) {
                a.row_axpy(i, row, q);
                u.row_axpy(i, row, q);
            }
        }
        ++row;
    }
    return {a, u};
}

IntMat hnf_basis(const IntMat& m) {
    IntMat h = hnf(m).h;
    std::size_t r = h.rows();
    while (r > 0) {
        bool zero = true;
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h(r - 1, c) != 0) {
                zero = false;
                break;
            }
        if (!zero) break;
        --r;
    }
    IntMat out(r, h.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < h.cols(); ++c) out(i, c) = h(i, c);
    return out;
}

SnfResult snf(const IntMat& m) {
    IntMat a = m;
    IntMat u = IntMat::identity(m.rows());
    IntMat v = IntMat::identity(m.cols());
    std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // locate smallest nonzero entry in the trailing block
            std::size_t pi = a.rows(), pj = a.cols();
            for (std::size_t i = t; i < a.rows(); ++i)
                for (std::size_t j = t; j < a.cols(); ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi == a.rows() || abs_int(a(i, j)) < abs_int(a(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == a.rows()) {
                // trailing block is zero; done for all remaining t
                goto divisibility;
            }
            if (pi != t) {
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Int q = fdiv(a(i, t), a(t, t));
                if (q != 0) {
                    a.row_axpy(i, t, q);
                    u.row_axpy(i, t, q);
                }
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Int q = fdiv(a(t, j), a(t, t));
                if (q != 0) {
                    a.col_axpy(j, t, q);
                    v.col_axpy(j, t, q);
                }
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot divides everything in its row/col; enforce divisibility
            // against the rest of the trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < a.cols() && !fixed; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        // add row i to row t to pull the bad entry in reach
                        a.row_axpy(t, i, Int(-1));
                        u.row_axpy(t, i, Int(-1));
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (a(t, t) < 0) {
            a.scale_row(t, Int(-1));
            u.scale_row(t, Int(-1));
        }
    }
divisibility:
    return {a, u, v};
}

Int det_int(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    // Bareiss fraction-free elimination
    IntMat a = m;
    std::size_t n = a.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMat integral_left_kernel(const RatMat& a) {
    Int d = denominator_lcm(a);
    IntMat ai(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rat scaled = a(i, j) * Rat(d);
            ai(i, j) = scaled.get_num();
        }
    SnfResult s = snf(ai);
    std::size_t n = std::min(ai.rows(), ai.cols());
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < ai.rows(); ++i) {
        if (i >= n || s.s(i, i) == 0) free_rows.push_back(i);
    }
    IntMat k(free_rows.size(), a.rows());
    for (std::size_t r = 0; r < free_rows.size(); ++r)
        for (std::size_t c = 0; c < a.rows(); ++c) k(r, c) = s.u(free_rows[r], c);
    return k;
}

}  // namespace orbilat

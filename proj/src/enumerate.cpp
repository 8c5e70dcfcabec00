#include "orbilat/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace orbilat {

namespace {

// Gram-Schmidt data for LLL: mu (strictly lower triangular) and the squared
// norms of the orthogonalised vectors.
struct Gso {
    RatMat mu;
    std::vector<Rat> b;
};

Gso gso_from_gram(const RatMat& g) {
    std::size_t n = g.rows();
    Gso out{RatMat(n, n), std::vector<Rat>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat num = g(i, j);
            for (std::size_t l = 0; l < j; ++l) num -= out.mu(j, l) * out.mu(i, l) * out.b[l];
            if (out.b[j] == 0) throw std::invalid_argument("Gram matrix is singular");
            out.mu(i, j) = num / out.b[j];
        }
        Rat bi = g(i, i);
        for (std::size_t l = 0; l < i; ++l) bi -= out.mu(i, l) * out.mu(i, l) * out.b[l];
        out.b[i] = bi;
        if (out.b[i] <= 0) throw std::invalid_argument("Gram matrix not positive definite");
    }
    return out;
}

Int round_rat(const Rat& r) {
    // nearest integer, ties toward -inf (any fixed rule works for LLL)
    return floor_rat(r + Rat(1, 2));
}

}  // namespace

IntMat lll_transform(const RatMat& gram, const Rat& delta) {
    std::size_t n = gram.rows();
    IntMat u = IntMat::identity(n);
    if (n <= 1) return u;
    RatMat g = gram;

    auto apply_row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        // row_i -= q * row_j on the implicit basis; update u and g
        u.row_axpy(i, j, Rat(q).get_num());
        Rat qr(q);
        // g = U G U^T: update row and column i
        for (std::size_t c = 0; c < n; ++c) g(i, c) -= qr * g(j, c);
        for (std::size_t r = 0; r < n; ++r) g(r, i) -= qr * g(r, j);
    };

    Gso s = gso_from_gram(g);
    std::size_t k = 1;
    while (k < n) {
        // size-reduce row k
        for (std::size_t j = k; j-- > 0;) {
            Int q = round_rat(s.mu(k, j));
            if (q != 0) {
                apply_row_op(k, j, q);
                s = gso_from_gram(g);
            }
        }
        Rat lhs = s.b[k];
        Rat rhs = (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.b[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            u.swap_rows(k, k - 1);
            g.swap_rows(k, k - 1);
            g.swap_cols(k, k - 1);
            s = gso_from_gram(g);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return u;
}

namespace {

// Fincke-Pohst over the quadratic form Q(y) = sum_i q_ii (y_i + sum_{j>i}
// q_ij y_j)^2, visiting every integer offset x with Q(x + c) <= bound.
// Candidates at each level are walked zig-zag around the center so the
// range needs no square roots, only exact comparisons.
struct Enumerator {
    std::size_t n;
    RatMat q;      // Cholesky-style coefficients
    RatVec c;      // coset shift in reduced coordinates
    Rat bound;
    std::function<void(const std::vector<Int>&, const Rat&)> emit;

    std::vector<Int> x;
    // partial centers: sums[k][i] = c_i + sum_{j >= k} q_ij y_j for i < k,
    // so the center at level i is sums[i+1][i]
    std::vector<RatVec> sums;

    void run() {
        x.assign(n, Int(0));
        if (n == 0) {
            if (bound >= 0) emit(x, Rat(0));
            return;
        }
        sums.assign(n + 1, RatVec(n, Rat(0)));
        sums[n] = c;
        descend(n - 1, bound);
    }

    // nearest integer to -m (ties are harmless, both neighbours get visited)
    static Int center_round(const Rat& m) {
        Rat half = -m + Rat(1, 2);
        return floor_rat(half);
    }

    void try_candidate(std::size_t i, const Rat& t, const Rat& m, const Int& v, bool& alive) {
        Rat yi = Rat(v) + m;
        Rat used = q(i, i) * yi * yi;
        if (used > t) {
            alive = false;
            return;
        }
        x[i] = v;
        if (i == 0) {
            emit(x, bound - (t - used));
        } else {
            // y_i = x_i + c_i fixed; extend the partial centers one level
            Rat y_i = Rat(v) + c[i];
            if (y_i == 0) {
                for (std::size_t r = 0; r < i; ++r) sums[i][r] = sums[i + 1][r];
            } else {
                for (std::size_t r = 0; r < i; ++r) {
                    if (q(r, i) != 0)
                        sums[i][r] = sums[i + 1][r] + q(r, i) * y_i;
                    else
                        sums[i][r] = sums[i + 1][r];
                }
            }
            descend(i - 1, t - used);
        }
    }

    // remaining budget t at level i; y_j fixed for j > i
    void descend(std::size_t i, const Rat& t) {
        const Rat m = sums[i + 1][i];
        Int v0 = center_round(m);
        bool up = true, down = true;
        try_candidate(i, t, m, v0, up);
        down = up;
        for (Int step = 1; up || down; ++step) {
            if (up) {
                Int v = v0 + step;
                try_candidate(i, t, m, v, up);
            }
            if (down) {
                Int v = v0 - step;
                try_candidate(i, t, m, v, down);
            }
        }
    }
};

struct PreparedLattice {
    RatMat basis;  // LLL-reduced basis rows
    RatMat chol;   // Fincke-Pohst coefficients of the reduced Gram
};

PreparedLattice prepare(const Lattice& l) {
    PreparedLattice out;
    RatMat g = l.gram();
    IntMat u = lll_transform(g);
    RatMat ur = to_rat(u);
    out.basis = ur * l.basis();
    RatMat gr = ur * g * ur.transpose();
    // in-place Fincke-Pohst decomposition (Cohen, Alg. 2.7.3)
    std::size_t n = gr.rows();
    RatMat q = gr;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) = q(i, j) / q(i, i);
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t m = k; m < n; ++m) q(k, m) -= q(k, i) * q(i, m);
    }
    out.chol = q;
    return out;
}

void enumerate_raw_impl(const Lattice& l, const Rat& bound, const std::optional<RatVec>& coset_rep,
                        bool need_vectors, const std::function<void(const RatVec&, const Rat&)>& visit) {
    if (bound < 0) return;
    std::size_t n = l.rank();
    static const RatVec kNoVector;
    if (n == 0) {
        if (coset_rep) {
            Rat nn = l.inner(*coset_rep, *coset_rep);
            if (nn <= bound) visit(need_vectors ? *coset_rep : kNoVector, nn);
        } else {
            RatVec zero(l.ambient_dim(), Rat(0));
            visit(need_vectors ? zero : kNoVector, Rat(0));
        }
        return;
    }
    PreparedLattice prep = prepare(l);
    RatVec shift(n, Rat(0));
    if (coset_rep) {
        auto c = solve_left(prep.basis, *coset_rep);
        if (!c) throw std::invalid_argument("coset representative outside rational span of lattice");
        shift = *c;
    }
    Enumerator e;
    e.n = n;
    e.q = prep.chol;
    e.c = shift;
    e.bound = bound;
    if (need_vectors) {
        e.emit = [&](const std::vector<Int>& x, const Rat& norm) {
            RatVec v(l.ambient_dim(), Rat(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] == 0 && shift[i] == 0) continue;
                Rat coef = Rat(x[i]) + shift[i];
                for (std::size_t j = 0; j < l.ambient_dim(); ++j) v[j] += coef * prep.basis(i, j);
            }
            visit(v, norm);
        };
    } else {
        e.emit = [&](const std::vector<Int>&, const Rat& norm) { visit(kNoVector, norm); };
    }
    e.run();
}

void enumerate_raw(const Lattice& l, const Rat& bound, const std::optional<RatVec>& coset_rep,
                   const std::function<void(const RatVec&, const Rat&)>& visit) {
    enumerate_raw_impl(l, bound, coset_rep, true, visit);
}

void enumerate_norms_only(const Lattice& l, const Rat& bound, const std::optional<RatVec>& coset_rep,
                          const std::function<void(const Rat&)>& visit) {
    enumerate_raw_impl(l, bound, coset_rep, false, [&](const RatVec&, const Rat& nn) { visit(nn); });
}

}  // namespace

std::vector<RatVec> enumerate_up_to_norm(const Lattice& l, const Rat& bound,
                                         const std::optional<RatVec>& coset_rep) {
    std::vector<RatVec> out;
    enumerate_raw(l, bound, coset_rep, [&](const RatVec& v, const Rat&) { out.push_back(v); });
    std::sort(out.begin(), out.end(), [](const RatVec& a, const RatVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    return out;
}

Int count_up_to_norm(const Lattice& l, const Rat& bound, const std::optional<RatVec>& coset_rep) {
    Int n = 0;
    enumerate_norms_only(l, bound, coset_rep, [&](const Rat&) { ++n; });
    return n;
}

Int count_of_norm(const Lattice& l, const Rat& value, const std::optional<RatVec>& coset_rep) {
    Int n = 0;
    enumerate_norms_only(l, value, coset_rep, [&](const Rat& nn) {
        if (nn == value) ++n;
    });
    return n;
}

std::optional<Rat> min_norm(const Lattice& l, const Rat& search_cap, const std::optional<RatVec>& coset_rep) {
    std::optional<Rat> best;
    if (coset_rep) {
        enumerate_norms_only(l, search_cap, coset_rep, [&](const Rat& nn) {
            if (!best || nn < *best) best = nn;
        });
    } else {
        enumerate_norms_only(l, search_cap, coset_rep, [&](const Rat& nn) {
            if (nn == 0) return;  // skip the zero vector
            if (!best || nn < *best) best = nn;
        });
    }
    return best;
}

bool is_rootless(const Lattice& l) {
    return count_of_norm(l, Rat(2)) == 0;
}

std::vector<std::pair<long, Int>> theta_prefix(const Lattice& l, long max_norm) {
    if (!l.is_even()) throw std::invalid_argument("theta_prefix requires an even lattice");
    if (max_norm < 0 || max_norm % 2 != 0) throw std::invalid_argument("max_norm must be a nonnegative even integer");
    std::vector<Int> counts(static_cast<std::size_t>(max_norm / 2) + 1, Int(0));
    enumerate_norms_only(l, Rat(max_norm), std::nullopt, [&](const Rat& nn) {
        if (!is_integer(nn)) throw std::logic_error("odd norm in even lattice");
        long v = to_long(nn.get_num());
        if (v % 2 != 0) throw std::logic_error("odd norm in even lattice");
        counts[static_cast<std::size_t>(v / 2)] += 1;
    });
    std::vector<std::pair<long, Int>> out;
    for (long nrm = 0; nrm <= max_norm; nrm += 2) out.emplace_back(nrm, counts[static_cast<std::size_t>(nrm / 2)]);
    return out;
}

}  // namespace orbilat

#include "orbilat/triality.hpp"

#include <stdexcept>

namespace orbilat {

namespace {

CycloMat zero_mat(long k, std::size_t n) {
    return CycloMat(n, std::vector<CycloElem>(n, CycloElem::zero(k)));
}

// inverse of Z0: (1/k) * (w^{-ab})
CycloMat z0_inverse(long k) {
    std::size_t n = static_cast<std::size_t>(k);
    CycloMat m = zero_mat(k, n);
    Rat inv_k = make_rat(1, k);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b)
            m[a - 1][b - 1] = CycloElem::zeta(k, -static_cast<long>(a) * static_cast<long>(b)) * inv_k;
    return m;
}

CycloMat f_inverse(long k) {
    std::size_t n = static_cast<std::size_t>(k);
    CycloMat m = zero_mat(k, n);
    for (std::size_t j = 1; j <= n; ++j) m[j - 1][j - 1] = CycloElem::zeta(k, -static_cast<long>(j));
    return m;
}

CycloMat g_inverse(long k) {
    std::size_t n = static_cast<std::size_t>(k);
    CycloMat m = zero_mat(k, n);
    for (std::size_t i = 0; i < n; ++i) m[(i + 1) % n][i] = CycloElem::one(k);
    return m;
}

}  // namespace

TrialityMatrices build_fgz(long k) {
    if (k < 2) throw std::invalid_argument("build_fgz: k >= 2 required");
    std::size_t n = static_cast<std::size_t>(k);
    TrialityMatrices t;
    t.k = k;
    t.f = zero_mat(k, n);
    t.g = zero_mat(k, n);
    t.z0 = zero_mat(k, n);
    for (std::size_t j = 1; j <= n; ++j) t.f[j - 1][j - 1] = CycloElem::zeta(k, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) t.g[i][(i + 1) % n] = CycloElem::one(k);
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b)
            t.z0[a - 1][b - 1] = CycloElem::zeta(k, static_cast<long>(a) * static_cast<long>(b));
    return t;
}

CycloMat cyclo_mat_mul(const CycloMat& a, const CycloMat& b) {
    std::size_t n = a.size();
    long k = a[0][0].conductor();
    CycloMat c = zero_mat(k, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[l][j].is_zero()) continue;
                c[i][j] = c[i][j] + a[i][l] * b[l][j];
            }
        }
    return c;
}

bool cyclo_mat_eq(const CycloMat& a, const CycloMat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

CycloMat cyclo_mat_scale(const CycloMat& a, const Rat& r) {
    CycloMat c = a;
    for (auto& row : c)
        for (auto& e : row) e = e * r;
    return c;
}

CycloMat cyclo_identity(long k, std::size_t n) {
    CycloMat m = zero_mat(k, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = CycloElem::one(k);
    return m;
}

bool verify_sfg(long k) {
    TrialityMatrices t = build_fgz(k);
    std::size_t n = static_cast<std::size_t>(k);
    CycloMat z0i = z0_inverse(k);
    CycloMat id = cyclo_identity(k, n);
    // sanity on the closed-form inverses
    if (!cyclo_mat_eq(cyclo_mat_mul(t.z0, z0i), id)) return false;
    // Z^{-1} G Z = F (the 1/sqrt(k) factors cancel in conjugation)
    if (!cyclo_mat_eq(cyclo_mat_mul(z0i, cyclo_mat_mul(t.g, t.z0)), t.f)) return false;
    // G^{-1} F G = w^{-1} F
    {
        CycloMat lhs = cyclo_mat_mul(g_inverse(k), cyclo_mat_mul(t.f, t.g));
        CycloMat rhs = t.f;
        CycloElem w_inv = CycloElem::zeta(k, -1);
        for (auto& row : rhs)
            for (auto& e : row) e = e * w_inv;
        if (!cyclo_mat_eq(lhs, rhs)) return false;
    }
    // Z^{-2} G Z^2 = G^{-1}
    {
        CycloMat z2 = cyclo_mat_mul(t.z0, t.z0);
        CycloMat z2i = cyclo_mat_mul(z0i, z0i);
        CycloMat lhs = cyclo_mat_mul(z2i, cyclo_mat_mul(t.g, z2));
        if (!cyclo_mat_eq(lhs, g_inverse(k))) return false;
    }
    // F^k = G^k = I
    {
        CycloMat fk = id, gk = id;
        for (long i = 0; i < k; ++i) {
            fk = cyclo_mat_mul(fk, t.f);
            gk = cyclo_mat_mul(gk, t.g);
        }
        if (!cyclo_mat_eq(fk, id) || !cyclo_mat_eq(gk, id)) return false;
    }
    return true;
}

namespace {

struct ConjOps {
    long k;
    std::size_t n;
    CycloMat f, fi, g, gi, z0, z0i;

    CycloMat phi(const CycloMat& x) const { return cyclo_mat_mul(fi, cyclo_mat_mul(x, f)); }
    CycloMat ghat(const CycloMat& x) const { return cyclo_mat_mul(gi, cyclo_mat_mul(x, g)); }
    CycloMat ghat_inv(const CycloMat& x) const { return cyclo_mat_mul(g, cyclo_mat_mul(x, gi)); }
    CycloMat zeta(const CycloMat& x) const { return cyclo_mat_mul(z0i, cyclo_mat_mul(x, z0)); }
    CycloMat zeta_inv(const CycloMat& x) const {
        // Z0 X Z0^{-1}
        return cyclo_mat_mul(z0, cyclo_mat_mul(x, z0i));
    }
};

ConjOps make_ops(long k) {
    TrialityMatrices t = build_fgz(k);
    ConjOps o;
    o.k = k;
    o.n = static_cast<std::size_t>(k);
    o.f = t.f;
    o.g = t.g;
    o.z0 = t.z0;
    o.fi = f_inverse(k);
    o.gi = g_inverse(k);
    o.z0i = z0_inverse(k);
    return o;
}

// basis of the traceless k x k matrices: E_ij (i != j) and
// E_ii - E_{i+1,i+1}
std::vector<CycloMat> traceless_basis(long k) {
    std::size_t n = static_cast<std::size_t>(k);
    std::vector<CycloMat> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            CycloMat e = zero_mat(k, n);
            e[i][j] = CycloElem::one(k);
            basis.push_back(std::move(e));
        }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        CycloMat e = zero_mat(k, n);
        e[i][i] = CycloElem::one(k);
        e[i + 1][i + 1] = -CycloElem::one(k);
        basis.push_back(std::move(e));
    }
    return basis;
}

}  // namespace

bool verify_conjugation_relations(long k) {
    ConjOps o = make_ops(k);
    auto basis = traceless_basis(k);
    // zeta^{-1} ghat zeta = phi and zeta^{-1} phi zeta = ghat^{-1}, read as
    // operator identities X -> zeta(ghat(zeta^{-1}(X))) etc.
    for (const auto& x : basis) {
        if (!cyclo_mat_eq(o.zeta(o.ghat(o.zeta_inv(x))), o.phi(x))) return false;
        if (!cyclo_mat_eq(o.zeta(o.phi(o.zeta_inv(x))), o.ghat_inv(x))) return false;
        if (!cyclo_mat_eq(o.phi(o.ghat(x)), o.ghat(o.phi(x)))) return false;
    }
    // orders of phi and ghat are exactly k as operators on the traceless part
    for (long order = 1; order <= k; ++order) {
        bool phi_id = true, ghat_id = true;
        for (const auto& x : basis) {
            CycloMat px = x, gx = x;
            for (long i = 0; i < order; ++i) {
                px = o.phi(px);
                gx = o.ghat(gx);
            }
            if (!cyclo_mat_eq(px, x)) phi_id = false;
            if (!cyclo_mat_eq(gx, x)) ghat_id = false;
            if (!phi_id && !ghat_id) break;
        }
        if (order < k && (phi_id || ghat_id)) return false;
        if (order == k && (!phi_id || !ghat_id)) return false;
    }
    return true;
}

bool verify_weight_grading(long k) {
    ConjOps o = make_ops(k);
    std::size_t n = o.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CycloMat e = zero_mat(k, n);
            e[i][j] = CycloElem::one(k);
            CycloMat conj = o.phi(e);
            CycloMat expect = e;
            // F = diag(w^1..w^k) with 1-based exponents; the eigenvalue of
            // conjugation on E_ij is w^{j-i}
            expect[i][j] = CycloElem::zeta(k, static_cast<long>(j) - static_cast<long>(i));
            if (!cyclo_mat_eq(conj, expect)) return false;
        }
    return true;
}

}  // namespace orbilat

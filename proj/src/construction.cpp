#include "orbilat/construction.hpp"

#include <numeric>

#include "orbilat/root_system.hpp"

namespace orbilat {

long ConstructionContext::n() const {
    long l = 1;
    for (long k : ks) l = std::lcm(l, k);
    return l;
}

ConstructionContext make_context(const std::vector<long>& ks) {
    if (ks.empty()) throw std::invalid_argument("context needs at least one component");
    ConstructionContext ctx;
    ctx.ks = ks;
    for (long k : ks) {
        if (k < 2) throw std::invalid_argument("component orders must be >= 2");
        ctx.offsets.push_back(ctx.ambient);
        ctx.ambient += static_cast<std::size_t>(k);
    }
    std::size_t rank = ctx.ambient - ks.size();
    RatMat basis(rank, ctx.ambient);
    std::size_t row = 0;
    ctx.chi.assign(ctx.ambient, Rat(0));
    for (std::size_t i = 0; i < ks.size(); ++i) {
        long k = ks[i];
        std::size_t off = ctx.offsets[i];
        for (long j = 0; j + 1 < k; ++j) {
            basis(row, off + static_cast<std::size_t>(j)) = 1;
            basis(row, off + static_cast<std::size_t>(j) + 1) = -1;
            ++row;
        }
        RatVec rho = weyl_vector(k);
        for (long j = 0; j < k; ++j) ctx.chi[off + static_cast<std::size_t>(j)] = rho[static_cast<std::size_t>(j)] / k;
    }
    ctx.root_lattice = Lattice(ctx.ambient, basis);
    return ctx;
}

ConstructionContext make_context(long p, long t) {
    return make_context(std::vector<long>(static_cast<std::size_t>(t), p));
}

RatVec lambda_x(const ConstructionContext& ctx, const std::vector<long>& x) {
    if (x.size() != ctx.ks.size()) throw std::invalid_argument("lambda_x: component count mismatch");
    RatVec v(ctx.ambient, Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        long k = ctx.ks[i];
        long xi = x[i] % k;
        if (xi < 0) xi += k;
        if (xi == 0) continue;
        RatVec w = fundamental_weight(k, xi);
        for (long j = 0; j < k; ++j) v[ctx.offsets[i] + static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)];
    }
    return v;
}

Lattice construct_A(const ConstructionContext& ctx, const std::vector<std::vector<long>>& code_gens) {
    std::vector<RatVec> glue_vectors;
    for (const auto& c : code_gens) glue_vectors.push_back(lambda_x(ctx, c));
    return glue(ctx.root_lattice, glue_vectors);
}

Lattice construct_A(const ConstructionContext& ctx, const CodeZp& c) {
    if (static_cast<long>(ctx.ks.size()) != c.t) throw std::invalid_argument("code length / context mismatch");
    return construct_A(ctx, c.gen);
}

Lattice integrality_sublattice(const Lattice& l, const RatVec& w) {
    // coordinates x with (x.B | w) = x . u integral, u = scale * B w^T
    std::size_t r = l.rank();
    RatVec u(r);
    for (std::size_t i = 0; i < r; ++i) u[i] = l.inner_scale() * dot(l.basis().row(i), w);
    Int den = 1;
    for (const auto& e : u) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
    if (den == 1) return l;
    // solve sum x_i a_i = 0 mod den with a_i = u_i * den
    RatMat sys(r + 1, 1);
    for (std::size_t i = 0; i < r; ++i) sys(i, 0) = u[i] * Rat(den);
    sys(r, 0) = Rat(den);
    IntMat k = integral_left_kernel(sys);  // rows (x, y) with x.a + y*den = 0
    RatMat coords(k.rows(), r);
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < r; ++j) coords(i, j) = Rat(k(i, j));
    RatMat basis_rows = coords * l.basis();
    return Lattice(l.ambient_dim(), basis_rows, l.inner_scale());
}

Lattice construct_B(const ConstructionContext& ctx, const std::vector<std::vector<long>>& code_gens) {
    Lattice la = construct_A(ctx, code_gens);
    return integrality_sublattice(la, ctx.chi);
}

Lattice construct_B(const ConstructionContext& ctx, const CodeZp& c) {
    if (static_cast<long>(ctx.ks.size()) != c.t) throw std::invalid_argument("code length / context mismatch");
    return construct_B(ctx, c.gen);
}

LatticeIsometry g_delta_e(const ConstructionContext& ctx, const std::vector<long>& e, const Lattice& on) {
    if (e.size() != ctx.ks.size()) throw std::invalid_argument("g_delta_e: component count mismatch");
    std::vector<int> perm(ctx.ambient);
    for (std::size_t i = 0; i < ctx.ks.size(); ++i) {
        long k = ctx.ks[i];
        long ei = e[i] % k;
        if (ei < 0) ei += k;
        for (long j = 0; j < k; ++j) {
            std::size_t src = ctx.offsets[i] + static_cast<std::size_t>(j);
            std::size_t dst = ctx.offsets[i] + static_cast<std::size_t>((j + ei) % k);
            perm[src] = static_cast<int>(dst);
        }
    }
    return isometry_from_permutation(on, perm);
}

ExtraPreconditions verify_extra_preconditions(const ConstructionContext& ctx,
                                              const std::vector<std::vector<long>>& code_gens,
                                              const std::vector<long>& e) {
    ExtraPreconditions out;
    out.n = ctx.n();
    out.fixed_point_free = true;
    for (std::size_t i = 0; i < ctx.ks.size(); ++i) {
        long ei = e[i] % ctx.ks[i];
        if (ei < 0) ei += ctx.ks[i];
        if (std::gcd(ei, ctx.ks[i]) != 1) out.fixed_point_free = false;
    }
    Lattice la = construct_A(ctx, code_gens);
    Lattice lb = integrality_sublattice(la, ctx.chi);
    out.index_ab = index(lb, la);
    out.index_matches_n = (Rat(out.index_ab) == Rat(out.n));
    // cross-check via the dual condition chi in (1/n) L_A(C)*
    {
        RatVec scaled(ctx.ambient);
        for (std::size_t i = 0; i < ctx.ambient; ++i) scaled[i] = ctx.chi[i] * Rat(out.n);
        bool dual_cond = dual(la).contains(scaled);
        if (dual_cond != out.index_matches_n)
            throw std::logic_error("index/chi-dual condition mismatch (internal inconsistency)");
    }
    out.lambda_e_in_dual = dual(la).contains(lambda_x(ctx, e));
    return out;
}

ExtraPreconditions verify_extra_preconditions(const ConstructionContext& ctx, const CodeZp& c,
                                              const std::vector<long>& e) {
    return verify_extra_preconditions(ctx, c.gen, e);
}

}  // namespace orbilat

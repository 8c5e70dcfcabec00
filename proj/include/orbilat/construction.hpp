#pragma once

#include "orbilat/codes.hpp"
#include "orbilat/isometry.hpp"
#include "orbilat/lattice.hpp"

namespace orbilat {

// Ambient data for Constructions A/B over the orthogonal sum
// R = A_{k_1 - 1} | ... | A_{k_t - 1}, each component in its standard Z^{k_i}
// coordinate block, with the fixed standard base per component.
struct ConstructionContext {
    std::vector<long> ks;               // component orders k_1..k_t
    std::vector<std::size_t> offsets;   // ambient offset of each block
    std::size_t ambient = 0;            // sum of k_i
    Lattice root_lattice;               // R
    RatVec chi;                         // (rho_1/k_1, ..., rho_t/k_t)

    long t() const { return static_cast<long>(ks.size()); }
    long n() const;  // lcm of the k_i
};

ConstructionContext make_context(const std::vector<long>& ks);
ConstructionContext make_context(long p, long t);

// lambda_x = (lambda_{x_1}, ..., lambda_{x_t}) in R*, x_i in 0..k_i-1
RatVec lambda_x(const ConstructionContext& ctx, const std::vector<long>& x);

// Z-span of R and the lambda_c over the generators of the subgroup C
Lattice construct_A(const ConstructionContext& ctx, const std::vector<std::vector<long>>& code_gens);
Lattice construct_A(const ConstructionContext& ctx, const CodeZp& c);

// { v in L_A(C) : (v | chi) in Z }
Lattice construct_B(const ConstructionContext& ctx, const std::vector<std::vector<long>>& code_gens);
Lattice construct_B(const ConstructionContext& ctx, const CodeZp& c);

// { v in l : (v|w) in Z } for an ambient vector w
Lattice integrality_sublattice(const Lattice& l, const RatVec& w);

// block isometry (g_1^{e_1}, ..., g_t^{e_t}) acting on the given lattice
// (throws if the lattice is not preserved)
LatticeIsometry g_delta_e(const ConstructionContext& ctx, const std::vector<long>& e, const Lattice& on);

struct ExtraPreconditions {
    bool fixed_point_free = false;   // gcd(e_i, k_i) = 1 for all i
    bool index_matches_n = false;    // |L_A : L_B| = n, i.e. chi in (1/n) L_A*
    bool lambda_e_in_dual = false;   // lambda_e in L_A(C)*
    Int n = 0;
    Int index_ab = 0;
    bool ok() const { return fixed_point_free && index_matches_n && lambda_e_in_dual; }
};

ExtraPreconditions verify_extra_preconditions(const ConstructionContext& ctx,
                                              const std::vector<std::vector<long>>& code_gens,
                                              const std::vector<long>& e);
ExtraPreconditions verify_extra_preconditions(const ConstructionContext& ctx, const CodeZp& c,
                                              const std::vector<long>& e);

}  // namespace orbilat

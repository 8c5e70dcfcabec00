#pragma once

#include <optional>
#include <string>

#include "orbilat/codes.hpp"
#include "orbilat/construction.hpp"
#include "orbilat/isometry.hpp"
#include "orbilat/quadspace.hpp"
#include "orbilat/root_system.hpp"

namespace orbilat {

// conformal weight of a twisted module: m(p+1)/(24p)
Rat epsilon_weight(long p, long m);

// (dim T)^2 = [L : R_L^{g^s}] with R_L^{g^s} = ((1-g^s)L*) cap L
Int dim_t_squared(const LatticeIsometry& g, long s);

// p^{-m/(p-1)} |D(L)| [L : R_L^{g^s}]
Rat qdim_squared(const LatticeIsometry& g, long s);

struct CosetWeight {
    std::vector<long> coords;  // over the discriminant generators
    Rat min_norm;
    Rat weight;  // min_norm / 2
};

struct ConformalWeightReport {
    long p;
    Rat eps;
    std::vector<Rat> twisted_ladder;       // eps + i/p
    std::vector<CosetWeight> untwisted;    // one entry per nonzero coset
    bool corollary_holds;                  // all weights land in {0} cup ladder
    bool has_even_norm_coset;              // some nonzero coset of even minimal norm
};

// requires (1-g)L* contained in L
ConformalWeightReport conformal_weight_data(const LatticeIsometry& g);

// witness data recovered from a lattice satisfying the Construction-B
// characterisation: the code, the acting exponent vector, and the base
struct ChabResult {
    CodeZp code;
    std::vector<long> e;
    std::vector<std::vector<RatVec>> bases;  // ordered base per component
    Lattice n_lattice;                       // N = Span{lambda, L}
    bool fingerprint_match;                  // construct_B(code) matches L on invariants
};

// Constructive extraction of Theorem-style data from (L, g, lambda):
// decomposes N(2), reads the code N/R and the exponent vector of g.
ChabResult chab_extract(const LatticeIsometry& g, const RatVec& lambda);

struct ExtraAutVerdict {
    bool has_extra = false;
    std::string branch = "none";  // B-construction(p=2) | B-construction(p odd) | Leech-11A | Leech-23A | none
    std::optional<RatVec> witness_coset;
    std::optional<ChabResult> witness_chab;
    std::string detail;
};

ExtraAutVerdict decide_extra(const LatticeIsometry& g);

struct OrbifoldParams {
    long p;
    long m;
    Rat eps;
    std::string case_tag;  // "eps=1-1/p" or "eps=1"
    Int disc_order;
    long disc_rank;            // |D(L)| = p^disc_rank
    long t;                    // m/(p-1)
    std::optional<long> dim_c;  // code dimension when a Construction-B code exists
};

std::vector<OrbifoldParams> case2_parameter_table(long p);

struct WeightOneDim {
    long total;
    bool is_24;
};

WeightOneDim orbifold_weight_one_dim(long rank_fixed, long rank_coinv, long p);

// all coset representatives of the discriminant group (order capped)
std::vector<RatVec> all_coset_reps(const DiscriminantGroup& d);

}  // namespace orbilat

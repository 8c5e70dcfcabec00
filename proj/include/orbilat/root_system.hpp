#pragma once

#include "orbilat/isometry.hpp"
#include "orbilat/lattice.hpp"

namespace orbilat {

// Standard model of the root lattice A_{k-1}: { a in Z^k : sum a_i = 0 },
// with simple roots alpha_i = v_i - v_{i+1}.
struct TypeALattice {
    long k;
    Lattice lattice;
    std::vector<RatVec> simple_roots;
};

TypeALattice make_type_a(long k);

// lambda_j = ((k-j) * sum_{i<=j} v_i - j * sum_{i>j} v_i) / k; lambda_0 = 0.
RatVec fundamental_weight(long k, long j);

// rho = sum_j lambda_j = (k-1, k-3, ..., 1-k)/2
RatVec weyl_vector(long k);

// cyclic coordinate shift (x_1,...,x_k) -> (x_k,x_1,...,x_{k-1}) on A_{k-1}
LatticeIsometry coxeter_isometry(long k);

// true iff (beta|rho) is nonzero mod k for every root beta of A_{k-1}
bool check_rho_pairing(long k);

struct RootComponent {
    std::vector<RatVec> base;  // ordered path alpha_1, ..., alpha_{p-1}
    RatVec negated_highest;
};

struct RootDecomposition {
    std::vector<RootComponent> components;
    std::vector<RatVec> leftover;  // vectors of incomplete components
};

// Partitions a set of norm-2 vectors (pairwise inner products 0 or -1) into
// affine A_{p-1} cycles plus leftovers. Within a full cycle the base starts
// at the lexicographically smallest vector and walks toward its
// lexicographically smaller neighbour.
RootDecomposition decompose_root_set(const std::vector<RatVec>& x, long p, const Rat& inner_scale = Rat(1));

// Fundamental weight lambda_m of an embedded A_{p-1} copy given its ordered
// base of simple roots: the unique vector in the span with
// (lambda_m | alpha_j) = delta_{mj}.
RatVec weight_of_base(const std::vector<RatVec>& base, std::size_t m, const Rat& inner_scale = Rat(1));

}  // namespace orbilat

#pragma once

#include "orbilat/lattice.hpp"

namespace orbilat {

// The discriminant quadratic form q(x) = (p/2)(x|x) mod p on a p-elementary
// discriminant group, stored via lifted generators.
struct QuadraticSpaceFp {
    long p = 3;
    std::size_t dim = 0;
    std::vector<RatVec> generators;  // lifts in L*
    RatMat gen_gram;                 // rational Gram of the lifts

    // q of an element given by coordinates over the generators
    long q_of(const std::vector<long>& coords) const;
    // polar form b(x,y) = q(x+y) - q(x) - q(y)
    long b_of(const std::vector<long>& x, const std::vector<long>& y) const;
};

QuadraticSpaceFp discriminant_form(const Lattice& l, long p);

// nonzero coordinate tuples with q = 0
std::vector<std::vector<long>> singular_vectors(const QuadraticSpaceFp& q);

enum class QuadraticType { Plus, Minus, Degenerate };

// Even dimension: split/non-split type, cross-checked between the singular
// point count and the square class of (-1)^(dim/2) det. Odd dimension:
// labelled by the square class of the discriminant.
QuadraticType quadratic_type(const QuadraticSpaceFp& q);

const char* quadratic_type_name(QuadraticType t);

}  // namespace orbilat

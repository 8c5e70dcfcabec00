#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbilat/lattice.hpp"

namespace orbilat {

// Exact LLL on a Gram matrix (delta = 3/4 by default). Returns a unimodular
// transform U with U * G * U^T reduced.
IntMat lll_transform(const RatMat& gram, const Rat& delta = Rat(3, 4));

// All vectors v in L (or coset_rep + L) with (v|v) <= bound, as ambient
// vectors, sorted lexicographically on coordinates. Exact arithmetic
// throughout (Fincke-Pohst with LLL pre-reduction).
std::vector<RatVec> enumerate_up_to_norm(const Lattice& l, const Rat& bound,
                                         const std::optional<RatVec>& coset_rep = std::nullopt);

// Number of vectors with (v|v) <= bound; avoids storing the vectors.
Int count_up_to_norm(const Lattice& l, const Rat& bound,
                     const std::optional<RatVec>& coset_rep = std::nullopt);

// Number of vectors with (v|v) == value exactly.
Int count_of_norm(const Lattice& l, const Rat& value,
                  const std::optional<RatVec>& coset_rep = std::nullopt);

// Minimum norm over the nonzero vectors of L (or over all vectors of the
// coset when a representative is given). search_cap bounds the search.
std::optional<Rat> min_norm(const Lattice& l, const Rat& search_cap,
                            const std::optional<RatVec>& coset_rep = std::nullopt);

bool is_rootless(const Lattice& l);

// Vector counts per even norm 0, 2, ..., max_norm for an even lattice.
std::vector<std::pair<long, Int>> theta_prefix(const Lattice& l, long max_norm);

}  // namespace orbilat

#pragma once

#include "orbilat/lattice.hpp"

namespace orbilat {

// A finite-order isometry of a lattice, stored as an integer matrix acting on
// basis coordinates from the right: the basis vector b_i maps to
// sum_j M(i,j) b_j, so a coordinate row x maps to x * M.
class LatticeIsometry {
  public:
    LatticeIsometry(Lattice lattice, IntMat m);

    const Lattice& lattice() const { return lattice_; }
    const IntMat& matrix() const { return m_; }
    long order() const { return order_; }

    // image of an ambient vector (must lie in the rational span)
    RatVec apply(const RatVec& v) const;

    LatticeIsometry power(long e) const;

  private:
    Lattice lattice_;
    IntMat m_;
    long order_;
};

bool is_fixed_point_free(const LatticeIsometry& g);

// L^g = { v in L : g v = v }
Lattice fixed_sublattice(const LatticeIsometry& g);

// L_g = { v in L : (v | L^g) = 0 }
Lattice coinvariant_lattice(const LatticeIsometry& g);

// (1-g)^{-1} computed by the averaging formula (-1/n) sum_{i=1}^{n-1} i g^i;
// requires g fixed-point free. Agrees with the direct matrix inverse.
RatMat one_minus_g_inverse(const LatticeIsometry& g);

// (1-g^s) applied to a lattice in the same rational span as g's lattice.
Lattice one_minus_g_image(const LatticeIsometry& g, const Lattice& target, long s = 1);

// R_L^{g^s} = ((1 - g^s) L*) intersect L
Lattice r_lattice(const LatticeIsometry& g, long s);

// true iff (1-g)(rep) lies in L, i.e. g fixes the coset rep + L
bool stabilizes_coset(const LatticeIsometry& g, const RatVec& rep);

// restriction of g to a g-invariant sublattice
LatticeIsometry restrict_isometry(const LatticeIsometry& g, const Lattice& sub);

// isometry induced by a linear map on the ambient space (row vectors map as
// v -> v * A); A must send the lattice onto itself
LatticeIsometry isometry_from_ambient(const Lattice& l, const RatMat& ambient_map);

// isometry induced by a coordinate permutation of the ambient space; image
// coordinate perm[i] receives coordinate i
LatticeIsometry isometry_from_permutation(const Lattice& l, const std::vector<int>& perm);

}  // namespace orbilat

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbilat/matrix.hpp"
#include "orbilat/normal_forms.hpp"

namespace orbilat {

// A lattice given by an exact rational basis (rows) inside Q^n, with the
// ambient inner product scaled by inner_scale: (x|y) = inner_scale * x.y.
// The stored basis is always in canonical form (rational Hermite normal
// form), so syntactic equality of bases is lattice equality.
class Lattice {
  public:
    Lattice() : ambient_dim_(0), inner_scale_(1) {}
    Lattice(std::size_t ambient_dim, RatMat basis, Rat inner_scale = Rat(1));

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.rows(); }
    const RatMat& basis() const { return basis_; }
    const Rat& inner_scale() const { return inner_scale_; }

    RatMat gram() const;          // rank x rank, s * B * B^T
    Rat det_gram() const;         // determinant of the Gram matrix
    Rat inner(const RatVec& x, const RatVec& y) const;  // ambient vectors

    bool is_integral() const;
    bool is_even() const;

    // rational coordinates of an ambient vector w.r.t. the basis, if the
    // vector lies in the rational span
    std::optional<RatVec> coords(const RatVec& v) const;
    bool in_span(const RatVec& v) const { return coords(v).has_value(); }
    bool contains(const RatVec& v) const;

    bool operator==(const Lattice& o) const {
        return ambient_dim_ == o.ambient_dim_ && inner_scale_ == o.inner_scale_ && basis_ == o.basis_;
    }

  private:
    std::size_t ambient_dim_;
    Rat inner_scale_;
    RatMat basis_;
};

// Z-span of a (possibly dependent) list of generators.
Lattice lattice_from_generators(std::size_t ambient_dim, const std::vector<RatVec>& generators,
                                const Rat& inner_scale = Rat(1));

// L* within the rational span of L, same ambient space and scale.
Lattice dual(const Lattice& l);

// |super : sub|; throws if sub is not a finite-index sublattice of super.
Int index(const Lattice& sub, const Lattice& super);

// Z-span of base and the given ambient vectors (which must lie in the
// rational span of base). With require_integral, throws if the result has a
// non-integral Gram matrix.
Lattice glue(const Lattice& base, const std::vector<RatVec>& glue_vectors, bool require_integral = false);

// { v in l : (v | s) = 0 }, for s a sublattice of l.
Lattice orthogonal_complement(const Lattice& l, const Lattice& s);

// Intersection of two lattices with the same rational span.
Lattice intersect(const Lattice& a, const Lattice& b);

// Image lattice { x * M : x in l } for a rational matrix acting on basis
// coordinates from the right (rows transform).
Lattice map_lattice(const Lattice& l, const RatMat& coord_map);

// Finite abelian group L*/L for an integral lattice.
struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., each >= 2
    std::vector<RatVec> generators;      // ambient vectors in L*, one per factor
    Int order;

    bool is_elementary(long p) const {
        for (const auto& d : invariant_factors)
            if (d != p) return false;
        return true;
    }
};

DiscriminantGroup discriminant_group(const Lattice& l);

}  // namespace orbilat

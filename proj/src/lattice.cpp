#include "orbilat/lattice.hpp"

#include <sstream>

namespace orbilat {

namespace {

// Canonical basis: rational HNF. Scaling the matrix by any positive integer
// scales its HNF by the same factor, so the result does not depend on the
// chosen denominator.
RatMat canonical_basis(const RatMat& rows) {
    if (rows.rows() == 0) return rows;
    Int d = denominator_lcm(rows);
    IntMat scaled(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            Rat e = rows(i, j) * Rat(d);
            scaled(i, j) = e.get_num();
        }
    IntMat h = hnf_basis(scaled);
    RatMat out(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = rat_frac(h(i, j), d);
    return out;
}

}  // namespace

Lattice::Lattice(std::size_t ambient_dim, RatMat basis, Rat inner_scale)
    : ambient_dim_(ambient_dim), inner_scale_(std::move(inner_scale)) {
    if (basis.rows() > 0 && basis.cols() != ambient_dim) throw std::invalid_argument("basis/ambient dimension mismatch");
    if (inner_scale_ <= 0) throw std::invalid_argument("inner_scale must be positive");
    RatMat canon = canonical_basis(basis);
    if (canon.rows() != basis.rows()) throw std::invalid_argument("basis rows linearly dependent");
    if (canon.rows() == 0) canon = RatMat(0, ambient_dim);
    basis_ = std::move(canon);
}

RatMat Lattice::gram() const {
    RatMat g = basis_ * basis_.transpose();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= inner_scale_;
    return g;
}

Rat Lattice::det_gram() const { return det(gram()); }

Rat Lattice::inner(const RatVec& x, const RatVec& y) const { return inner_scale_ * dot(x, y); }

bool Lattice::is_integral() const {
    RatMat g = gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!is_integer(g(i, j))) return false;
    return true;
}

bool Lattice::is_even() const {
    RatMat g = gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (!is_integer(g(i, j))) return false;
            if (i == j && g(i, j).get_num() % 2 != 0) return false;
        }
    return true;
}

std::optional<RatVec> Lattice::coords(const RatVec& v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
    if (rank() == 0) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return RatVec{};
    }
    return solve_left(basis_, v);
}

bool Lattice::contains(const RatVec& v) const {
    auto c = coords(v);
    if (!c) return false;
    for (const auto& x : *c)
        if (!is_integer(x)) return false;
    return true;
}

Lattice dual(const Lattice& l) {
    if (l.rank() == 0) return l;
    RatMat g = l.gram();
    RatMat d = inverse(g) * l.basis();
    return Lattice(l.ambient_dim(), d, l.inner_scale());
}

Int index(const Lattice& sub, const Lattice& super) {
    if (sub.rank() != super.rank()) throw std::invalid_argument("index requires equal ranks");
    if (sub.inner_scale() != super.inner_scale() || sub.ambient_dim() != super.ambient_dim())
        throw std::invalid_argument("index requires a common ambient space");
    if (sub.rank() == 0) return 1;
    RatMat x(sub.rank(), super.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = super.coords(sub.basis().row(i));
        if (!c) throw std::invalid_argument("sublattice basis vector outside superlattice span");
        for (std::size_t j = 0; j < super.rank(); ++j) {
            if (!is_integer((*c)[j])) {
                std::ostringstream os;
                os << "not a sublattice: basis vector " << i << " has non-integral coordinates";
                throw std::invalid_argument(os.str());
            }
            x(i, j) = (*c)[j];
        }
    }
    Rat d = det(x);
    Int num = d.get_num();
    if (num < 0) num = -num;
    if (num == 0) throw std::invalid_argument("degenerate coordinate matrix");
    return num;
}

Lattice lattice_from_generators(std::size_t ambient_dim, const std::vector<RatVec>& generators,
                                const Rat& inner_scale) {
    RatMat stacked(generators.size(), ambient_dim);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != ambient_dim) throw std::invalid_argument("generator dimension mismatch");
        stacked.set_row(i, generators[i]);
    }
    Int d = denominator_lcm(stacked);
    IntMat scaled(stacked.rows(), stacked.cols());
    for (std::size_t i = 0; i < stacked.rows(); ++i)
        for (std::size_t j = 0; j < stacked.cols(); ++j) scaled(i, j) = Rat(stacked(i, j) * Rat(d)).get_num();
    IntMat h = hnf_basis(scaled);
    RatMat rows(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) rows(i, j) = rat_frac(h(i, j), d);
    return Lattice(ambient_dim, rows, inner_scale);
}

Lattice glue(const Lattice& base, const std::vector<RatVec>& glue_vectors, bool require_integral) {
    std::vector<RatVec> all;
    for (std::size_t i = 0; i < base.rank(); ++i) all.push_back(base.basis().row(i));
    for (const auto& v : glue_vectors) {
        if (!base.in_span(v)) throw std::invalid_argument("glue vector outside rational span of base");
        all.push_back(v);
    }
    Lattice out = lattice_from_generators(base.ambient_dim(), all, base.inner_scale());
    if (require_integral && !out.is_integral()) throw std::invalid_argument("glued lattice is not integral");
    return out;
}

Lattice orthogonal_complement(const Lattice& l, const Lattice& s) {
    if (s.rank() == 0) return l;
    // pairing of basis rows of l against basis rows of s
    RatMat pairing = l.basis() * s.basis().transpose();
    IntMat k = integral_left_kernel(pairing);
    RatMat kb = to_rat(k) * l.basis();
    return Lattice(l.ambient_dim(), kb, l.inner_scale());
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("intersect requires equal spans");
    // (A cap B) = (A* + B*)* within the common span
    Lattice da = dual(a);
    Lattice db = dual(b);
    std::vector<RatVec> extra;
    for (std::size_t i = 0; i < db.rank(); ++i) extra.push_back(db.basis().row(i));
    Lattice sum = glue(da, extra);
    if (sum.rank() != a.rank()) throw std::invalid_argument("intersect requires equal spans");
    return dual(sum);
}

Lattice map_lattice(const Lattice& l, const RatMat& coord_map) {
    RatMat rows = coord_map * l.basis();
    return Lattice(l.ambient_dim(), rows, l.inner_scale());
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    if (!l.is_integral()) throw std::invalid_argument("discriminant group requires an integral lattice");
    DiscriminantGroup out;
    out.order = 1;
    if (l.rank() == 0) return out;
    IntMat g = to_int(l.gram());
    SnfResult s = snf(g);
    // L has coordinates G in the raw dual basis Bd = G^-1 B (B = G * Bd);
    // with U G V = S, L = rowspan(S * (V^-1 Bd)), so the rows of V^-1 Bd
    // generate L* and map to D(L) generators of orders S_ii.
    RatMat bd_raw = inverse(l.gram()) * l.basis();
    RatMat vinv = inverse(to_rat(s.v));
    RatMat gens = vinv * bd_raw;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Int d = s.s(i, i);
        out.order *= d;
        if (d > 1) {
            out.invariant_factors.push_back(d);
            out.generators.push_back(gens.row(i));
        }
    }
    return out;
}

}  // namespace orbilat

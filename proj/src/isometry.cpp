#include "orbilat/isometry.hpp"

namespace orbilat {

namespace {
constexpr long kOrderCap = 10000;
}

LatticeIsometry::LatticeIsometry(Lattice lattice, IntMat m) : lattice_(std::move(lattice)), m_(std::move(m)) {
    std::size_t r = lattice_.rank();
    if (m_.rows() != r || m_.cols() != r) throw std::invalid_argument("isometry matrix has wrong shape");
    RatMat g = lattice_.gram();
    RatMat mr = to_rat(m_);
    if (!(mr * g * mr.transpose() == g)) throw std::invalid_argument("matrix does not preserve the Gram matrix");
    // order by iterated multiplication; the characteristic values are roots
    // of unity so this terminates quickly for genuine isometries
    IntMat id = IntMat::identity(r);
    IntMat p = m_;
    order_ = 1;
    while (!(p == id)) {
        p = p * m_;
        ++order_;
        if (order_ > kOrderCap) throw std::invalid_argument("isometry order exceeds cap");
    }
}

RatVec LatticeIsometry::apply(const RatVec& v) const {
    auto c = lattice_.coords(v);
    if (!c) throw std::invalid_argument("vector outside rational span of lattice");
    RatVec cm = *c * to_rat(m_);
    return cm * lattice_.basis();
}

LatticeIsometry LatticeIsometry::power(long e) const {
    long n = order_;
    e %= n;
    if (e < 0) e += n;
    IntMat p = IntMat::identity(m_.rows());
    for (long i = 0; i < e; ++i) p = p * m_;
    return LatticeIsometry(lattice_, p);
}

bool is_fixed_point_free(const LatticeIsometry& g) {
    std::size_t r = g.lattice().rank();
    IntMat d = IntMat::identity(r) - g.matrix();
    return det_int(d) != 0;
}

Lattice fixed_sublattice(const LatticeIsometry& g) {
    std::size_t r = g.lattice().rank();
    RatMat d = to_rat(IntMat::identity(r) - g.matrix());
    IntMat k = integral_left_kernel(d);  // x (I - M) = 0
    RatMat rows = to_rat(k) * g.lattice().basis();
    return Lattice(g.lattice().ambient_dim(), rows, g.lattice().inner_scale());
}

Lattice coinvariant_lattice(const LatticeIsometry& g) {
    return orthogonal_complement(g.lattice(), fixed_sublattice(g));
}

RatMat one_minus_g_inverse(const LatticeIsometry& g) {
    if (!is_fixed_point_free(g)) throw std::invalid_argument("(1-g) is singular: g has fixed points");
    long n = g.order();
    std::size_t r = g.lattice().rank();
    RatMat m = to_rat(g.matrix());
    RatMat acc(r, r);
    RatMat p = m;
    for (long i = 1; i <= n - 1; ++i) {
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) acc(a, b) += Rat(i) * p(a, b);
        p = p * m;
    }
    Rat f(-1, n);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) acc(a, b) *= f;
    return acc;
}

Lattice one_minus_g_image(const LatticeIsometry& g, const Lattice& target, long s) {
    // coordinates of target basis w.r.t. g's lattice, then apply (1 - M^s)
    const Lattice& l = g.lattice();
    RatMat coords(target.rank(), l.rank());
    for (std::size_t i = 0; i < target.rank(); ++i) {
        auto c = l.coords(target.basis().row(i));
        if (!c) throw std::invalid_argument("target lattice outside rational span");
        for (std::size_t j = 0; j < l.rank(); ++j) coords(i, j) = (*c)[j];
    }
    IntMat ms = g.power(s).matrix();
    RatMat op = to_rat(IntMat::identity(l.rank()) - ms);
    RatMat rows = (coords * op) * l.basis();
    return Lattice(l.ambient_dim(), rows, l.inner_scale());
}

Lattice r_lattice(const LatticeIsometry& g, long s) {
    Lattice img = one_minus_g_image(g, dual(g.lattice()), s);
    return intersect(img, g.lattice());
}

bool stabilizes_coset(const LatticeIsometry& g, const RatVec& rep) {
    auto c = g.lattice().coords(rep);
    if (!c) throw std::invalid_argument("coset representative outside rational span");
    RatMat d = to_rat(g.matrix());
    RatVec moved = *c * d;
    for (std::size_t i = 0; i < moved.size(); ++i) {
        if (!is_integer((*c)[i] - moved[i])) return false;
    }
    return true;
}

LatticeIsometry restrict_isometry(const LatticeIsometry& g, const Lattice& sub) {
    // rows of sub in g's lattice coordinates
    const Lattice& l = g.lattice();
    RatMat s(sub.rank(), l.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = l.coords(sub.basis().row(i));
        if (!c) throw std::invalid_argument("sublattice outside rational span");
        for (std::size_t j = 0; j < l.rank(); ++j) s(i, j) = (*c)[j];
    }
    RatMat mapped = s * to_rat(g.matrix());  // images of sub's basis, in l-coords
    // solve mapped = M_sub * s for integer M_sub
    IntMat msub(sub.rank(), sub.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        RatVec img = mapped.row(i) * l.basis();
        auto c = sub.coords(img);
        if (!c) throw std::invalid_argument("sublattice is not invariant under the isometry");
        for (std::size_t j = 0; j < sub.rank(); ++j) {
            if (!is_integer((*c)[j])) throw std::invalid_argument("sublattice is not invariant under the isometry");
            msub(i, j) = (*c)[j].get_num();
        }
    }
    return LatticeIsometry(sub, msub);
}

LatticeIsometry isometry_from_ambient(const Lattice& l, const RatMat& ambient_map) {
    IntMat m(l.rank(), l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        RatVec img = l.basis().row(i) * ambient_map;
        auto c = l.coords(img);
        if (!c) throw std::invalid_argument("ambient map does not preserve the lattice span");
        for (std::size_t j = 0; j < l.rank(); ++j) {
            if (!is_integer((*c)[j])) throw std::invalid_argument("ambient map does not preserve the lattice");
            m(i, j) = (*c)[j].get_num();
        }
    }
    return LatticeIsometry(l, m);
}

LatticeIsometry isometry_from_permutation(const Lattice& l, const std::vector<int>& perm) {
    std::size_t n = l.ambient_dim();
    if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
    RatMat a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, static_cast<std::size_t>(perm[i])) = 1;
    return isometry_from_ambient(l, a);
}

}  // namespace orbilat

#include <random>
#include <set>

#include "doctest.h"
#include "orbilat/enumerate.hpp"
#include "orbilat/json_io.hpp"
#include "orbilat/lattice.hpp"

using namespace orbilat;

namespace {

Lattice a2() { return Lattice(3, RatMat{{1, -1, 0}, {0, 1, -1}}); }

RatVec lambda1_a2() { return {make_rat(2, 3), make_rat(-1, 3), make_rat(-1, 3)}; }

Lattice random_integral_lattice(std::mt19937_64& rng, std::size_t r) {
    std::uniform_int_distribution<long> dist(-3, 3);
    while (true) {
        RatMat b(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) b(i, j) = dist(rng);
        if (det(b) == 0) continue;
        return Lattice(r, b);
    }
}

// independent oracle: enumerate lattice (or coset) vectors by brute force
// over a coordinate box
std::set<std::vector<std::string>> box_enumerate(const Lattice& l, const Rat& bound,
                                                 const std::optional<RatVec>& rep, long box) {
    std::set<std::vector<std::string>> out;
    std::size_t r = l.rank();
    std::vector<long> x(r, -box);
    while (true) {
        RatVec v(l.ambient_dim(), Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < l.ambient_dim(); ++j) v[j] += Rat(x[i]) * l.basis()(i, j);
        if (rep)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += (*rep)[j];
        if (l.inner(v, v) <= bound) {
            std::vector<std::string> key;
            for (const auto& e : v) key.push_back(rat_str(e));
            out.insert(key);
        }
        std::size_t i = 0;
        while (i < r && x[i] == box) x[i++] = -box;
        if (i == r) break;
        ++x[i];
    }
    return out;
}

std::set<std::vector<std::string>> as_key_set(const std::vector<RatVec>& vs) {
    std::set<std::vector<std::string>> out;
    for (const auto& v : vs) {
        std::vector<std::string> key;
        for (const auto& e : v) key.push_back(rat_str(e));
        out.insert(key);
    }
    return out;
}

}  // namespace

TEST_CASE("dual of Z^2 is Z^2") {
    Lattice z2(2, RatMat{{1, 0}, {0, 1}});
    CHECK(dual(z2) == z2);
}

TEST_CASE("dual of A_2") {
    Lattice a = a2();
    Lattice d = dual(a);
    CHECK(d.det_gram() == make_rat(1, 3));
    CHECK(dual(d) == a);
    auto dg = discriminant_group(a);
    CHECK(dg.order == 3);
    REQUIRE(dg.invariant_factors.size() == 1);
    CHECK(dg.invariant_factors[0] == 3);
}

TEST_CASE("discriminant group of a unimodular lattice is trivial") {
    Lattice z3(3, RatMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto dg = discriminant_group(z3);
    CHECK(dg.order == 1);
    CHECK(dg.invariant_factors.empty());
}

TEST_CASE("discriminant group of A_22 is Z_23") {
    std::size_t k = 23;
    RatMat b(k - 1, k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        b(i, i) = 1;
        b(i, i + 1) = -1;
    }
    auto dg = discriminant_group(Lattice(k, b));
    REQUIRE(dg.invariant_factors.size() == 1);
    CHECK(dg.invariant_factors[0] == 23);
}

TEST_CASE("discriminant group generators are honest") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Lattice l = random_integral_lattice(rng, 2 + rng() % 2);
        auto dg = discriminant_group(l);
        CHECK(Rat(dg.order) == l.det_gram());
        Lattice d = dual(l);
        for (std::size_t i = 0; i < dg.generators.size(); ++i) {
            CHECK(d.contains(dg.generators[i]));
            RatVec scaled(dg.generators[i].size());
            for (std::size_t j = 0; j < scaled.size(); ++j) scaled[j] = Rat(dg.invariant_factors[i]) * dg.generators[i][j];
            CHECK(l.contains(scaled));
            CHECK(!l.contains(dg.generators[i]));
        }
        // generators plus L generate L*: index of <L, gens> in L* is 1
        std::vector<RatVec> gens = dg.generators;
        Lattice spanned = glue(l, gens);
        CHECK(spanned == d);
    }
}

TEST_CASE("enumeration of A_2 roots") {
    auto vs = enumerate_up_to_norm(a2(), Rat(2));
    CHECK(vs.size() == 7);  // six roots and zero
    long roots = 0;
    for (const auto& v : vs)
        if (dot(v, v) == 2) ++roots;
    CHECK(roots == 6);
    // deterministic lexicographic order
    auto again = enumerate_up_to_norm(a2(), Rat(2));
    CHECK(vs == again);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) CHECK(vs[i] < vs[i + 1]);
}

TEST_CASE("coset enumeration: lambda_1 + A_2 at norm 2/3") {
    auto vs = enumerate_up_to_norm(a2(), make_rat(2, 3), lambda1_a2());
    CHECK(vs.size() == 3);
    for (const auto& v : vs) CHECK(dot(v, v) == make_rat(2, 3));
    CHECK(as_key_set(vs) == box_enumerate(a2(), make_rat(2, 3), lambda1_a2(), 4));
}

TEST_CASE("enumeration agrees with the naive box oracle") {
    std::mt19937_64 rng(4242);
    int cases = 0;
    while (cases < 30) {
        std::size_t r = 2 + rng() % 3;  // rank 2..4
        Lattice l = random_integral_lattice(rng, r);
        if (l.det_gram() > 400) continue;  // keep the box bound meaningful
        ++cases;
        Rat bound(3 + static_cast<long>(rng() % 4));
        auto got = as_key_set(enumerate_up_to_norm(l, bound));
        auto expect = box_enumerate(l, bound, std::nullopt, 8);
        CHECK(got == expect);
    }
}

TEST_CASE("is_even and is_rootless") {
    CHECK(a2().is_even());
    CHECK_FALSE(is_rootless(a2()));
    Lattice z1(1, RatMat{{1}});
    CHECK_FALSE(z1.is_even());
    CHECK(is_rootless(z1));  // norm-1 vectors are not roots
}

TEST_CASE("index of sublattices") {
    Lattice a = a2();
    CHECK(index(a, a) == 1);
    // 3 * A_2 inside A_2 has index 9
    RatMat scaled = a.basis();
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= 3;
    Lattice sub(3, scaled);
    CHECK(index(sub, a) == 9);
    CHECK_THROWS_AS(index(a, sub), std::invalid_argument);
}

TEST_CASE("glue examples") {
    Lattice a = a2();
    CHECK(glue(a, {}) == a);
    Lattice ext = glue(a, {lambda1_a2()});
    CHECK(ext.det_gram() == make_rat(1, 3));
    CHECK(ext == dual(a));
    RatVec outside = {Rat(1), Rat(1), Rat(1)};
    CHECK_THROWS_AS(glue(a, {outside}), std::invalid_argument);
}

TEST_CASE("orthogonal complement") {
    Lattice a = a2();
    Lattice zero(3, RatMat(0, 3));
    CHECK(orthogonal_complement(a, a).rank() == 0);
    CHECK(orthogonal_complement(a, zero) == a);
    // complement of one root in A_2 is spanned by a norm-6 vector
    Lattice root_line(3, RatMat{{1, -1, 0}});
    Lattice comp = orthogonal_complement(a, root_line);
    CHECK(comp.rank() == 1);
    CHECK(comp.inner(comp.basis().row(0), comp.basis().row(0)) == 6);
}

TEST_CASE("theta prefix") {
    auto th = theta_prefix(a2(), 2);
    REQUIRE(th.size() == 2);
    CHECK(th[0] == std::pair<long, Int>(0, Int(1)));
    CHECK(th[1] == std::pair<long, Int>(2, Int(6)));
    Lattice zero(3, RatMat(0, 3));
    auto thz = theta_prefix(zero, 0);
    REQUIRE(thz.size() == 1);
    CHECK(thz[0] == std::pair<long, Int>(0, Int(1)));
}

TEST_CASE("dual involution and determinant properties on random lattices") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        Lattice l = random_integral_lattice(rng, 2 + rng() % 3);
        CHECK(dual(dual(l)) == l);
        CHECK(Rat(discriminant_group(l).order) == l.det_gram());
        // index(sub, super)^2 = det(sub)/det(super) for a random sublattice
        IntMat t(l.rank(), l.rank());
        std::uniform_int_distribution<long> dist(-2, 2);
        do {
            for (std::size_t i = 0; i < l.rank(); ++i)
                for (std::size_t j = 0; j < l.rank(); ++j) t(i, j) = dist(rng);
        } while (det_int(t) == 0);
        Lattice sub = map_lattice(l, to_rat(t));
        Int idx = index(sub, l);
        CHECK(Rat(idx * idx) == sub.det_gram() / l.det_gram());
    }
}

TEST_CASE("intersection via duals") {
    Lattice a = a2();
    // 2A_2 and 3A_2 intersect in 6A_2
    auto scale_lat = [&](long s) {
        RatMat b = a.basis();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= s;
        return Lattice(3, b);
    };
    CHECK(intersect(scale_lat(2), scale_lat(3)) == scale_lat(6));
}

TEST_CASE("lattice JSON round trip") {
    Lattice a(3, RatMat{{1, -1, 0}, {0, 1, -1}}, make_rat(1, 8));
    auto j = lattice_to_json(a);
    CHECK(j["inner_scale"] == "1/8");
    Lattice back = lattice_from_json(j);
    CHECK(back == a);
}

TEST_CASE("non-integral lattice rejected by discriminant_group") {
    Lattice half(1, RatMat{{1}}, make_rat(1, 2));
    CHECK_THROWS_AS(discriminant_group(half), std::invalid_argument);
}

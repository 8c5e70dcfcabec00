#include <numeric>
#include "doctest.h"
#include "orbilat/enumerate.hpp"
#include "orbilat/root_system.hpp"

using namespace orbilat;

TEST_CASE("fundamental weights") {
    SUBCASE("k=3, j=1") {
        RatVec w = fundamental_weight(3, 1);
        CHECK(w == RatVec{make_rat(2, 3), make_rat(-1, 3), make_rat(-1, 3)});
        CHECK(dot(w, w) == make_rat(2, 3));
    }
    SUBCASE("pairings (lambda_i | lambda_j) = i(k-j)/k for i <= j") {
        for (long k = 2; k <= 9; ++k)
            for (long i = 1; i < k; ++i)
                for (long j = i; j < k; ++j)
                    CHECK(dot(fundamental_weight(k, i), fundamental_weight(k, j)) == make_rat(i * (k - j), k));
    }
    SUBCASE("lambda_j - j lambda_1 lies in A") {
        for (long k = 2; k <= 7; ++k) {
            TypeALattice a = make_type_a(k);
            for (long j = 1; j < k; ++j) {
                RatVec v = fundamental_weight(k, j);
                RatVec l1 = fundamental_weight(k, 1);
                for (std::size_t c = 0; c < v.size(); ++c) v[c] -= Rat(j) * l1[c];
                CHECK(a.lattice.contains(v));
            }
        }
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS(fundamental_weight(4, 0), std::invalid_argument);
        CHECK_THROWS_AS(fundamental_weight(4, 4), std::invalid_argument);
    }
}

TEST_CASE("weyl vector") {
    CHECK(weyl_vector(3) == RatVec{Rat(1), Rat(0), Rat(-1)});
    CHECK(weyl_vector(2) == RatVec{make_rat(1, 2), make_rat(-1, 2)});
    CHECK(dot(weyl_vector(3), weyl_vector(3)) == 2);
    SUBCASE("(rho | alpha_i) = 1 and (rho | lambda_i) = (k-i)i/2") {
        for (long k = 2; k <= 9; ++k) {
            TypeALattice a = make_type_a(k);
            RatVec rho = weyl_vector(k);
            for (const auto& alpha : a.simple_roots) CHECK(dot(rho, alpha) == 1);
            for (long i = 1; i < k; ++i) CHECK(dot(rho, fundamental_weight(k, i)) == make_rat((k - i) * i, 2));
        }
        CHECK(dot(weyl_vector(5), fundamental_weight(5, 2)) == 3);
    }
    SUBCASE("rho is the sum of the fundamental weights") {
        for (long k = 2; k <= 7; ++k) {
            RatVec sum(static_cast<std::size_t>(k), Rat(0));
            for (long j = 1; j < k; ++j) {
                RatVec w = fundamental_weight(k, j);
                for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w[c];
            }
            CHECK(sum == weyl_vector(k));
        }
    }
}

TEST_CASE("type A model") {
    for (long k = 2; k <= 9; ++k) {
        TypeALattice a = make_type_a(k);
        CHECK(a.lattice.rank() == static_cast<std::size_t>(k - 1));
        CHECK(count_of_norm(a.lattice, Rat(2)) == Int(k) * (k - 1));
        for (long i = 0; i + 1 < k - 1; ++i) {
            CHECK(dot(a.simple_roots[i], a.simple_roots[i]) == 2);
            CHECK(dot(a.simple_roots[i], a.simple_roots[i + 1]) == -1);
        }
    }
}

TEST_CASE("coxeter isometry") {
    SUBCASE("g(rho) = rho - k lambda_1 at k = 3") {
        LatticeIsometry g = coxeter_isometry(3);
        RatVec img = g.apply(weyl_vector(3));
        CHECK(img == RatVec{Rat(-1), Rat(1), Rat(0)});
    }
    SUBCASE("order and fixed-point-freeness of powers") {
        for (long k = 2; k <= 8; ++k) {
            LatticeIsometry g = coxeter_isometry(k);
            CHECK(g.order() == k);
            CHECK(is_fixed_point_free(g));
            for (long j = 1; j < k; ++j)
                CHECK(is_fixed_point_free(g.power(j)) == (std::gcd(j, k) == 1));
        }
        CHECK_FALSE(is_fixed_point_free(coxeter_isometry(4).power(2)));
    }
    SUBCASE("g acts on the simple roots as the affine cycle") {
        for (long k = 3; k <= 7; ++k) {
            TypeALattice a = make_type_a(k);
            LatticeIsometry g = coxeter_isometry(k);
            for (long i = 0; i + 1 < k - 1; ++i) CHECK(g.apply(a.simple_roots[i]) == a.simple_roots[i + 1]);
            RatVec neg_highest(static_cast<std::size_t>(k), Rat(0));
            neg_highest[0] = -1;
            neg_highest[static_cast<std::size_t>(k) - 1] = 1;
            CHECK(g.apply(a.simple_roots[static_cast<std::size_t>(k) - 2]) == neg_highest);
            CHECK(g.apply(neg_highest) == a.simple_roots[0]);
        }
    }
}

TEST_CASE("check_rho_pairing for k = 2..9") {
    for (long k = 2; k <= 9; ++k) CHECK(check_rho_pairing(k));
}

TEST_CASE("decompose_root_set") {
    TypeALattice a3 = make_type_a(3);
    RatVec a0{Rat(-1), Rat(0), Rat(1)};
    SUBCASE("affine 3-cycle gives one component with base size 2") {
        auto dec = decompose_root_set({a3.simple_roots[0], a3.simple_roots[1], a0}, 3);
        REQUIRE(dec.components.size() == 1);
        CHECK(dec.components[0].base.size() == 2);
        CHECK(dec.leftover.empty());
        // base starts at the lexicographically smallest vector
        CHECK(dec.components[0].base[0] == a0);
    }
    SUBCASE("two orthogonal copies") {
        std::vector<RatVec> x;
        for (int block = 0; block < 2; ++block) {
            for (int r = 0; r < 2; ++r) {
                RatVec v(6, Rat(0));
                for (int c = 0; c < 3; ++c) v[static_cast<std::size_t>(3 * block + c)] = a3.simple_roots[r][static_cast<std::size_t>(c)];
                x.push_back(v);
            }
            RatVec v(6, Rat(0));
            v[static_cast<std::size_t>(3 * block)] = -1;
            v[static_cast<std::size_t>(3 * block + 2)] = 1;
            x.push_back(v);
        }
        auto dec = decompose_root_set(x, 3);
        CHECK(dec.components.size() == 2);
        CHECK(dec.leftover.empty());
    }
    SUBCASE("a bare path is leftover") {
        auto dec = decompose_root_set({a3.simple_roots[0], a3.simple_roots[1]}, 3);
        CHECK(dec.components.empty());
        CHECK(dec.leftover.size() == 2);
    }
    SUBCASE("inner product +1 rejected") {
        RatVec flip{Rat(0), Rat(-1), Rat(1)};
        CHECK_THROWS_AS(decompose_root_set({a3.simple_roots[0], a3.simple_roots[1], flip}, 3), std::invalid_argument);
    }
    SUBCASE("norm mismatch rejected") {
        RatVec bad{Rat(2), Rat(-2), Rat(0)};
        CHECK_THROWS_AS(decompose_root_set({bad}, 3), std::invalid_argument);
    }
}

TEST_CASE("decompose the full coset slice of A_{p-1}^t for p in {3,5,7}") {
    for (long p : {3L, 5L, 7L}) {
        for (long t = 1; t <= 3; ++t) {
            // one affine diagram per component, e.g. the (lambda_1-coset
            // slice); this is exactly base plus negated highest roots
            std::vector<RatVec> x;
            std::size_t amb = static_cast<std::size_t>(p * t);
            TypeALattice a = make_type_a(p);
            for (long b = 0; b < t; ++b) {
                for (long r = 0; r + 1 < p; ++r) {
                    RatVec v(amb, Rat(0));
                    for (long c = 0; c < p; ++c) v[static_cast<std::size_t>(b * p + c)] = a.simple_roots[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    x.push_back(v);
                }
                RatVec v(amb, Rat(0));
                v[static_cast<std::size_t>(b * p)] = -1;
                v[static_cast<std::size_t>(b * p + p - 1)] = 1;
                x.push_back(v);
            }
            auto dec = decompose_root_set(x, p);
            CHECK(dec.components.size() == static_cast<std::size_t>(t));
            CHECK(dec.leftover.empty());
            for (const auto& comp : dec.components) CHECK(comp.base.size() == static_cast<std::size_t>(p - 1));
        }
    }
}

TEST_CASE("weight_of_base matches the standard model") {
    for (long k = 3; k <= 7; ++k) {
        TypeALattice a = make_type_a(k);
        for (std::size_t m = 1; m < static_cast<std::size_t>(k); ++m)
            CHECK(weight_of_base(a.simple_roots, m) == fundamental_weight(k, static_cast<long>(m)));
    }
}

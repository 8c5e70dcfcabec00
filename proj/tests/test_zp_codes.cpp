#include <random>
#include <set>

#include "doctest.h"
#include "orbilat/codes.hpp"
#include "orbilat/construction.hpp"
#include "orbilat/enumerate.hpp"

using namespace orbilat;

namespace {

CodeZp random_code(std::mt19937_64& rng, long p, long t, long rows) {
    std::vector<std::vector<long>> gen;
    for (long i = 0; i < rows; ++i) {
        std::vector<long> r(static_cast<std::size_t>(t));
        for (auto& v : r) v = static_cast<long>(rng() % static_cast<unsigned long>(p));
        gen.push_back(std::move(r));
    }
    return make_code(p, t, gen);
}

std::set<std::vector<long>> word_set(const CodeZp& c) {
    auto w = codewords(c);
    return std::set<std::vector<long>>(w.begin(), w.end());
}

}  // namespace

TEST_CASE("dual code examples") {
    SUBCASE("<(1,1,1,1,1,1)> over Z_3") {
        CodeZp c = make_code(3, 6, {{1, 1, 1, 1, 1, 1}});
        CodeZp d = dual_code(c);
        CHECK(d.dim() == 5);
        CHECK(word_set(d).count({1, 1, 1, 1, 1, 1}) == 1);
    }
    SUBCASE("full space dualizes to the zero code") {
        CodeZp full = make_code(3, 2, {{1, 0}, {0, 1}});
        CHECK(dual_code(full).dim() == 0);
    }
    SUBCASE("<(1,2,3)> over Z_7") {
        CodeZp c = make_code(7, 3, {{1, 2, 3}});
        CodeZp d = dual_code(c);
        CHECK(d.dim() == 2);
        CHECK(word_set(d).count({1, 2, 3}) == 1);  // 1 + 4 + 9 = 14 = 0 mod 7
    }
}

TEST_CASE("self-orthogonality") {
    CHECK(is_self_orthogonal(make_code(5, 4, {{1, 1, 2, 2}})));
    CHECK_FALSE(is_self_orthogonal(make_code(3, 3, {{1, 0, 0}})));
    CHECK(is_self_orthogonal(make_code(5, 5, {{1, 1, 1, 1, 1}, {1, 2, 4, 3, 0}})));
}

TEST_CASE("self-orthogonality from diagonal products alone (p odd)") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        long p = (trial % 2) ? 5 : 3;
        CodeZp c = random_code(rng, p, 4 + static_cast<long>(rng() % 3), 2);
        bool diag = true;
        for (const auto& w : codewords(c)) {
            long s = 0;
            for (long v : w) s = (s + v * v) % p;
            if (s != 0) diag = false;
        }
        CHECK(diag == is_self_orthogonal(c));
    }
}

TEST_CASE("weight distribution") {
    CodeZp zero = make_code(3, 4, {});
    auto d0 = weight_distribution(zero);
    CHECK(d0.size() == 1);
    CHECK(d0.at(0) == 1);
    CodeZp c = make_code(3, 6, {{1, 1, 1, 1, 1, 1}});
    auto d = weight_distribution(c);
    CHECK(d.at(0) == 1);
    CHECK(d.at(6) == 2);
    CHECK(d.size() == 2);
    CHECK(max_weight_in_dual(make_code(7, 3, {{1, 2, 3}})) == 3);
}

TEST_CASE("dual involution and dimension formula") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        long p = (trial % 3 == 0) ? 7 : ((trial % 3 == 1) ? 5 : 3);
        long t = 3 + static_cast<long>(rng() % 4);
        CodeZp c = random_code(rng, p, t, 1 + static_cast<long>(rng() % 2));
        CodeZp d = dual_code(c);
        CHECK(c.dim() + d.dim() == t);
        CHECK(dual_code(d) == c);
        if (is_self_orthogonal(c)) {
            // C contained in its dual
            auto dwords = word_set(d);
            for (const auto& w : codewords(c)) CHECK(dwords.count(w) == 1);
        }
    }
}

TEST_CASE("monomial equivalence") {
    SUBCASE("identity witness") {
        CodeZp c = make_code(5, 4, {{1, 1, 2, 2}});
        auto f = monomial_equivalent(c, c);
        REQUIRE(f.has_value());
        CHECK(apply_monomial(c, *f) == c);
    }
    SUBCASE("<(1,1,2,2)> and <(1,4,2,3)> over Z_5 are equivalent") {
        CodeZp c1 = make_code(5, 4, {{1, 1, 2, 2}});
        CodeZp c2 = make_code(5, 4, {{1, 4, 2, 3}});
        auto f = monomial_equivalent(c1, c2);
        REQUIRE(f.has_value());
        CHECK(apply_monomial(c1, *f) == c2);
    }
    SUBCASE("weight distributions separate codes") {
        CodeZp c1 = make_code(3, 6, {{1, 1, 1, 1, 1, 1}});
        CodeZp c2 = make_code(3, 6, {{1, 1, 1, 1, 1, 0}});
        CHECK_FALSE(monomial_equivalent(c1, c2).has_value());
    }
    SUBCASE("witness maps word sets bijectively") {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 20; ++trial) {
            CodeZp c = random_code(rng, 5, 5, 2);
            // random signed permutation
            MonomialMap f;
            f.perm = {0, 1, 2, 3, 4};
            std::shuffle(f.perm.begin(), f.perm.end(), rng);
            for (int i = 0; i < 5; ++i) f.signs.push_back(rng() % 2 ? 1 : -1);
            CodeZp moved = apply_monomial(c, f);
            auto found = monomial_equivalent(c, moved);
            REQUIRE(found.has_value());
            CHECK(word_set(apply_monomial(c, *found)) == word_set(moved));
        }
    }
}

TEST_CASE("rootless-B codeword criterion matches the lattice computation") {
    std::mt19937_64 rng(2025);
    int checked = 0;
    while (checked < 25) {
        long p = (checked % 2) ? 5 : 3;
        long t = 3 + static_cast<long>(rng() % 2);
        CodeZp c = random_code(rng, p, t, 1);
        if (!is_self_orthogonal(c) || c.dim() == 0) continue;
        ++checked;
        ConstructionContext ctx = make_context(p, t);
        CHECK(code_gives_rootless_b(c) == is_rootless(construct_B(ctx, c)));
    }
}

TEST_CASE("classification of the one-dimensional parameter sets") {
    struct Case {
        long p, t, dim;
        std::vector<std::vector<long>> expect;
    };
    for (const Case& cs : {Case{3, 6, 1, {{1, 1, 1, 1, 1, 1}}},
                           Case{5, 4, 1, {{1, 1, 2, 2}}},
                           Case{7, 3, 1, {{1, 2, 3}}}}) {
        auto res = classify_codes(cs.p, cs.t, cs.dim, true, true);
        CHECK(res.complete);
        REQUIRE(res.classes.size() == 1);
        CodeZp expect = make_code(cs.p, cs.t, cs.expect);
        CHECK(monomial_equivalent(res.classes[0], expect).has_value());
    }
}

TEST_CASE("binary doubly even weight check is available") {
    CodeZp c2 = make_code(2, 8, {{1, 1, 1, 1, 1, 1, 1, 1}});
    auto d = weight_distribution(c2);
    CHECK(d.at(8) == 1);
}

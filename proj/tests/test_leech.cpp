#include "doctest.h"
#include "json.hpp"
#include "orbilat/enumerate.hpp"
#include "orbilat/json_io.hpp"
#include "orbilat/leech.hpp"

#include <fstream>

using namespace orbilat;

TEST_CASE("golay fixture invariants") {
    const GolayCode& g = GolayCode::instance();
    auto dist = g.weight_distribution();
    CHECK(dist.at(0) == 1);
    CHECK(dist.at(8) == 759);
    CHECK(dist.at(12) == 2576);
    CHECK(dist.at(16) == 759);
    CHECK(dist.at(24) == 1);
    // self-duality: all pairwise products even, dimension 12
    CHECK(g.basis().size() == 12);
    for (auto a : g.basis())
        for (auto b : g.basis()) CHECK(__builtin_popcount(a & b) % 2 == 0);
    // doubly even generators
    for (auto a : g.basis()) CHECK(__builtin_popcount(a) % 4 == 0);
}

TEST_CASE("automorphism fixture generators preserve the code") {
    const auto& gens = golay_aut_generators();
    CHECK(gens.size() >= 3);
    for (const auto& p : gens) CHECK(GolayCode::instance().preserved_by(p));
}

TEST_CASE("leech lattice quick invariants") {
    const Lattice& l = build_leech();
    CHECK(l.rank() == 24);
    CHECK(l.is_even());
    CHECK(l.det_gram() == 1);
    CHECK(is_rootless(l));
    CHECK(l.inner_scale() == make_rat(1, 8));
}

TEST_CASE("cycle types") {
    CycleType t = cycle_type_for_tag("11A");
    CHECK(t.cycles == std::map<long, long>{{1, 2}, {11, 2}});
    std::vector<int> id(24);
    for (int i = 0; i < 24; ++i) id[static_cast<std::size_t>(i)] = i;
    CHECK(cycle_type_of(id).cycles == std::map<long, long>{{1, 24}});
    CHECK_THROWS_AS(cycle_type_for_tag("2A"), std::invalid_argument);
}

TEST_CASE("automorphism search is reproducible and matches the frozen fixture") {
    std::ifstream in(data_dir() + "/found_permutations.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j.at("seed").get<std::uint64_t>() == kDefaultSeed);
    for (const std::string tag : {"3B", "5B", "7B", "11A", "23A"}) {
        CAPTURE(tag);
        auto perm = find_golay_automorphism(cycle_type_for_tag(tag));
        CHECK(perm == j.at("permutations").at(tag).get<std::vector<int>>());
        CHECK(cycle_type_of(perm).cycles == cycle_type_for_tag(tag).cycles);
        CHECK(GolayCode::instance().preserved_by(perm));
        // a different seed still finds the type (deterministically)
        auto other = find_golay_automorphism(cycle_type_for_tag(tag), 12345);
        CHECK(cycle_type_of(other).cycles == cycle_type_for_tag(tag).cycles);
    }
}

TEST_CASE("coinvariant classes match the expected data") {
    struct Expect {
        const char* tag;
        std::size_t rank;
        long p;
        long disc_rank;
    };
    for (const Expect e : {Expect{"3B", 12, 3, 6}, Expect{"5B", 16, 5, 4}, Expect{"7B", 18, 7, 3},
                           Expect{"11A", 20, 11, 2}, Expect{"23A", 22, 23, 1}}) {
        CAPTURE(e.tag);
        CoinvariantClass cc = coinvariant_class(e.tag);
        CHECK(cc.coinvariant.rank() == e.rank);
        CHECK(cc.fixed.rank() == 24 - e.rank);
        auto d = discriminant_group(cc.coinvariant);
        CHECK(d.invariant_factors == std::vector<Int>(static_cast<std::size_t>(e.disc_rank), Int(e.p)));
        CHECK(discriminant_group(cc.fixed).order == d.order);
        CHECK(cc.action.order() == e.p);
        CHECK(is_fixed_point_free(cc.action));
        CHECK(is_rootless(cc.coinvariant));
    }
}

TEST_CASE("23A fixed lattice Gram class") {
    CoinvariantClass cc = coinvariant_class("23A");
    REQUIRE(cc.fixed.rank() == 2);
    RatMat g = cc.fixed.gram();
    CHECK(det(g) == 23);
    // the canonical reduced binary form of [[4,1],[1,6]] has det 23 and is
    // checked inside coinvariant_class; here only the determinant and
    // evenness are re-asserted
    CHECK(cc.fixed.is_even());
}

TEST_CASE("deliberately non-singular glue breaks evenness") {
    CoinvariantClass cc = coinvariant_class("23A");
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < cc.coinvariant.rank(); ++i) rows.push_back(cc.coinvariant.basis().row(i));
    for (std::size_t i = 0; i < cc.fixed.rank(); ++i) rows.push_back(cc.fixed.basis().row(i));
    Lattice x = lattice_from_generators(24, rows, cc.coinvariant.inner_scale());
    QuadraticSpaceFp q = discriminant_form(x, 23);
    auto d = discriminant_group(x);
    // pick a non-singular element and glue it in
    std::vector<long> bad;
    std::vector<long> coords(q.dim, 0);
    coords[0] = 1;
    for (long a = 1; a < 23 && bad.empty(); ++a) {
        coords[1] = a;
        if (q.q_of(coords) != 0) bad = coords;
    }
    REQUIRE(!bad.empty());
    RatVec v(24, Rat(0));
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < 24; ++j) v[j] += Rat(bad[i]) * d.generators[i][j];
    Lattice glued = glue(x, {v});
    CHECK_FALSE(glued.is_even());
}

TEST_CASE("search budget is enforced") {
    CycleType impossible;
    impossible.cycles = {{19, 1}, {1, 5}};  // 19 does not divide the group order
    CHECK_THROWS_AS(find_golay_automorphism(impossible, kDefaultSeed, 2000), std::runtime_error);
}

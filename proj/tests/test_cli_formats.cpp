#include "doctest.h"
#include "orbilat/json_io.hpp"
#include "orbilat/root_system.hpp"

using namespace orbilat;

TEST_CASE("code JSON round trip") {
    CodeZp c = make_code(5, 4, {{1, 1, 2, 2}});
    auto j = code_to_json(c);
    CHECK(j["p"] == 5);
    CHECK(j["length"] == 4);
    CodeZp back = code_from_json(j);
    CHECK(back == c);
}

TEST_CASE("isometry JSON round trip") {
    LatticeIsometry g = coxeter_isometry(4);
    auto j = isometry_to_json(g);
    LatticeIsometry back = isometry_from_json(j);
    CHECK(back.lattice() == g.lattice());
    CHECK(back.matrix() == g.matrix());
    CHECK(back.order() == 4);
}

TEST_CASE("isometry JSON rejects non-isometries") {
    LatticeIsometry g = coxeter_isometry(3);
    auto j = isometry_to_json(g);
    j["matrix"][0][0] = "7";
    CHECK_THROWS_AS(isometry_from_json(j), std::invalid_argument);
}

TEST_CASE("lattice JSON uses fraction strings") {
    Lattice l(2, RatMat{{1, 0}, {0, 1}}, make_rat(2, 3));
    auto j = lattice_to_json(l);
    CHECK(j["inner_scale"] == "2/3");
    for (const auto& row : j["basis"])
        for (const auto& e : row) CHECK(e.is_string());
}

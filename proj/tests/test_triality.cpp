#include "doctest.h"
#include "orbilat/triality.hpp"

using namespace orbilat;

TEST_CASE("F, G, Z0 basics") {
    for (long k = 2; k <= 7; ++k) {
        CAPTURE(k);
        TrialityMatrices t = build_fgz(k);
        std::size_t n = static_cast<std::size_t>(k);
        CycloMat id = cyclo_identity(k, n);
        CycloMat fk = id, gk = id;
        for (long i = 0; i < k; ++i) {
            fk = cyclo_mat_mul(fk, t.f);
            gk = cyclo_mat_mul(gk, t.g);
        }
        CHECK(cyclo_mat_eq(fk, id));
        CHECK(cyclo_mat_eq(gk, id));
    }
}

TEST_CASE("powers of Z through Z0") {
    SUBCASE("k = 2: Z0^2 = 2I, i.e. Z^2 = I") {
        TrialityMatrices t = build_fgz(2);
        CycloMat z2 = cyclo_mat_mul(t.z0, t.z0);
        CycloMat expect = cyclo_mat_scale(cyclo_identity(2, 2), Rat(2));
        CHECK(cyclo_mat_eq(z2, expect));
    }
    SUBCASE("k = 4: Z0^4 = 16I, i.e. Z^4 = I") {
        TrialityMatrices t = build_fgz(4);
        CycloMat z2 = cyclo_mat_mul(t.z0, t.z0);
        CycloMat z4 = cyclo_mat_mul(z2, z2);
        CycloMat expect = cyclo_mat_scale(cyclo_identity(4, 4), Rat(16));
        CHECK(cyclo_mat_eq(z4, expect));
    }
    SUBCASE("k = 5: Z0^2 / k is the coordinate flip") {
        TrialityMatrices t = build_fgz(5);
        CycloMat z2 = cyclo_mat_mul(t.z0, t.z0);
        // (Z^2)_{ac} = [a + c = 0 mod k]
        for (std::size_t a = 1; a <= 5; ++a)
            for (std::size_t c = 1; c <= 5; ++c) {
                CycloElem expect = ((a + c) % 5 == 0) ? CycloElem::from_rat(5, Rat(5)) : CycloElem::zero(5);
                CHECK(z2[a - 1][c - 1] == expect);
            }
    }
}

TEST_CASE("triality identities for k = 2..9") {
    for (long k = 2; k <= 9; ++k) {
        CAPTURE(k);
        CHECK(verify_sfg(k));
        CHECK(verify_conjugation_relations(k));
        CHECK(verify_weight_grading(k));
    }
}

TEST_CASE("weight grading details at k = 3") {
    // conjugation by F scales E_{13} by w^2 and fixes diagonal matrices
    TrialityMatrices t = build_fgz(3);
    CycloMat e13(3, std::vector<CycloElem>(3, CycloElem::zero(3)));
    e13[0][2] = CycloElem::one(3);
    CycloMat fi(3, std::vector<CycloElem>(3, CycloElem::zero(3)));
    for (long j = 1; j <= 3; ++j) fi[j - 1][j - 1] = CycloElem::zeta(3, -j);
    CycloMat conj = cyclo_mat_mul(fi, cyclo_mat_mul(e13, t.f));
    CHECK(conj[0][2] == CycloElem::zeta(3, 2));
    CycloMat h(3, std::vector<CycloElem>(3, CycloElem::zero(3)));
    h[0][0] = CycloElem::one(3);
    h[1][1] = -CycloElem::one(3);
    CHECK(cyclo_mat_eq(cyclo_mat_mul(fi, cyclo_mat_mul(h, t.f)), h));
}

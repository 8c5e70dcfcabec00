#include <random>

#include "doctest.h"
#include "orbilat/cyclotomic.hpp"
#include "orbilat/normal_forms.hpp"

using namespace orbilat;

namespace {

IntMat random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

bool unimodular(const IntMat& u) {
    Int d = det_int(u);
    return d == 1 || d == -1;
}

// independent oracle: x in the integer row space of m, decided by a
// from-scratch gcd row reduction (no shared code with hnf)
bool in_integer_row_space(const IntMat& m, const std::vector<Int>& x) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Int> r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
        rows.push_back(std::move(r));
    }
    std::vector<Int> target = x;
    std::size_t pivot_rows = 0;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        // Euclid across the remaining rows until one nonzero entry is left
        while (true) {
            std::size_t a = rows.size(), b = rows.size();
            for (std::size_t i = pivot_rows; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (a == rows.size())
                    a = i;
                else {
                    b = i;
                    break;
                }
            }
            if (b == rows.size()) break;  // at most one nonzero left
            // reduce the larger entry by the smaller
            if (abs(rows[a][col]) > abs(rows[b][col])) std::swap(a, b);
            Int q = rows[b][col] / rows[a][col];
            for (std::size_t j = 0; j < m.cols(); ++j) rows[b][j] -= q * rows[a][j];
        }
        std::size_t piv = rows.size();
        for (std::size_t i = pivot_rows; i < rows.size(); ++i)
            if (rows[i][col] != 0) piv = i;
        if (piv == rows.size()) {
            if (target[col] != 0) return false;  // nothing can clear this column
            continue;
        }
        std::swap(rows[piv], rows[pivot_rows]);
        if (target[col] % rows[pivot_rows][col] != 0) return false;
        Int q = target[col] / rows[pivot_rows][col];
        for (std::size_t j = 0; j < m.cols(); ++j) target[j] -= q * rows[pivot_rows][j];
        ++pivot_rows;
    }
    for (const auto& v : target)
        if (v != 0) return false;
    return true;
}

bool same_row_space(const IntMat& a, const IntMat& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!in_integer_row_space(b, a.row(i))) return false;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!in_integer_row_space(a, b.row(i))) return false;
    return true;
}

// independent row-reduction oracle for small matrices: gcd of the pivot
// column entries must match the HNF pivot
Int column_gcd(const IntMat& m, std::size_t col) {
    Int g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, col).get_mpz_t());
    return g;
}

}  // namespace

TEST_CASE("hnf identity") {
    IntMat id = IntMat::identity(3);
    auto r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);
}

TEST_CASE("hnf small example against row-reduction oracle") {
    IntMat m{{2, 4}, {6, 8}};
    auto r = hnf(m);
    CHECK(r.u * m == r.h);
    CHECK(unimodular(r.u));
    // first pivot is the gcd of the first column entries in the row space:
    // gcd(2, 6) = 2
    CHECK(r.h(0, 0) == column_gcd(m, 0));
    CHECK(same_row_space(m, r.h));
}

TEST_CASE("hnf invariant under row permutation") {
    IntMat m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
    IntMat p{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(hnf(m).h == hnf(p * m).h);
}

TEST_CASE("hnf zero matrix") {
    IntMat z(2, 3);
    auto r = hnf(z);
    CHECK(r.h.is_zero());
}

TEST_CASE("snf examples") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        IntMat m{{2, 0}, {0, 3}};
        auto s = snf(m);
        CHECK(s.s(0, 0) == 1);
        CHECK(s.s(1, 1) == 6);
        CHECK(s.u * m * s.v == s.s);
    }
    SUBCASE("identity") {
        IntMat id = IntMat::identity(4);
        CHECK(snf(id).s == id);
    }
    SUBCASE("diag(2,4) stays") {
        IntMat m{{2, 0}, {0, 4}};
        auto s = snf(m);
        CHECK(s.s(0, 0) == 2);
        CHECK(s.s(1, 1) == 4);
        CHECK(s.u * m * s.v == s.s);
    }
}

TEST_CASE("hnf and snf on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMat m = random_int_matrix(rng, r, c);
        auto h = hnf(m);
        CHECK(h.u * m == h.h);
        CHECK(unimodular(h.u));
        CHECK(same_row_space(m, h.h));
        auto s = snf(m);
        CHECK(s.u * m * s.v == s.s);
        CHECK(unimodular(s.u));
        CHECK(unimodular(s.v));
        Int prev = 0;
        for (std::size_t i = 0; i < std::min(s.s.rows(), s.s.cols()); ++i) {
            Int d = s.s(i, i);
            CHECK(d >= 0);
            if (prev != 0 && d != 0) CHECK(d % prev == 0);
            for (std::size_t j = 0; j < s.s.cols(); ++j)
                if (j != i) CHECK(s.s(i, j) == 0);
            if (d != 0) prev = d;
        }
    }
}

TEST_CASE("cyclotomic minimal polynomial relations") {
    SUBCASE("k=3: z^2 + z + 1 = 0") {
        auto z = CycloElem::zeta(3);
        CHECK((z * z + z + CycloElem::one(3)).is_zero());
    }
    SUBCASE("k=4: z*z = -1") {
        auto z = CycloElem::zeta(4);
        CHECK(z * z == -CycloElem::one(4));
    }
    SUBCASE("k=5: z * z^4 = 1 and inverse") {
        auto z = CycloElem::zeta(5);
        CHECK(z * CycloElem::zeta(5, 4) == CycloElem::one(5));
        CHECK(cyclo_inv(z) == CycloElem::zeta(5, 4));
    }
}

TEST_CASE("cyclotomic ring identities for k = 2..12") {
    for (long k = 2; k <= 12; ++k) {
        CAPTURE(k);
        auto acc = CycloElem::zero(k);
        auto pow = CycloElem::one(k);
        auto z = CycloElem::zeta(k);
        for (long i = 0; i < k; ++i) {
            acc = acc + pow;
            pow = pow * z;
        }
        CHECK(acc.is_zero());     // sum of all k-th roots of unity
        CHECK(pow == CycloElem::one(k));  // z^k = 1
    }
}

TEST_CASE("cyclotomic inverses of random elements") {
    std::mt19937_64 rng(7);
    for (long k : {3L, 4L, 5L, 7L, 8L, 9L, 12L}) {
        const auto& field = CycloField::get(k);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Rat> c(field.degree());
            bool nonzero = false;
            for (auto& v : c) {
                v = make_rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
                if (v != 0) nonzero = true;
            }
            if (!nonzero) c[0] = 1;
            CycloElem a(field, c);
            CHECK(a * a.inverse() == CycloElem::one(k));
        }
    }
}

TEST_CASE("division by zero in the cyclotomic field") {
    CHECK_THROWS_WITH_AS(cyclo_inv(CycloElem::zero(5)), "division by zero in cyclotomic field", std::domain_error);
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rat("3/6") == make_rat(1, 2));
    CHECK(parse_rat("-4/2") == make_rat(-2));
    CHECK(rat_str(make_rat(5, 10)) == "1/2");
    CHECK(rat_str(make_rat(-7)) == "-7");
    CHECK_THROWS_AS(parse_rat("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

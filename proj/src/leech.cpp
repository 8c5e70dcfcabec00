#include "orbilat/leech.hpp"

#include <array>
#include <mutex>
#include <random>
#include <sstream>

#include "orbilat/enumerate.hpp"

namespace orbilat {

const Lattice& build_leech() {
    static Lattice leech = [] {
        const GolayCode& golay = GolayCode::instance();
        std::vector<RatVec> rows;
        // 2c for the Golay generators
        for (const auto& r : golay.generator_rows()) {
            RatVec v(24, Rat(0));
            for (int i = 0; i < 24; ++i) v[static_cast<std::size_t>(i)] = Rat(2 * r[static_cast<std::size_t>(i)]);
            rows.push_back(std::move(v));
        }
        // 4 D_24: 4(e_i - e_{i+1}) and 4(e_23 + e_24)
        for (int i = 0; i + 1 < 24; ++i) {
            RatVec v(24, Rat(0));
            v[static_cast<std::size_t>(i)] = 4;
            v[static_cast<std::size_t>(i) + 1] = -4;
            rows.push_back(std::move(v));
        }
        {
            RatVec v(24, Rat(0));
            v[22] = 4;
            v[23] = 4;
            rows.push_back(std::move(v));
        }
        // the odd-coset generator (-3, 1, ..., 1)
        {
            RatVec v(24, Rat(1));
            v[0] = -3;
            rows.push_back(std::move(v));
        }
        Lattice l = lattice_from_generators(24, rows, make_rat(1, 8));
        if (l.rank() != 24) throw std::logic_error("Leech construction: rank != 24");
        if (!l.is_even()) throw std::logic_error("Leech construction: not even");
        if (l.det_gram() != 1) throw std::logic_error("Leech construction: determinant != 1");
        if (!is_rootless(l)) throw std::logic_error("Leech construction: has roots");
        return l;
    }();
    return leech;
}

CycleType cycle_type_for_tag(const std::string& tag) {
    CycleType t;
    if (tag == "3B")
        t.cycles = {{1, 6}, {3, 6}};
    else if (tag == "5B")
        t.cycles = {{1, 4}, {5, 4}};
    else if (tag == "7B")
        t.cycles = {{1, 3}, {7, 3}};
    else if (tag == "11A")
        t.cycles = {{1, 2}, {11, 2}};
    else if (tag == "23A")
        t.cycles = {{1, 1}, {23, 1}};
    else
        throw std::invalid_argument("unknown coinvariant tag " + tag);
    return t;
}

CycleType cycle_type_of(const std::vector<int>& perm) {
    CycleType t;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        ++t.cycles[len];
    }
    return t;
}

std::vector<int> find_golay_automorphism(const CycleType& target, std::uint64_t seed, long budget) {
    const auto& gens = golay_aut_generators();
    std::mt19937_64 rng(seed);
    std::vector<int> cur(24);
    for (int i = 0; i < 24; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (long step = 0; step < budget; ++step) {
        const auto& g = gens[static_cast<std::size_t>(rng() % gens.size())];
        std::vector<int> next(24);
        for (int i = 0; i < 24; ++i) next[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])];
        cur = std::move(next);
        if (cycle_type_of(cur).cycles == target.cycles) {
            if (!GolayCode::instance().preserved_by(cur))
                throw std::logic_error("search produced a non-automorphism (fixture inconsistency)");
            return cur;
        }
    }
    throw std::runtime_error("automorphism search budget exceeded");
}

namespace {

// canonical Gauss-reduced form of a positive definite binary Gram matrix
std::array<Int, 3> reduce_binary_form(Int a, Int b, Int c) {
    // form a x^2 + 2b xy + c y^2; reduce to 0 <= 2b <= a <= c
    while (true) {
        if (a > c) {
            std::swap(a, c);
            b = -b;
        }
        // shift x -> x - t y to bring |b| <= a/2
        if (2 * abs(b) > a) {
            Int t;
            // round b / a to nearest
            Int num;
            if (b >= 0)
                num = b + a / 2;
            else
                num = b - a / 2;
            mpz_tdiv_q(t.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
            c = c - 2 * t * b + t * t * a;
            b = b - t * a;
            continue;
        }
        if (a > c) continue;
        if (b < 0) b = -b;  // x -> -x
        return {a, b, c};
    }
}

struct TagData {
    long p;
    std::size_t rank_coinv;
    std::vector<Int> disc_factors;
};

TagData tag_data(const std::string& tag) {
    if (tag == "3B") return {3, 12, std::vector<Int>(6, Int(3))};
    if (tag == "5B") return {5, 16, std::vector<Int>(4, Int(5))};
    if (tag == "7B") return {7, 18, std::vector<Int>(3, Int(7))};
    if (tag == "11A") return {11, 20, std::vector<Int>(2, Int(11))};
    if (tag == "23A") return {23, 22, std::vector<Int>(1, Int(23))};
    throw std::invalid_argument("unknown coinvariant tag " + tag);
}

void fail_invariant(const std::string& tag, const std::string& what) {
    throw std::runtime_error("coinvariant " + tag + ": invariant failed: " + what);
}

bool one_minus_g_dual_equals(const LatticeIsometry& g) {
    Lattice img = one_minus_g_image(g, dual(g.lattice()), 1);
    return img == g.lattice();
}

}  // namespace

CoinvariantClass coinvariant_class(const std::string& tag, std::uint64_t seed) {
    TagData td = tag_data(tag);
    std::vector<int> perm = find_golay_automorphism(cycle_type_for_tag(tag), seed);
    const Lattice& leech = build_leech();
    LatticeIsometry on_leech = isometry_from_permutation(leech, perm);
    Lattice fixed = fixed_sublattice(on_leech);
    Lattice coinv = coinvariant_lattice(on_leech);
    CoinvariantClass out{tag, perm, fixed, coinv, restrict_isometry(on_leech, coinv)};

    if (out.coinvariant.rank() != td.rank_coinv) fail_invariant(tag, "rank of coinvariant");
    if (out.fixed.rank() + out.coinvariant.rank() != 24) fail_invariant(tag, "rank split");
    DiscriminantGroup dc = discriminant_group(out.coinvariant);
    DiscriminantGroup df = discriminant_group(out.fixed);
    if (dc.invariant_factors != td.disc_factors) fail_invariant(tag, "discriminant group of coinvariant");
    if (dc.order != df.order) fail_invariant(tag, "discriminant orders of fixed and coinvariant parts");
    if (!is_rootless(out.coinvariant)) fail_invariant(tag, "rootlessness");
    if (out.action.order() != td.p) fail_invariant(tag, "order of restricted action");
    if (!is_fixed_point_free(out.action)) fail_invariant(tag, "fixed-point freeness of restricted action");

    if (tag == "11A") {
        QuadraticSpaceFp q = discriminant_form(out.coinvariant, 11);
        if (!singular_vectors(q).empty()) fail_invariant(tag, "nonzero singular vector present");
        if (quadratic_type(q) != QuadraticType::Minus) fail_invariant(tag, "discriminant form type");
        if (!one_minus_g_dual_equals(out.action)) fail_invariant(tag, "(1-g)L* = L");
    }
    if (tag == "23A") {
        QuadraticSpaceFp q = discriminant_form(out.coinvariant, 23);
        bool found_minus_one = false;
        for (long a = 1; a < 23; ++a) {
            if (q.q_of({a}) == 22) found_minus_one = true;
        }
        if (!found_minus_one) fail_invariant(tag, "q = -1 element");
        IntMat fg = to_int(out.fixed.gram());
        auto reduced = reduce_binary_form(fg(0, 0), fg(0, 1), fg(1, 1));
        auto expect = reduce_binary_form(4, 1, 6);
        if (reduced != expect) fail_invariant(tag, "fixed-lattice Gram class");
        if (!one_minus_g_dual_equals(out.action)) fail_invariant(tag, "(1-g)L* = L");
    }
    return out;
}

Lattice reconstruct_unimodular(const std::string& tag, std::uint64_t seed) {
    if (tag != "11A" && tag != "23A") throw std::invalid_argument("reconstruct_unimodular: tag must be 11A or 23A");
    CoinvariantClass cc = coinvariant_class(tag, seed);
    long p = tag_data(tag).p;
    std::vector<RatVec> sum_rows;
    for (std::size_t i = 0; i < cc.coinvariant.rank(); ++i) sum_rows.push_back(cc.coinvariant.basis().row(i));
    for (std::size_t i = 0; i < cc.fixed.rank(); ++i) sum_rows.push_back(cc.fixed.basis().row(i));
    Lattice x = lattice_from_generators(24, sum_rows, cc.coinvariant.inner_scale());
    if (x.rank() != 24) throw std::logic_error("reconstruct: direct sum not full rank");
    QuadraticSpaceFp q = discriminant_form(x, p);
    DiscriminantGroup dx = discriminant_group(x);

    std::vector<std::vector<long>> glue_coords;
    auto singular = singular_vectors(q);
    if (singular.empty()) throw std::runtime_error("reconstruct: no singular glue vector exists");
    if (q.dim == 2) {
        glue_coords.push_back(singular.front());
    } else if (q.dim == 4) {
        bool done = false;
        for (std::size_t i = 0; i < singular.size() && !done; ++i) {
            for (std::size_t j = 0; j < singular.size() && !done; ++j) {
                const auto& v1 = singular[i];
                const auto& v2 = singular[j];
                if (q.b_of(v1, v2) != 0) continue;
                // independence over F_p
                bool dependent = false;
                for (long s = 0; s < p && !dependent; ++s) {
                    bool eq = true;
                    for (std::size_t c = 0; c < v1.size(); ++c)
                        if ((s * v1[c] - v2[c]) % p != 0) eq = false;
                    if (eq) dependent = true;
                }
                if (dependent) continue;
                glue_coords.push_back(v1);
                glue_coords.push_back(v2);
                done = true;
            }
        }
        if (!done) throw std::runtime_error("reconstruct: no totally singular glue plane exists");
    } else {
        throw std::logic_error("reconstruct: unexpected discriminant dimension");
    }

    std::vector<RatVec> glue_vectors;
    for (const auto& coords : glue_coords) {
        RatVec v(x.ambient_dim(), Rat(0));
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(coords[i]) * dx.generators[i][j];
        glue_vectors.push_back(std::move(v));
    }
    Lattice u = glue(x, glue_vectors, /*require_integral=*/true);
    if (u.rank() != 24) throw std::logic_error("reconstruct: glued lattice not full rank");
    if (!u.is_even()) throw std::runtime_error("reconstruct: glued lattice not even");
    if (u.det_gram() != 1) throw std::runtime_error("reconstruct: glued lattice not unimodular");
    if (!is_rootless(u)) throw std::runtime_error("reconstruct: glued lattice has roots");
    return u;
}

const LeechFingerprint& leech_fingerprint(long p) {
    static std::mutex mutex;
    static std::map<long, LeechFingerprint> cache;
    if (p != 11 && p != 23) throw std::invalid_argument("leech_fingerprint: p must be 11 or 23");
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    CoinvariantClass cc = coinvariant_class(p == 11 ? "11A" : "23A");
    LeechFingerprint fp;
    fp.rank = static_cast<long>(cc.coinvariant.rank());
    fp.invariant_factors = discriminant_group(cc.coinvariant).invariant_factors;
    fp.qtype = quadratic_type(discriminant_form(cc.coinvariant, p));
    fp.one_minus_g_dual_is_l = one_minus_g_dual_equals(cc.action);
    fp.theta6 = theta_prefix(cc.coinvariant, 6);
    auto [pos, inserted] = cache.emplace(p, std::move(fp));
    return pos->second;
}

}  // namespace orbilat

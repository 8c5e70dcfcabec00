#include "orbilat/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbilat/enumerate.hpp"
#include "orbilat/leech.hpp"

namespace orbilat {

namespace {

long mod_p(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int pow_int(long b, long e) {
    Int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool sublattice_of(const Lattice& sub, const Lattice& super) {
    for (std::size_t i = 0; i < sub.rank(); ++i)
        if (!super.contains(sub.basis().row(i))) return false;
    return true;
}

}  // namespace

Rat epsilon_weight(long p, long m) {
    if (!is_prime(p) || m < 1) throw std::invalid_argument("epsilon_weight: p prime and m >= 1 required");
    return make_rat(m * (p + 1), 24 * p);
}

Int dim_t_squared(const LatticeIsometry& g, long s) {
    return index(r_lattice(g, s), g.lattice());
}

Rat qdim_squared(const LatticeIsometry& g, long s) {
    long p = g.order();
    long m = static_cast<long>(g.lattice().rank());
    if (!is_prime(p) || !is_fixed_point_free(g)) throw std::invalid_argument("qdim requires fixed-point-free prime order");
    if (m % (p - 1) != 0) throw std::invalid_argument("rank not divisible by p-1");
    Int disc = discriminant_group(g.lattice()).order;
    Int idx = dim_t_squared(g, s);
    Rat out = rat_frac(disc * idx, pow_int(p, m / (p - 1)));
    return out;
}

std::vector<RatVec> all_coset_reps(const DiscriminantGroup& d) {
    if (d.order > 200000) throw std::invalid_argument("discriminant group too large to enumerate");
    std::vector<RatVec> reps;
    std::size_t n = d.generators.empty() ? 0 : d.generators[0].size();
    reps.push_back(RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        long order = to_long(d.invariant_factors[i]);
        std::vector<RatVec> next;
        next.reserve(reps.size() * order);
        for (const auto& r : reps)
            for (long a = 0; a < order; ++a) {
                RatVec v = r;
                for (std::size_t j = 0; j < n; ++j) v[j] += Rat(a) * d.generators[i][j];
                next.push_back(std::move(v));
            }
        reps = std::move(next);
    }
    return reps;
}

ConformalWeightReport conformal_weight_data(const LatticeIsometry& g) {
    const Lattice& l = g.lattice();
    long p = g.order();
    long m = static_cast<long>(l.rank());
    ConformalWeightReport rep;
    rep.p = p;
    rep.eps = epsilon_weight(p, m);
    for (long i = 0; i < p; ++i) rep.twisted_ladder.push_back(rep.eps + make_rat(i, p));
    Lattice img = one_minus_g_image(g, dual(l), 1);
    if (!sublattice_of(img, l)) throw std::invalid_argument("conformal_weight_data requires (1-g)L* in L");

    DiscriminantGroup d = discriminant_group(l);
    rep.corollary_holds = true;
    rep.has_even_norm_coset = false;
    // enumerate coset coordinate tuples alongside their representatives
    std::vector<long> coords(d.invariant_factors.size(), 0);
    std::size_t n = l.ambient_dim();
    auto next = [&]() -> bool {
        for (std::size_t i = coords.size(); i-- > 0;) {
            if (++coords[i] < to_long(d.invariant_factors[i])) return true;
            coords[i] = 0;
        }
        return false;
    };
    while (next()) {
        RatVec v(n, Rat(0));
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] += Rat(coords[i]) * d.generators[i][j];
        Rat cap = 2 * rep.eps + 2;
        std::optional<Rat> mn;
        for (int tries = 0; tries < 3 && !mn; ++tries) {
            mn = min_norm(l, cap, v);
            cap *= 2;
        }
        CosetWeight cw;
        cw.coords = coords;
        if (!mn) {
            rep.corollary_holds = false;
            cw.min_norm = Rat(-1);
            cw.weight = Rat(-1);
            rep.untwisted.push_back(cw);
            continue;
        }
        cw.min_norm = *mn;
        cw.weight = *mn / 2;
        if (is_integer(cw.min_norm) && cw.min_norm.get_num() % 2 == 0) rep.has_even_norm_coset = true;
        bool in_ladder = std::find(rep.twisted_ladder.begin(), rep.twisted_ladder.end(), cw.weight) !=
                         rep.twisted_ladder.end();
        if (!in_ladder) rep.corollary_holds = false;
        rep.untwisted.push_back(std::move(cw));
    }
    return rep;
}

ChabResult chab_extract(const LatticeIsometry& g, const RatVec& lambda) {
    const Lattice& l = g.lattice();
    long p = g.order();
    long m = static_cast<long>(l.rank());
    if (!l.is_even()) throw std::invalid_argument("chab_extract: lattice not even");
    if (!is_rootless(l)) throw std::invalid_argument("chab_extract: lattice has roots");
    if (!is_prime(p) || p == 2) throw std::invalid_argument("chab_extract: order of g is not an odd prime");
    if (!is_fixed_point_free(g)) throw std::invalid_argument("chab_extract: g has fixed points");
    if (m % (p - 1) != 0) throw std::invalid_argument("chab_extract: rank not divisible by p-1");
    if (!dual(l).contains(lambda)) throw std::invalid_argument("chab_extract: lambda not in L*");
    {
        RatVec pl(lambda.size());
        for (std::size_t i = 0; i < lambda.size(); ++i) pl[i] = Rat(p) * lambda[i];
        if (!l.contains(pl)) throw std::invalid_argument("chab_extract: p*lambda not in L");
    }
    if (l.contains(lambda)) throw std::invalid_argument("chab_extract: lambda lies in L");
    if (!stabilizes_coset(g, lambda)) throw std::invalid_argument("chab_extract: g does not stabilize lambda + L");

    Lattice n_lat = glue(l, {lambda});
    Int n2 = count_of_norm(n_lat, Rat(2));
    if (n2 != Int(p) * m) {
        std::ostringstream os;
        os << "chab_extract: |N(2)| = " << n2 << " but p*m = " << p * m;
        throw std::invalid_argument(os.str());
    }
    long t = m / (p - 1);

    // slice (lambda + L)(2) decomposes into t affine cycles
    std::vector<RatVec> slice;
    for (const auto& v : enumerate_up_to_norm(l, Rat(2), lambda))
        if (l.inner(v, v) == 2) slice.push_back(v);
    RootDecomposition dec = decompose_root_set(slice, p, l.inner_scale());
    if (!dec.leftover.empty() || static_cast<long>(dec.components.size()) != t)
        throw std::invalid_argument("chab_extract: not an A_{p-1}^t configuration");

    // R = span of the bases; nu maps into D(R) = Z_p^t via the first weights
    std::vector<RatVec> all_roots;
    std::vector<RatVec> first_weights;
    for (const auto& comp : dec.components) {
        for (const auto& r : comp.base) all_roots.push_back(r);
        first_weights.push_back(weight_of_base(comp.base, 1, l.inner_scale()));
    }
    RatMat rmat(all_roots.size(), l.ambient_dim());
    for (std::size_t i = 0; i < all_roots.size(); ++i) rmat.set_row(i, all_roots[i]);
    Lattice r_lat(l.ambient_dim(), rmat, l.inner_scale());
    if (r_lat.rank() != static_cast<std::size_t>(m)) throw std::invalid_argument("chab_extract: root span not full");

    auto nu = [&](const RatVec& v) -> std::vector<long> {
        std::vector<long> x(static_cast<std::size_t>(t));
        for (long i = 0; i < t; ++i) {
            Rat pair = l.inner(v, first_weights[static_cast<std::size_t>(i)]);
            Rat xi = -Rat(p) * pair;
            if (!is_integer(xi)) throw std::invalid_argument("chab_extract: N not contained in R*");
            Int red = xi.get_num() % p;
            x[static_cast<std::size_t>(i)] = mod_p(static_cast<long>(red.get_si()), p);
        }
        return x;
    };

    std::vector<std::vector<long>> code_rows;
    for (std::size_t i = 0; i < n_lat.rank(); ++i) code_rows.push_back(nu(n_lat.basis().row(i)));
    CodeZp code = make_code(p, t, code_rows);
    {
        Int expected = pow_int(p, code.dim());
        if (expected != index(r_lat, n_lat)) throw std::invalid_argument("chab_extract: |N : R| != |C|");
    }

    // e_i: rotation offset of g on each affine cycle
    std::vector<long> e(static_cast<std::size_t>(t), 0);
    for (long i = 0; i < t; ++i) {
        const auto& comp = dec.components[static_cast<std::size_t>(i)];
        std::vector<RatVec> cycle = comp.base;
        cycle.push_back(comp.negated_highest);
        RatVec img = g.apply(cycle[0]);
        long shift = -1;
        for (std::size_t j = 0; j < cycle.size(); ++j)
            if (cycle[j] == img) shift = static_cast<long>(j);
        if (shift < 0) throw std::invalid_argument("chab_extract: g does not preserve a component cycle");
        for (std::size_t a = 0; a < cycle.size(); ++a) {
            if (!(g.apply(cycle[a]) == cycle[(a + static_cast<std::size_t>(shift)) % cycle.size()]))
                throw std::invalid_argument("chab_extract: g is not a rotation of a component cycle");
        }
        e[static_cast<std::size_t>(i)] = shift;
    }
    for (long ei : e)
        if (std::gcd(ei, p) != 1) throw std::invalid_argument("chab_extract: exponent not a unit");
    // e must pair to zero with the code
    for (const auto& row : code.gen) {
        long s = 0;
        for (long i = 0; i < t; ++i) s = mod_p(s + row[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)], p);
        if (s != 0) throw std::invalid_argument("chab_extract: recovered e not in C-perp");
    }

    ChabResult out;
    out.code = code;
    out.e = e;
    for (auto& comp : dec.components) out.bases.push_back(comp.base);
    out.n_lattice = n_lat;

    // invariant fingerprint of construct_B(code) against L
    ConstructionContext ctx = make_context(p, t);
    Lattice lb = construct_B(ctx, code);
    out.fingerprint_match = lb.rank() == l.rank() && lb.det_gram() == l.det_gram();
    if (out.fingerprint_match) {
        auto da = discriminant_group(lb), db = discriminant_group(l);
        out.fingerprint_match = da.invariant_factors == db.invariant_factors;
    }
    if (out.fingerprint_match) out.fingerprint_match = is_rootless(lb);
    if (out.fingerprint_match) out.fingerprint_match = theta_prefix(lb, 4) == theta_prefix(l, 4);
    return out;
}

namespace {

// nonzero p-torsion coset representatives, projectively deduplicated,
// ordered lexicographically on generator coordinates
std::vector<std::pair<std::vector<long>, RatVec>> p_torsion_reps(const DiscriminantGroup& d, long p,
                                                                 std::size_t ambient) {
    std::vector<std::size_t> idx;
    std::vector<RatVec> h;
    for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
        if (d.invariant_factors[i] % p == 0) {
            idx.push_back(i);
            Int f = d.invariant_factors[i] / p;
            RatVec v(ambient, Rat(0));
            for (std::size_t j = 0; j < ambient; ++j) v[j] = Rat(f) * d.generators[i][j];
            h.push_back(std::move(v));
        }
    }
    std::vector<std::pair<std::vector<long>, RatVec>> reps;
    std::vector<long> a(idx.size(), 0);
    auto next = [&]() -> bool {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (++a[i] < p) return true;
            a[i] = 0;
        }
        return false;
    };
    while (next()) {
        // projective normalisation: first nonzero coordinate equals 1
        std::size_t fn = 0;
        while (fn < a.size() && a[fn] == 0) ++fn;
        if (fn == a.size() || a[fn] != 1) continue;
        RatVec v(ambient, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) v[j] += Rat(a[i]) * h[i][j];
        reps.emplace_back(a, v);
    }
    return reps;
}

}  // namespace

ExtraAutVerdict decide_extra(const LatticeIsometry& g) {
    const Lattice& l = g.lattice();
    long p = g.order();
    long m = static_cast<long>(l.rank());
    if (!l.is_even()) throw std::invalid_argument("decide_extra: lattice not even");
    if (!is_rootless(l)) throw std::invalid_argument("decide_extra: lattice has roots");
    if (!is_prime(p)) throw std::invalid_argument("decide_extra: order of g is not prime");
    if (!is_fixed_point_free(g)) throw std::invalid_argument("decide_extra: g has fixed points");

    ExtraAutVerdict verdict;
    DiscriminantGroup d = discriminant_group(l);

    if (p == 2) {
        // the only fixed-point-free involution is -1
        auto reps = p_torsion_reps(d, 2, l.ambient_dim());
        for (const auto& [coords, lam] : reps) {
            Int c = count_of_norm(l, Rat(2), lam);
            if (c == Int(2) * m) {
                verdict.has_extra = true;
                verdict.branch = "B-construction(p=2)";
                verdict.witness_coset = lam;
                std::ostringstream os;
                os << "|(lambda+L)(2)| = " << c << " = 2m";
                verdict.detail = os.str();
                return verdict;
            }
        }
        verdict.detail = "no 2-torsion coset with |(lambda+L)(2)| = 2m";
        return verdict;
    }

    if (m % (p - 1) == 0) {
        auto reps = p_torsion_reps(d, p, l.ambient_dim());
        for (const auto& [coords, lam] : reps) {
            if (!stabilizes_coset(g, lam)) continue;
            Lattice n_lat = glue(l, {lam});
            if (count_of_norm(n_lat, Rat(2)) != Int(p) * m) continue;
            try {
                ChabResult chab = chab_extract(g, lam);
                verdict.has_extra = true;
                verdict.branch = "B-construction(p odd)";
                verdict.witness_coset = lam;
                verdict.witness_chab = std::move(chab);
                verdict.detail = "code extracted via the norm-2 coset configuration";
                return verdict;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
    }

    if (p == 11 || p == 23) {
        const LeechFingerprint& fp = leech_fingerprint(p);
        bool match = (m == fp.rank);
        if (match) match = d.invariant_factors == fp.invariant_factors;
        if (match) {
            Lattice img = one_minus_g_image(g, dual(l), 1);
            match = (img == l) == fp.one_minus_g_dual_is_l;
        }
        if (match) {
            QuadraticSpaceFp q = discriminant_form(l, p);
            match = quadratic_type(q) == fp.qtype;
        }
        if (match) match = theta_prefix(l, 6) == fp.theta6;
        if (match) {
            verdict.has_extra = true;
            verdict.branch = (p == 11) ? "Leech-11A" : "Leech-23A";
            verdict.detail = "invariant fingerprint matches the Leech coinvariant";
            return verdict;
        }
        verdict.detail = "no qualifying coset; Leech fingerprint mismatch";
        return verdict;
    }

    verdict.detail = "no qualifying coset";
    return verdict;
}

std::vector<OrbifoldParams> case2_parameter_table(long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("case2_parameter_table: odd prime required");
    std::vector<OrbifoldParams> rows;
    // eps = 1 - 1/p: m = 24(p-1)/(p+1), |D| = p^{m/(p-1)}
    if ((24 * (p - 1)) % (p + 1) == 0) {
        long m = 24 * (p - 1) / (p + 1);
        if (m >= 1 && m % (p - 1) == 0) {
            OrbifoldParams r;
            r.p = p;
            r.m = m;
            r.eps = epsilon_weight(p, m);
            r.case_tag = "eps=1-1/p";
            r.t = m / (p - 1);
            r.disc_rank = r.t;
            r.disc_order = pow_int(p, r.t);
            // |D| = p^t = p^{2 + t - 2 dim C} forces dim C = 1 when a code
            // realisation exists (p = 3, 5, 7)
            if (p <= 7) r.dim_c = 1;
            rows.push_back(std::move(r));
        }
    }
    // eps = 1: m = 24p/(p+1), |D| = p^{m/(p-1)} / t^2 with t = m/(p-1) = p^a
    if ((24 * p) % (p + 1) == 0) {
        long m = 24 * p / (p + 1);
        if (m >= 1 && m % (p - 1) == 0) {
            long t = m / (p - 1);
            long a = 0, tt = t;
            while (tt % p == 0) {
                tt /= p;
                ++a;
            }
            if (tt == 1) {  // t is a power of p, else |D| is not integral
                OrbifoldParams r;
                r.p = p;
                r.m = m;
                r.eps = epsilon_weight(p, m);
                r.case_tag = "eps=1";
                r.t = t;
                r.disc_rank = t - 2 * a;
                r.disc_order = pow_int(p, r.disc_rank);
                r.dim_c = a + 1;
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

WeightOneDim orbifold_weight_one_dim(long rank_fixed, long rank_coinv, long p) {
    if (p < 2 || rank_coinv % (p - 1) != 0)
        throw std::invalid_argument("orbifold_weight_one_dim: rank_coinv must be divisible by p-1");
    WeightOneDim out;
    out.total = rank_fixed + (p - 1) * (rank_coinv / (p - 1));
    out.is_24 = (out.total == 24);
    return out;
}

}  // namespace orbilat

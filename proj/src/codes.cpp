#include "orbilat/codes.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace orbilat {

namespace {

long mod_p(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

long inv_mod(long a, long p) {
    long r = 1, b = mod_p(a, p), e = p - 2;  // p prime
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// RREF over Z_p; returns pivot columns
std::vector<long> rref_mod(std::vector<std::vector<long>>& rows, long p, long t) {
    std::vector<long> pivots;
    std::size_t r = 0;
    for (long c = 0; c < t && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        long inv = inv_mod(rows[r][c], p);
        for (long j = 0; j < t; ++j) rows[r][j] = rows[r][j] * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            long f = rows[i][c];
            for (long j = 0; j < t; ++j) rows[i][j] = mod_p(rows[i][j] - f * rows[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

long dot_mod(const std::vector<long>& a, const std::vector<long>& b, long p) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % p;
    return s;
}

}  // namespace

CodeZp make_code(long p, long t, const std::vector<std::vector<long>>& rows) {
    if (p < 2) throw std::invalid_argument("p must be prime >= 2");
    CodeZp c;
    c.p = p;
    c.t = t;
    std::vector<std::vector<long>> work;
    for (const auto& r : rows) {
        if (static_cast<long>(r.size()) != t) throw std::invalid_argument("generator row length mismatch");
        std::vector<long> w(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = mod_p(r[i], p);
        work.push_back(std::move(w));
    }
    rref_mod(work, p, t);
    c.gen = std::move(work);
    return c;
}

std::vector<std::vector<long>> codewords(const CodeZp& c) {
    std::vector<std::vector<long>> words;
    words.emplace_back(c.t, 0);
    for (const auto& g : c.gen) {
        std::vector<std::vector<long>> next;
        next.reserve(words.size() * c.p);
        for (const auto& w : words)
            for (long m = 0; m < c.p; ++m) {
                std::vector<long> v(w);
                for (long j = 0; j < c.t; ++j) v[j] = mod_p(v[j] + m * g[j], c.p);
                next.push_back(std::move(v));
            }
        words = std::move(next);
    }
    return words;
}

CodeZp dual_code(const CodeZp& c) {
    // kernel of gen over Z_p: standard pivot/free construction
    std::vector<std::vector<long>> rows = c.gen;
    std::vector<long> pivots = rref_mod(rows, c.p, c.t);
    std::vector<bool> is_piv(c.t, false);
    for (long p_col : pivots) is_piv[p_col] = true;
    std::vector<std::vector<long>> duals;
    for (long f = 0; f < c.t; ++f) {
        if (is_piv[f]) continue;
        std::vector<long> v(c.t, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod_p(-rows[i][f], c.p);
        duals.push_back(std::move(v));
    }
    return make_code(c.p, c.t, duals);
}

bool is_self_orthogonal(const CodeZp& c) {
    for (std::size_t i = 0; i < c.gen.size(); ++i)
        for (std::size_t j = i; j < c.gen.size(); ++j)
            if (dot_mod(c.gen[i], c.gen[j], c.p) != 0) return false;
    return true;
}

long hamming_weight(const std::vector<long>& w) {
    long n = 0;
    for (long v : w)
        if (v != 0) ++n;
    return n;
}

std::map<long, Int> weight_distribution(const CodeZp& c) {
    double size = 1;
    for (long i = 0; i < c.dim(); ++i) size *= c.p;
    if (size > 1e7) throw std::invalid_argument("weight_distribution: enumeration budget exceeded");
    std::map<long, Int> dist;
    for (const auto& w : codewords(c)) dist[hamming_weight(w)] += 1;
    return dist;
}

long max_weight_in_dual(const CodeZp& c) {
    auto d = weight_distribution(dual_code(c));
    return d.rbegin()->first;
}

CodeZp apply_monomial(const CodeZp& c, const MonomialMap& f) {
    std::vector<std::vector<long>> rows;
    for (const auto& g : c.gen) {
        std::vector<long> v(c.t, 0);
        for (long i = 0; i < c.t; ++i) v[f.perm[i]] = mod_p(f.signs[i] * g[i], c.p);
        rows.push_back(std::move(v));
    }
    return make_code(c.p, c.t, rows);
}

namespace {

long sign_normal(long e, long p) { return e == 0 ? 0 : std::min(e, p - e); }

// multiset of sign-normalised entries of one coordinate over all codewords
std::vector<long> column_profile(const std::vector<std::vector<long>>& words, long col, long p) {
    std::vector<long> prof;
    prof.reserve(words.size());
    for (const auto& w : words) prof.push_back(sign_normal(w[col], p));
    std::sort(prof.begin(), prof.end());
    return prof;
}

struct EquivSearch {
    long p, t;
    std::vector<std::vector<long>> words_a, words_b;
    std::vector<std::vector<long>> prof_a, prof_b;
    std::vector<int> perm, signs;
    std::vector<bool> used;

    bool partial_ok(long k) {
        // multiset of signed projections of words_a onto coords 0..k must
        // equal multiset of projections of words_b onto their images
        std::vector<std::vector<long>> pa, pb;
        pa.reserve(words_a.size());
        pb.reserve(words_b.size());
        for (const auto& w : words_a) {
            std::vector<long> v(k + 1);
            for (long i = 0; i <= k; ++i) v[i] = mod_p(signs[i] * w[i], p);
            pa.push_back(std::move(v));
        }
        for (const auto& w : words_b) {
            std::vector<long> v(k + 1);
            for (long i = 0; i <= k; ++i) v[i] = w[perm[i]];
            pb.push_back(std::move(v));
        }
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        return pa == pb;
    }

    bool dfs(long k) {
        if (k == t) return true;
        for (long img = 0; img < t; ++img) {
            if (used[img] || prof_a[k] != prof_b[img]) continue;
            used[img] = true;
            perm[k] = img;
            for (int s : {1, -1}) {
                signs[k] = s;
                if (partial_ok(k) && dfs(k + 1)) return true;
            }
            used[img] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<MonomialMap> monomial_equivalent(const CodeZp& a, const CodeZp& b) {
    if (a.p != b.p || a.t != b.t || a.dim() != b.dim()) return std::nullopt;
    EquivSearch s;
    s.p = a.p;
    s.t = a.t;
    s.words_a = codewords(a);
    s.words_b = codewords(b);
    std::sort(s.words_a.begin(), s.words_a.end());
    std::sort(s.words_b.begin(), s.words_b.end());
    for (long i = 0; i < a.t; ++i) {
        s.prof_a.push_back(column_profile(s.words_a, i, a.p));
        s.prof_b.push_back(column_profile(s.words_b, i, a.p));
    }
    {
        auto pa = s.prof_a, pb = s.prof_b;
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return std::nullopt;
    }
    s.perm.assign(a.t, 0);
    s.signs.assign(a.t, 1);
    s.used.assign(a.t, false);
    if (!s.dfs(0)) return std::nullopt;
    MonomialMap f{s.perm, s.signs};
    if (!(apply_monomial(a, f) == b)) throw std::logic_error("equivalence witness failed verification");
    return f;
}

Rat codeword_coset_norm(long p, const std::vector<long>& word) {
    Rat norm = 0;
    for (long e : word) {
        long n = std::min(e, p - e);
        if (e == 0) n = 0;
        norm += make_rat(n * (p - n), p);
    }
    return norm;
}

bool code_gives_rootless_b(const CodeZp& c) {
    for (const auto& w : codewords(c)) {
        if (hamming_weight(w) == 0) continue;
        if (codeword_coset_norm(c.p, w) == 2) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    Clock::time_point start = Clock::now();
    double limit;
    explicit Budget(double seconds) : limit(seconds) {}
    bool exceeded() const {
        if (limit <= 0) return false;
        return std::chrono::duration<double>(Clock::now() - start).count() > limit;
    }
};

// fingerprint invariant under signed permutations
std::string code_fingerprint(const CodeZp& c) {
    auto words = codewords(c);
    std::map<long, long> wd;
    for (const auto& w : words) ++wd[hamming_weight(w)];
    std::vector<std::vector<long>> profs;
    for (long i = 0; i < c.t; ++i) profs.push_back(column_profile(words, i, c.p));
    std::sort(profs.begin(), profs.end());
    std::string s;
    for (auto& [w, n] : wd) s += std::to_string(w) + ":" + std::to_string(n) + ";";
    s += "|";
    for (auto& pr : profs) {
        for (long v : pr) s += std::to_string(v) + ",";
        s += ";";
    }
    return s;
}

}  // namespace

ClassifyResult classify_codes(long p, long t, long dim, bool require_self_orthogonal, bool require_b_rootless,
                              double budget_seconds) {
    Budget budget(budget_seconds);
    ClassifyResult out;
    if (dim < 1 || dim > t) throw std::invalid_argument("classify_codes: bad dimension");

    auto next_vec = [&](std::vector<long>& v) -> bool {
        for (long i = t - 1; i >= 0; --i) {
            if (++v[i] < p) return true;
            v[i] = 0;
        }
        return false;
    };

    auto word_ok = [&](const std::vector<long>& v) {
        if (require_self_orthogonal && dot_mod(v, v, p) != 0) return false;
        if (require_b_rootless && codeword_coset_norm(p, v) == 2) return false;
        return true;
    };

    // Stage 1: one-dimensional codes up to equivalence. Any code class has a
    // representative containing one of these as a subcode, so they anchor
    // the search. Canonical key: the minimum over scalar multiples of the
    // sorted sign-normalised entry multiset.
    std::map<std::vector<long>, std::vector<long>> stage1;  // key -> representative vector
    {
        std::vector<long> v(t, 0);
        while (next_vec(v)) {
            if (v[std::find_if(v.begin(), v.end(), [](long e) { return e != 0; }) - v.begin()] != 1)
                continue;  // scalar-normalise: first nonzero entry 1
            bool ok = true;
            for (long s = 1; s < p && ok; ++s) {
                std::vector<long> sv(v);
                for (auto& e : sv) e = e * s % p;
                ok = word_ok(sv);
            }
            if (!ok) continue;
            std::vector<long> key;
            for (long s = 1; s < p; ++s) {
                std::vector<long> prof;
                for (long e : v) prof.push_back(sign_normal(e * s % p, p));
                std::sort(prof.begin(), prof.end());
                if (key.empty() || prof < key) key = prof;
            }
            auto it = stage1.find(key);
            if (it == stage1.end()) stage1.emplace(key, v);
        }
    }

    // Stages 2..dim: grow subspaces above each anchor, deduplicating by the
    // canonical RREF generator matrix at every level.
    std::set<std::vector<std::vector<long>>> level;
    for (auto& [key, v] : stage1) {
        if (dim == 1) {
            level.insert(make_code(p, t, {v}).gen);
        } else {
            level.insert({v});  // anchors kept unreduced; RREF applied on extension
        }
    }
    bool complete = true;
    for (long d = 2; d <= dim && complete; ++d) {
        std::set<std::vector<std::vector<long>>> next;
        for (const auto& rows : level) {
            if (budget.exceeded()) {
                complete = false;
                break;
            }
            // current span words for incremental checks
            CodeZp cur = make_code(p, t, rows);
            auto words = codewords(cur);
            std::vector<long> v(t, 0);
            while (next_vec(v)) {
                // scalar-normalise the new generator
                std::size_t fn = 0;
                while (fn < v.size() && v[fn] == 0) ++fn;
                if (v[fn] != 1) continue;
                if (require_self_orthogonal) {
                    if (dot_mod(v, v, p) != 0) continue;
                    bool orth = true;
                    for (const auto& r : rows)
                        if (dot_mod(v, r, p) != 0) {
                            orth = false;
                            break;
                        }
                    if (!orth) continue;
                }
                // independence: reduce v against the RREF of cur
                {
                    std::vector<long> red(v);
                    for (std::size_t ri = 0; ri < cur.gen.size(); ++ri) {
                        // pivot of row ri
                        long pc = 0;
                        while (pc < t && cur.gen[ri][pc] == 0) ++pc;
                        if (pc < t && red[pc] != 0) {
                            long f = red[pc];
                            for (long j = 0; j < t; ++j) red[j] = mod_p(red[j] - f * cur.gen[ri][j], p);
                        }
                    }
                    if (std::all_of(red.begin(), red.end(), [](long e) { return e == 0; })) continue;
                }
                if (require_b_rootless) {
                    bool clean = true;
                    for (const auto& w : words) {
                        for (long m = 1; m < p && clean; ++m) {
                            std::vector<long> nw(t);
                            for (long j = 0; j < t; ++j) nw[j] = mod_p(w[j] + m * v[j], p);
                            if (codeword_coset_norm(p, nw) == 2) clean = false;
                        }
                        if (!clean) break;
                    }
                    if (!clean) continue;
                }
                std::vector<std::vector<long>> ext(rows);
                ext.push_back(v);
                next.insert(make_code(p, t, ext).gen);
            }
        }
        level = std::move(next);
    }
    out.complete = complete;

    // fingerprint buckets, then exact equivalence within each bucket
    std::map<std::string, std::vector<CodeZp>> buckets;
    for (const auto& rows : level) {
        CodeZp c = make_code(p, t, rows);
        if (c.dim() != dim) continue;
        if (require_self_orthogonal && !is_self_orthogonal(c)) continue;
        if (require_b_rootless && !code_gives_rootless_b(c)) continue;
        buckets[code_fingerprint(c)].push_back(c);
    }
    for (auto& [fp, cs] : buckets) {
        std::vector<CodeZp> reps;
        for (const auto& c : cs) {
            if (budget.exceeded()) {
                out.complete = false;
                break;
            }
            bool found = false;
            for (auto& r : reps)
                if (monomial_equivalent(c, r)) {
                    found = true;
                    if (c.gen < r.gen) r = c;  // keep the lexicographically smallest representative
                    break;
                }
            if (!found) reps.push_back(c);
        }
        for (auto& r : reps) out.classes.push_back(r);
    }
    std::sort(out.classes.begin(), out.classes.end(), [](const CodeZp& a, const CodeZp& b) { return a.gen < b.gen; });
    return out;
}

}  // namespace orbilat

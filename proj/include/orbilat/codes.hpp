#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "orbilat/matrix.hpp"

namespace orbilat {

// Linear code over Z_p with generator matrix kept in reduced row echelon
// form (entries in [0, p)). p = 2 is allowed for the binary weight checks;
// the lattice constructions only use odd p.
struct CodeZp {
    long p = 3;
    long t = 0;                           // length
    std::vector<std::vector<long>> gen;   // RREF rows

    long dim() const { return static_cast<long>(gen.size()); }
    bool operator==(const CodeZp& o) const { return p == o.p && t == o.t && gen == o.gen; }
};

CodeZp make_code(long p, long t, const std::vector<std::vector<long>>& rows);

std::vector<std::vector<long>> codewords(const CodeZp& c);  // all p^dim words

CodeZp dual_code(const CodeZp& c);

bool is_self_orthogonal(const CodeZp& c);

long hamming_weight(const std::vector<long>& w);

// full enumeration; throws if p^dim exceeds the budget of 10^7 words
std::map<long, Int> weight_distribution(const CodeZp& c);

long max_weight_in_dual(const CodeZp& c);

// signed coordinate permutation: word w maps to w' with
// w'[perm[i]] = signs[i] * w[i] (signs in {+1,-1})
struct MonomialMap {
    std::vector<int> perm;
    std::vector<int> signs;
};

CodeZp apply_monomial(const CodeZp& c, const MonomialMap& f);

std::optional<MonomialMap> monomial_equivalent(const CodeZp& a, const CodeZp& b);

// Minimum norm of the Construction-B coset of a codeword:
// sum_i n(c_i)(p - n(c_i))/p over nonzero entries, with n(e) = min(e, p-e).
// L_B(C) is rootless iff no nonzero codeword has coset norm exactly 2.
Rat codeword_coset_norm(long p, const std::vector<long>& word);
bool code_gives_rootless_b(const CodeZp& c);

struct ClassifyResult {
    std::vector<CodeZp> classes;  // one representative per equivalence class
    bool complete = true;         // false if the time budget ran out
};

// Exhaustive classification of self-orthogonal [t, dim] codes over Z_p up to
// signed-permutation equivalence, optionally filtered by the rootless-B
// predicate. budget_seconds <= 0 means unlimited.
ClassifyResult classify_codes(long p, long t, long dim, bool require_self_orthogonal, bool require_b_rootless,
                              double budget_seconds = 0);

}  // namespace orbilat

#include "orbilat/root_system.hpp"

#include <algorithm>
#include <map>

namespace orbilat {

TypeALattice make_type_a(long k) {
    if (k < 2) throw std::invalid_argument("type A requires k >= 2");
    std::size_t n = static_cast<std::size_t>(k);
    RatMat basis(n - 1, n);
    TypeALattice out;
    out.k = k;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        basis(i, i) = 1;
        basis(i, i + 1) = -1;
        RatVec root(n, Rat(0));
        root[i] = 1;
        root[i + 1] = -1;
        out.simple_roots.push_back(root);
    }
    out.lattice = Lattice(n, basis);
    return out;
}

RatVec fundamental_weight(long k, long j) {
    if (j < 1 || j > k - 1) throw std::invalid_argument("fundamental weight index out of range");
    std::size_t n = static_cast<std::size_t>(k);
    RatVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
        long num = (static_cast<long>(i) < j) ? (k - j) : -j;
        w[i] = make_rat(num, k);
    }
    return w;
}

RatVec weyl_vector(long k) {
    std::size_t n = static_cast<std::size_t>(k);
    RatVec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = make_rat(k - 1 - 2 * static_cast<long>(i), 2);
    return r;
}

LatticeIsometry coxeter_isometry(long k) {
    TypeALattice a = make_type_a(k);
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % k);
    return isometry_from_permutation(a.lattice, perm);
}

bool check_rho_pairing(long k) {
    TypeALattice a = make_type_a(k);
    RatVec rho = weyl_vector(k);
    // roots are v_i - v_j, so (rho | v_i - v_j) = rho_i - rho_j
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            if (i == j) continue;
            Rat pair = rho[static_cast<std::size_t>(i)] - rho[static_cast<std::size_t>(j)];
            if (!is_integer(pair)) return false;
            Int v = pair.get_num() % k;
            if (v == 0) return false;
            Int av = v < 0 ? Int(-v) : v;
            if (av < 1 || av > k - 1) return false;
        }
    return true;
}

namespace {

bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

RootDecomposition decompose_root_set(const std::vector<RatVec>& x, long p, const Rat& inner_scale) {
    std::size_t n = x.size();
    for (const auto& v : x) {
        Rat nn = inner_scale * dot(v, v);
        if (nn != 2) throw std::invalid_argument("decompose_root_set: vector of norm != 2");
    }
    // adjacency under inner product -1
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat ip = inner_scale * dot(x[i], x[j]);
            if (ip == -1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            } else if (ip == 1 || ip == 2 || ip == -2) {
                throw std::invalid_argument("decompose_root_set: inner product " + rat_str(ip) +
                                            " between distinct roots (coset condition violated)");
            } else if (ip != 0) {
                throw std::invalid_argument("decompose_root_set: non-root inner product " + rat_str(ip));
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        if (adj[i].size() > 2)
            throw std::invalid_argument("decompose_root_set: negative-norm relation (vertex of degree > 2)");

    RootDecomposition out;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // collect the connected component
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        bool is_cycle = std::all_of(comp.begin(), comp.end(), [&](std::size_t v) { return adj[v].size() == 2; });
        if (!is_cycle) {
            if (comp.size() > static_cast<std::size_t>(p))
                throw std::invalid_argument("decompose_root_set: negative-norm relation (path longer than p)");
            for (auto v : comp) out.leftover.push_back(x[v]);
            continue;
        }
        if (comp.size() != static_cast<std::size_t>(p))
            throw std::invalid_argument("decompose_root_set: not an A_{p-1} configuration (cycle of length " +
                                        std::to_string(comp.size()) + ")");
        // walk the cycle from the lex-smallest vertex toward its smaller neighbour
        std::size_t v0 = comp[0];
        for (auto v : comp)
            if (lex_less(x[v], x[v0])) v0 = v;
        std::size_t n1 = adj[v0][0], n2 = adj[v0][1];
        std::size_t next = lex_less(x[n1], x[n2]) ? n1 : n2;
        std::vector<std::size_t> order{v0, next};
        while (order.size() < comp.size()) {
            std::size_t cur = order.back(), prev = order[order.size() - 2];
            std::size_t nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            order.push_back(nxt);
        }
        RootComponent rc;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) rc.base.push_back(x[order[i]]);
        rc.negated_highest = x[order.back()];
        out.components.push_back(std::move(rc));
    }
    return out;
}

RatVec weight_of_base(const std::vector<RatVec>& base, std::size_t m, const Rat& inner_scale) {
    if (m < 1 || m > base.size()) throw std::invalid_argument("weight index out of range");
    std::size_t r = base.size();
    // lambda = sum_j c_j alpha_j with sum_j c_j (alpha_j | alpha_l) = delta_{ml}
    RatMat gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gram(i, j) = inner_scale * dot(base[i], base[j]);
    RatVec rhs(r, Rat(0));
    rhs[m - 1] = 1;
    auto c = solve_left(gram, rhs);
    if (!c) throw std::invalid_argument("degenerate base");
    RatVec w(base[0].size(), Rat(0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t a = 0; a < w.size(); ++a) w[a] += (*c)[j] * base[j][a];
    return w;
}

}  // namespace orbilat

#include "orbilat/quadspace.hpp"

namespace orbilat {

namespace {

long mod_p(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// Legendre symbol for odd prime p
int legendre(long a, long p) {
    a = mod_p(a, p);
    if (a == 0) return 0;
    long r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

long QuadraticSpaceFp::q_of(const std::vector<long>& coords) const {
    // (p/2) * |sum a_i g_i|^2 reduced mod p, computed exactly in Q first
    Rat norm = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (coords[j] == 0) continue;
            norm += Rat(coords[i]) * Rat(coords[j]) * gen_gram(i, j);
        }
    }
    Rat s = norm * Rat(p) / 2;
    if (!is_integer(s)) throw std::invalid_argument("not a p-elementary quadratic space (q not defined)");
    Int v = s.get_num() % p;
    long out = static_cast<long>(v.get_si());
    return mod_p(out, p);
}

long QuadraticSpaceFp::b_of(const std::vector<long>& x, const std::vector<long>& y) const {
    std::vector<long> sum(dim);
    for (std::size_t i = 0; i < dim; ++i) sum[i] = x[i] + y[i];
    return mod_p(q_of(sum) - q_of(x) - q_of(y), p);
}

QuadraticSpaceFp discriminant_form(const Lattice& l, long p) {
    DiscriminantGroup d = discriminant_group(l);
    if (!d.is_elementary(p)) throw std::invalid_argument("not a p-elementary quadratic space (discriminant group)");
    QuadraticSpaceFp out;
    out.p = p;
    out.dim = d.generators.size();
    out.generators = d.generators;
    out.gen_gram = RatMat(out.dim, out.dim);
    for (std::size_t i = 0; i < out.dim; ++i)
        for (std::size_t j = 0; j < out.dim; ++j)
            out.gen_gram(i, j) = l.inner_scale() * dot(d.generators[i], d.generators[j]);
    return out;
}

namespace {

bool next_tuple(std::vector<long>& v, long p) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < p) return true;
        v[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<std::vector<long>> singular_vectors(const QuadraticSpaceFp& q) {
    std::vector<std::vector<long>> out;
    if (q.dim == 0) return out;
    double total = 1;
    for (std::size_t i = 0; i < q.dim; ++i) total *= q.p;
    if (total > 2e6) throw std::invalid_argument("quadratic space too large to enumerate");
    std::vector<long> v(q.dim, 0);
    while (next_tuple(v, q.p)) {
        if (q.q_of(v) == 0) out.push_back(v);
    }
    return out;
}

QuadraticType quadratic_type(const QuadraticSpaceFp& q) {
    if (q.dim == 0) return QuadraticType::Degenerate;
    long p = q.p;
    // polar form matrix and its determinant/rank mod p
    RatMat b(q.dim, q.dim);
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j) {
            Rat e = q.gen_gram(i, j) * Rat(p);
            if (!is_integer(e)) throw std::invalid_argument("polar form not integral");
            Int v = e.get_num() % p;
            long vv = static_cast<long>(v.get_si());
            b(i, j) = Rat((vv % p + p) % p);
        }
    // rank and determinant over F_p via fraction-free elimination mod p
    std::vector<std::vector<long>> m(q.dim, std::vector<long>(q.dim));
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j) m[i][j] = static_cast<long>(b(i, j).get_num().get_si());
    long det = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < q.dim; ++c) {
        std::size_t piv = rank;
        while (piv < q.dim && m[piv][c] == 0) ++piv;
        if (piv == q.dim) continue;
        if (piv != rank) {
            std::swap(m[piv], m[rank]);
            det = p - det;
        }
        det = det * m[rank][c] % p;
        // normalise pivot row
        long inv = 1;
        {
            long bpow = m[rank][c] % p, e = p - 2, r = 1;
            while (e) {
                if (e & 1) r = r * bpow % p;
                bpow = bpow * bpow % p;
                e >>= 1;
            }
            inv = r;
        }
        for (std::size_t j = 0; j < q.dim; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (std::size_t i = 0; i < q.dim; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            long f = m[i][c];
            for (std::size_t j = 0; j < q.dim; ++j) m[i][j] = mod_p(m[i][j] - f * m[rank][j], p);
        }
        ++rank;
    }
    if (rank < q.dim) return QuadraticType::Degenerate;

    if (q.dim % 2 == 0) {
        std::size_t n = q.dim / 2;
        long sign_factor = (n % 2 == 0) ? 1 : -1;  // (-1)^n
        int chi = legendre(mod_p(sign_factor * det, p), p);
        QuadraticType by_disc = (chi == 1) ? QuadraticType::Plus : QuadraticType::Minus;
        // cross-check against singular counts when small enough
        double total = 1;
        for (std::size_t i = 0; i < q.dim; ++i) total *= p;
        if (total <= 2e6) {
            long zeros = static_cast<long>(singular_vectors(q).size());
            // q^{2n-1} + q^n - q^{n-1} - 1 nonzero singular vectors for (+),
            // q^{2n-1} - q^n + q^{n-1} - 1 for (-)
            auto powl = [&](long b, std::size_t e) {
                long r = 1;
                while (e--) r *= b;
                return r;
            };
            long plus_count = powl(p, 2 * n - 1) + powl(p, n) - powl(p, n - 1) - 1;
            long minus_count = powl(p, 2 * n - 1) - powl(p, n) + powl(p, n - 1) - 1;
            QuadraticType by_count = QuadraticType::Degenerate;
            if (zeros == plus_count) by_count = QuadraticType::Plus;
            if (zeros == minus_count) by_count = QuadraticType::Minus;
            if (by_count != by_disc) throw std::logic_error("quadratic type classification mismatch");
        }
        return by_disc;
    }
    // odd dimension: label by the square class of the discriminant
    return legendre(det, p) == 1 ? QuadraticType::Plus : QuadraticType::Minus;
}

const char* quadratic_type_name(QuadraticType t) {
    switch (t) {
        case QuadraticType::Plus: return "+";
        case QuadraticType::Minus: return "-";
        default: return "degenerate";
    }
}

}  // namespace orbilat

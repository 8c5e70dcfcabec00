#include "orbilat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace orbilat {

namespace {

using Poly = std::vector<Rat>;  // coefficient i of x^i, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient of exact division num / den
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size()) {
        Rat f = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        trim(num);
        if (num.empty()) break;
    }
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly cyclotomic_poly(long k) {
    // Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d
    Poly num(k + 1, Rat(0));
    num[0] = -1;
    num[k] = 1;
    for (long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        num = poly_div_exact(num, cyclotomic_poly(d));
    }
    return num;
}

std::map<long, std::unique_ptr<CycloField>>& registry() {
    static std::map<long, std::unique_ptr<CycloField>> reg;
    return reg;
}
std::mutex registry_mutex;

}  // namespace

const CycloField& CycloField::get(long k) {
    if (k < 2) throw std::invalid_argument("conductor must be >= 2");
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = registry();
    auto it = reg.find(k);
    if (it != reg.end()) return *it->second;
    auto f = std::make_unique<CycloField>();
    f->k = k;
    f->phi = cyclotomic_poly(k);
    std::size_t deg = f->phi.size() - 1;
    // x^(deg + i) mod Phi_k for i = 0..deg-2: products of two reduced
    // elements have degree at most 2*deg - 2
    if (deg >= 2) {
        Poly cur(deg, Rat(0));  // x^deg = -sum_j phi_j x^j  (Phi_k monic)
        for (std::size_t j = 0; j < deg; ++j) cur[j] = -f->phi[j];
        for (std::size_t i = 0; i + 1 < deg; ++i) {
            f->power_table.push_back(cur);
            Poly next(deg, Rat(0));
            Rat top = cur[deg - 1];
            for (std::size_t j = deg - 1; j > 0; --j) next[j] = cur[j - 1];
            if (top != 0)
                for (std::size_t j = 0; j < deg; ++j) next[j] -= top * f->phi[j];
            cur = next;
        }
    } else if (deg == 1) {
        Poly red(1, Rat(0));
        red[0] = -f->phi[0];  // x = -phi_0, e.g. zeta_2 = -1
        f->power_table.push_back(red);
    }
    const CycloField& ref = *f;
    reg.emplace(k, std::move(f));
    return ref;
}

CycloElem::CycloElem(const CycloField& f, std::vector<Rat> coeffs) : field_(&f), c_(std::move(coeffs)) {
    if (c_.size() != f.degree()) throw std::invalid_argument("coefficient vector length mismatch");
}

CycloElem CycloElem::zero(long k) {
    const auto& f = CycloField::get(k);
    return CycloElem(f, std::vector<Rat>(f.degree(), Rat(0)));
}

CycloElem CycloElem::one(long k) { return from_rat(k, Rat(1)); }

CycloElem CycloElem::from_rat(long k, const Rat& r) {
    const auto& f = CycloField::get(k);
    std::vector<Rat> c(f.degree(), Rat(0));
    c[0] = r;
    return CycloElem(f, std::move(c));
}

CycloElem CycloElem::zeta(long k, long e) {
    const auto& f = CycloField::get(k);
    long deg = static_cast<long>(f.degree());
    e %= k;
    if (e < 0) e += k;
    if (e < deg) {
        std::vector<Rat> c(deg, Rat(0));
        c[e] = 1;
        return CycloElem(f, std::move(c));
    }
    // reduce x^e mod Phi_k by long division
    Poly p(e + 1, Rat(0));
    p[e] = 1;
    while (p.size() >= f.phi.size()) {
        Rat top = p.back();
        std::size_t shift = p.size() - f.phi.size();
        if (top != 0)
            for (std::size_t i = 0; i < f.phi.size(); ++i) p[shift + i] -= top * f.phi[i];
        trim(p);
        if (p.empty()) break;
    }
    p.resize(deg, Rat(0));
    return CycloElem(f, std::move(p));
}

bool CycloElem::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

void CycloElem::check_same(const CycloElem& o) const {
    if (field_ != o.field_) throw std::invalid_argument("conductor mismatch");
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    check_same(o);
    auto c = c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CycloElem(*field_, std::move(c));
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    check_same(o);
    auto c = c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return CycloElem(*field_, std::move(c));
}

CycloElem CycloElem::operator-() const {
    auto c = c_;
    for (auto& v : c) v = -v;
    return CycloElem(*field_, std::move(c));
}

CycloElem CycloElem::operator*(const Rat& r) const {
    auto c = c_;
    for (auto& v : c) v *= r;
    return CycloElem(*field_, std::move(c));
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    check_same(o);
    std::size_t deg = field_->degree();
    std::vector<Rat> prod(2 * deg - 1, Rat(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> out(prod.begin(), prod.begin() + deg);
    for (std::size_t i = deg; i < prod.size(); ++i) {
        if (prod[i] == 0) continue;
        const auto& red = field_->power_table[i - deg];
        for (std::size_t j = 0; j < deg; ++j) out[j] += prod[i] * red[j];
    }
    return CycloElem(*field_, std::move(out));
}

bool CycloElem::operator==(const CycloElem& o) const {
    check_same(o);
    return c_ == o.c_;
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // extended Euclid in Q[x]: u * a + v * Phi_k = gcd = const
    Poly r0 = field_->phi;
    Poly r1(c_.begin(), c_.end());
    trim(r1);
    Poly s0;             // coefficient of a in r0 (starts 0)
    Poly s1 = {Rat(1)};  // coefficient of a in r1
    while (!r1.empty()) {
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        Poly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat f = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += f;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            trim(rem);
        }
        // s2 = s0 - q * s1
        Poly s2 = s0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) {
                if (i + j >= s2.size()) s2.resize(i + j + 1, Rat(0));
                s2[i + j] -= q[i] * s1[j];
            }
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("cyclotomic gcd not constant");
    Rat inv_lead = 1 / r0[0];
    std::vector<Rat> out(field_->degree(), Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] * inv_lead;
    return CycloElem(*field_, std::move(out));
}

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b) { return a * b; }
CycloElem cyclo_inv(const CycloElem& a) { return a.inverse(); }

}  // namespace orbilat

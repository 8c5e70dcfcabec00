#pragma once

#include <memory>
#include <vector>

#include "orbilat/rat.hpp"

namespace orbilat {

// Q(zeta_k), elements represented modulo the k-th cyclotomic polynomial.
struct CycloField {
    long k = 0;
    std::vector<Rat> phi;                       // monic Phi_k, degree phi(k)
    std::vector<std::vector<Rat>> power_table;  // x^(deg+i) mod Phi_k, i = 0..deg-2

    std::size_t degree() const { return phi.size() - 1; }

    static const CycloField& get(long k);
};

class CycloElem {
  public:
    CycloElem() : field_(nullptr) {}
    CycloElem(const CycloField& f, std::vector<Rat> coeffs);

    static CycloElem zero(long k);
    static CycloElem one(long k);
    static CycloElem from_rat(long k, const Rat& r);
    // zeta_k^e
    static CycloElem zeta(long k, long e = 1);

    long conductor() const { return field_ ? field_->k : 0; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator*(const Rat& r) const;
    bool operator==(const CycloElem& o) const;
    bool operator!=(const CycloElem& o) const { return !(*this == o); }

    CycloElem inverse() const;  // throws on zero

  private:
    const CycloField* field_;
    std::vector<Rat> c_;  // length = degree of Phi_k

    void check_same(const CycloElem& o) const;
};

CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_inv(const CycloElem& a);

}  // namespace orbilat

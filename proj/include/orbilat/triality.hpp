#pragma once

#include "orbilat/cyclotomic.hpp"

namespace orbilat {

// Exact k x k matrices over Q(zeta_k): F = diag(w, w^2, ..., w^{k-1}, 1),
// the cyclic shift G, and Z0 = sqrt(k) * Z with entries w^{ab}. The 1/sqrt(k)
// scalar of Z is never materialised; conjugation by Z equals conjugation by
// Z0, and statements about powers of Z carry explicit k-factors.
using CycloMat = std::vector<std::vector<CycloElem>>;

struct TrialityMatrices {
    long k;
    CycloMat f;
    CycloMat g;
    CycloMat z0;
};

TrialityMatrices build_fgz(long k);

CycloMat cyclo_mat_mul(const CycloMat& a, const CycloMat& b);
bool cyclo_mat_eq(const CycloMat& a, const CycloMat& b);
CycloMat cyclo_mat_scale(const CycloMat& a, const Rat& r);
CycloMat cyclo_identity(long k, std::size_t n);

// Z^{-1} G Z = F,  G^{-1} F G = w^{-1} F,  Z^{-2} G Z^2 = G^{-1}
bool verify_sfg(long k);

// conjugation operators on the traceless matrices: zeta^{-1} ghat zeta = phi,
// zeta^{-1} phi zeta = ghat^{-1}, [phi, ghat] = id, and both have order k
bool verify_conjugation_relations(long k);

// F^{-1} E_ij F = w^{j-i} E_ij for i != j, diagonal fixed
bool verify_weight_grading(long k);

}  // namespace orbilat

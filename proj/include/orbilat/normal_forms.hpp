#pragma once

#include "orbilat/matrix.hpp"

namespace orbilat {

struct HnfResult {
    IntMat h;  // row Hermite normal form, zero rows trimmed to the bottom
    IntMat u;  // unimodular, u * m = h
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot). Row space is preserved.
HnfResult hnf(const IntMat& m);

// HNF with zero rows dropped (basis of the row space as a Z-module).
IntMat hnf_basis(const IntMat& m);

struct SnfResult {
    IntMat s;  // diagonal, d_1 | d_2 | ... | d_r >= 1
    IntMat u;  // unimodular
    IntMat v;  // unimodular, u * m * v = s
};

SnfResult snf(const IntMat& m);

Int det_int(const IntMat& m);

}  // namespace orbilat

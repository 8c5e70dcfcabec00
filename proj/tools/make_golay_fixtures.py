#!/usr/bin/env python3
"""Generate the Golay-code fixtures under data/.

Produces:
  golay.json          -- 12x24 generator matrix of the extended quadratic-residue
                         code of length 24 (coordinates 0..22 cyclic, 23 = parity)
  golay_aut_gens.json -- permutations generating the full automorphism group of
                         that code: the cyclic shift y->y+1, the multiplier
                         y->2y, the inversion y->-1/y, and one further
                         automorphism obtained by extending a 5-point map
                         through the octad system (Steiner S(5,8,24)).

Every output is re-verified from scratch by the C++ test suite; this script
only documents how the frozen data was produced.
"""

import itertools
import json
import os

Q = 23
N = 24
INF = 23  # index of the point at infinity / parity coordinate


def poly_divmod_gf2(num, den):
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        if num[shift + len(den) - 1]:
            out[shift] = 1
            for i, d in enumerate(den):
                num[shift + i] ^= d
    return out, num


def qr_generator_polynomial():
    # x^23 - 1 = (x + 1) * g(x) * g~(x) over GF(2); g has the quadratic
    # residues mod 23 as exponent set of its root support.
    residues = sorted({pow(i, 2, Q) for i in range(1, Q)})
    # Build g(x) = prod over the 2-cyclotomic coset of residues; over GF(2)
    # just factor x^23-1 by trial products of irreducible degree-11 factors.
    # Simpler: known factor with residue root set:
    #   g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
    g = [0] * 12
    for e in (0, 2, 4, 5, 6, 10, 11):
        g[e] = 1
    xn1 = [1] + [0] * 21 + [0, 1]  # x^23 + 1 over GF(2)
    xn1[0] = 1
    quot, rem = poly_divmod_gf2(xn1, g)
    assert not any(rem), "g must divide x^23 - 1"
    return g, residues


def build_golay():
    g, _ = qr_generator_polynomial()
    rows = []
    for sh in range(12):
        row = [0] * N
        for i, c in enumerate(g):
            row[(i + sh) % Q] ^= c
        row[INF] = sum(row[:Q]) % 2
        rows.append(row)
    return rows


def row_space(rows):
    # Gaussian elimination over GF(2), bitmask representation.
    basis = []
    for r in rows:
        v = 0
        for i, b in enumerate(r):
            if b:
                v |= 1 << i
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    basis.sort(reverse=True)
    return basis


def codewords(basis):
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return words


def weight(w):
    return bin(w).count("1")


def apply_perm(word, perm):
    out = 0
    for i in range(N):
        if word >> i & 1:
            out |= 1 << perm[i]
    return out


def preserves(code_set, basis, perm):
    return all(apply_perm(b, perm) in code_set for b in basis)


def mobius(a, b, c, d):
    # y -> (a y + b)/(c y + d) on GF(23) + {inf}
    perm = [0] * N
    for y in range(Q):
        den = (c * y + d) % Q
        if den == 0:
            perm[y] = INF
        else:
            perm[y] = (a * y + b) * pow(den, Q - 2, Q) % Q
    perm[INF] = INF if c == 0 else a * pow(c, Q - 2, Q) % Q
    return perm


def octad_map(words):
    octads = [w for w in words if weight(w) == 8]
    assert len(octads) == 759
    by5 = {}
    for o in octads:
        pts = [i for i in range(N) if o >> i & 1]
        for five in itertools.combinations(pts, 5):
            key = frozenset(five)
            assert key not in by5 or by5[key] == o
            by5[key] = o
    return octads, by5


def extend_partial(code_set, octads, by5, anchor):
    """Extend a 5-point partial map to a full automorphism via octad
    propagation with backtracking."""
    bits = lambda w: [i for i in range(N) if w >> i & 1]

    def propagate(fmap):
        cand = {i: set(range(N)) - set(fmap.values())
                for i in range(N) if i not in fmap}
        changed = True
        while changed:
            changed = False
            for o in octads:
                pts = bits(o)
                mapped = [p for p in pts if p in fmap]
                if len(mapped) < 5:
                    continue
                key = frozenset(fmap[p] for p in mapped[:5])
                img = by5.get(key)
                if img is None:
                    return None, None
                ipts = set(bits(img))
                if not all(fmap[p] in ipts for p in mapped):
                    return None, None
                free_img = ipts - {fmap[p] for p in mapped}
                for p in pts:
                    if p in fmap:
                        continue
                    newset = cand[p] & free_img
                    if not newset:
                        return None, None
                    if newset != cand[p]:
                        cand[p] = newset
                        changed = True
        return cand, fmap

    def dfs(fmap):
        if len(fmap) == N:
            perm = [fmap[i] for i in range(N)]
            basis = row_space([[1 if w >> i & 1 else 0 for i in range(N)]
                               for w in code_set_basis])
            return perm
        cand, fmap2 = propagate(dict(fmap))
        if cand is None:
            return None
        if not cand:
            perm = [fmap2[i] for i in range(N)]
            return perm
        # pick the most constrained point
        p = min(cand, key=lambda x: len(cand[x]))
        for img in sorted(cand[p]):
            fmap2[p] = img
            res = dfs(fmap2)
            if res is not None:
                return res
            del fmap2[p]
        return None

    global code_set_basis
    code_set_basis = []
    res = dfs(dict(anchor))
    return res


def main():
    rows = build_golay()
    basis = row_space(rows)
    assert len(basis) == 12
    words = codewords(basis)
    code_set = set(words)
    dist = {}
    for w in words:
        dist[weight(w)] = dist.get(weight(w), 0) + 1
    assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, dist

    s = mobius(1, 1, 0, 1)        # y -> y + 1         (cycle type 1 23)
    m = mobius(2, 0, 0, 1)        # y -> 2y            (cycle type 1^2 11^2)
    v = mobius(0, -1, 1, 0)       # y -> -1/y          (involution)
    for p in (s, m, v):
        assert sorted(p) == list(range(N))
        assert preserves(code_set, basis, p), "PSL(2,23) move must preserve code"

    octads, by5 = octad_map(words)
    # A 5-point map that no PSL(2,23) element realises (it fixes three
    # points but is not the identity), extended through the octad system.
    anchor = {INF: INF, 0: 0, 1: 1, 2: 3, 3: 2}
    extra = extend_partial(code_set, octads, by5, anchor)
    assert extra is not None, "octad extension failed"
    assert sorted(extra) == list(range(N))
    assert preserves(code_set, basis, extra), "extra generator must preserve code"

    out = os.path.join(os.path.dirname(__file__), os.pardir, "data")
    gen_rows = []
    for b in basis:
        gen_rows.append([1 if b >> i & 1 else 0 for i in range(N)])
    with open(os.path.join(out, "golay.json"), "w") as f:
        json.dump({"length": N, "generators": gen_rows}, f)
        f.write("\n")
    with open(os.path.join(out, "golay_aut_gens.json"), "w") as f:
        json.dump({"generators": [s, m, v, extra]}, f)
        f.write("\n")
    print("fixtures written:", dist)
    print("extra generator:", extra)


if __name__ == "__main__":
    main()

#pragma once

#include <cstdint>

#include "orbilat/golay.hpp"
#include "orbilat/isometry.hpp"
#include "orbilat/quadspace.hpp"

namespace orbilat {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// The Leech lattice: integer coordinates, inner product (x.y)/8, built from
// the Golay code. Even, unimodular, rootless (verified on construction).
const Lattice& build_leech();

// Cycle types realising the coinvariant classes used here, as permutations
// of the 24 Golay coordinates.
struct CycleType {
    std::map<long, long> cycles;  // length -> count
};

CycleType cycle_type_for_tag(const std::string& tag);  // 3B 5B 7B 11A 23A
CycleType cycle_type_of(const std::vector<int>& perm);

// Seeded random-product search through the fixture generators for a Golay
// automorphism of the given cycle type. Deterministic per seed; throws after
// the step budget.
std::vector<int> find_golay_automorphism(const CycleType& target, std::uint64_t seed = kDefaultSeed,
                                         long budget = 1000000);

struct CoinvariantClass {
    std::string tag;
    std::vector<int> perm;
    Lattice fixed;            // Lambda^h
    Lattice coinvariant;      // Lambda_h
    LatticeIsometry action;   // h restricted to Lambda_h
};

// Builds Lambda_{pX} for tag in {3B, 5B, 7B, 11A, 23A} and checks the
// class invariants (rank, discriminant group, rootlessness, and the
// 11A/23A extras). Throws naming the failed invariant.
CoinvariantClass coinvariant_class(const std::string& tag, std::uint64_t seed = kDefaultSeed);

// Glues Lambda_h perp Lambda^h back to an even unimodular rank-24 rootless
// lattice along a maximal totally singular subgroup of the discriminant.
Lattice reconstruct_unimodular(const std::string& tag, std::uint64_t seed = kDefaultSeed);

// invariants of the Leech coinvariants used by the decision procedure
struct LeechFingerprint {
    long rank;
    std::vector<Int> invariant_factors;
    QuadraticType qtype;
    bool one_minus_g_dual_is_l;  // (1-g)L* = L
    std::vector<std::pair<long, Int>> theta6;
};

const LeechFingerprint& leech_fingerprint(long p);  // p in {11, 23}

}  // namespace orbilat

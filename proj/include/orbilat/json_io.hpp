#pragma once

#include <string>

#include "json.hpp"
#include "orbilat/codes.hpp"
#include "orbilat/isometry.hpp"
#include "orbilat/orbifold.hpp"

namespace orbilat {

// Lattice JSON: { "ambient_dim": n, "inner_scale": "p/q",
//                 "basis": [["a/b", ...], ...] }
nlohmann::json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const nlohmann::json& j);

// Code JSON: { "p": p, "length": t, "generators": [[ints mod p]] }
nlohmann::json code_to_json(const CodeZp& c);
CodeZp code_from_json(const nlohmann::json& j);

// Isometry JSON: { "lattice": <lattice>, "matrix": [[ints]] }
nlohmann::json isometry_to_json(const LatticeIsometry& g);
LatticeIsometry isometry_from_json(const nlohmann::json& j);

// Verdict JSON: { "has_extra": bool, "branch": str, "witness": {...},
//                 "fingerprints": {...} }
nlohmann::json verdict_to_json(const ExtraAutVerdict& v, const Lattice& l);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace orbilat

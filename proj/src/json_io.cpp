#include "orbilat/json_io.hpp"

#include <fstream>

#include "orbilat/enumerate.hpp"

namespace orbilat {

nlohmann::json lattice_to_json(const Lattice& l) {
    nlohmann::json j;
    j["ambient_dim"] = l.ambient_dim();
    j["inner_scale"] = rat_str(l.inner_scale());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < l.ambient_dim(); ++c) row.push_back(rat_str(l.basis()(i, c)));
        rows.push_back(row);
    }
    j["basis"] = rows;
    return j;
}

Lattice lattice_from_json(const nlohmann::json& j) {
    std::size_t n = j.at("ambient_dim").get<std::size_t>();
    Rat scale = j.contains("inner_scale") ? parse_rat(j.at("inner_scale").get<std::string>()) : Rat(1);
    const auto& rows = j.at("basis");
    RatMat basis(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("lattice JSON: row length mismatch");
        for (std::size_t c = 0; c < n; ++c) basis(i, c) = parse_rat(rows[i][c].get<std::string>());
    }
    return Lattice(n, basis, scale);
}

nlohmann::json code_to_json(const CodeZp& c) {
    nlohmann::json j;
    j["p"] = c.p;
    j["length"] = c.t;
    j["generators"] = c.gen;
    return j;
}

CodeZp code_from_json(const nlohmann::json& j) {
    long p = j.at("p").get<long>();
    long t = j.at("length").get<long>();
    std::vector<std::vector<long>> rows = j.at("generators").get<std::vector<std::vector<long>>>();
    return make_code(p, t, rows);
}

nlohmann::json isometry_to_json(const LatticeIsometry& g) {
    nlohmann::json j;
    j["lattice"] = lattice_to_json(g.lattice());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < g.matrix().rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < g.matrix().cols(); ++c) row.push_back(g.matrix()(i, c).get_str());
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

LatticeIsometry isometry_from_json(const nlohmann::json& j) {
    Lattice l = lattice_from_json(j.at("lattice"));
    const auto& rows = j.at("matrix");
    IntMat m(rows.size(), rows.size() ? rows[0].size() : 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            if (rows[i][c].is_string())
                m(i, c) = Int(rows[i][c].get<std::string>());
            else
                m(i, c) = Int(rows[i][c].get<long>());
        }
    return LatticeIsometry(l, m);
}

nlohmann::json verdict_to_json(const ExtraAutVerdict& v, const Lattice& l) {
    nlohmann::json j;
    j["has_extra"] = v.has_extra;
    j["branch"] = v.branch;
    nlohmann::json witness;
    if (v.witness_coset) {
        nlohmann::json coset = nlohmann::json::array();
        for (const auto& e : *v.witness_coset) coset.push_back(rat_str(e));
        witness["coset"] = coset;
    }
    if (v.witness_chab) {
        witness["code"] = code_to_json(v.witness_chab->code);
        witness["e"] = v.witness_chab->e;
        nlohmann::json bases = nlohmann::json::array();
        for (const auto& base : v.witness_chab->bases) {
            nlohmann::json comp = nlohmann::json::array();
            for (const auto& root : base) {
                nlohmann::json rv = nlohmann::json::array();
                for (const auto& e : root) rv.push_back(rat_str(e));
                comp.push_back(rv);
            }
            bases.push_back(comp);
        }
        witness["bases"] = bases;
        witness["fingerprint_match"] = v.witness_chab->fingerprint_match;
    }
    j["witness"] = witness;
    j["detail"] = v.detail;
    nlohmann::json fp;
    fp["rank"] = l.rank();
    fp["det"] = rat_str(l.det_gram());
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : discriminant_group(l).invariant_factors) factors.push_back(f.get_str());
    fp["discriminant"] = factors;
    j["fingerprints"] = fp;
    return j;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

}  // namespace orbilat

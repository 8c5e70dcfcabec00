#include "orbilat/golay.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace orbilat {

std::string data_dir() {
    if (const char* env = std::getenv("ORBILAT_DATA")) return env;
    return ORBILAT_DATA_DIR;
}

namespace {

nlohmann::json load_json(const std::string& name) {
    std::string path = data_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

int popcount24(std::uint32_t w) { return __builtin_popcount(w & 0xFFFFFF); }

}  // namespace

GolayCode::GolayCode() {
    nlohmann::json j = load_json("golay.json");
    if (j.at("length").get<int>() != 24) throw std::runtime_error("golay fixture corrupted: length");
    for (const auto& row : j.at("generators")) {
        std::vector<int> r = row.get<std::vector<int>>();
        if (r.size() != 24) throw std::runtime_error("golay fixture corrupted: row length");
        rows_.push_back(r);
    }
    if (rows_.size() != 12) throw std::runtime_error("golay fixture corrupted: 12 generators expected");
    // reduced bitmask basis
    for (const auto& r : rows_) {
        std::uint32_t v = 0;
        for (int i = 0; i < 24; ++i)
            if (r[i]) v |= 1u << i;
        for (auto b : basis_) v = std::min(v, v ^ b);
        if (v) basis_.push_back(v);
    }
    if (basis_.size() != 12) throw std::runtime_error("golay fixture corrupted: rank != 12");
    // self-orthogonality (with dim 12 this gives self-duality)
    for (auto a : basis_)
        for (auto b : basis_)
            if (popcount24(a & b) % 2 != 0) throw std::runtime_error("golay fixture corrupted: not self-orthogonal");
    // doubly even generators
    for (auto a : basis_)
        if (popcount24(a) % 4 != 0) throw std::runtime_error("golay fixture corrupted: not doubly even");
    // weight distribution by full enumeration
    std::map<long, long> dist = weight_distribution();
    std::map<long, long> expect{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (dist != expect) throw std::runtime_error("golay fixture corrupted: weight distribution");
}

const GolayCode& GolayCode::instance() {
    static GolayCode code;
    return code;
}

bool GolayCode::contains(std::uint32_t word) const {
    for (auto b : basis_) word = std::min(word, word ^ b);
    return word == 0;
}

std::map<long, long> GolayCode::weight_distribution() const {
    std::map<long, long> dist;
    std::vector<std::uint32_t> words{0};
    words.reserve(4096);
    for (auto b : basis_) {
        std::size_t n = words.size();
        for (std::size_t i = 0; i < n; ++i) words.push_back(words[i] ^ b);
    }
    for (auto w : words) ++dist[popcount24(w)];
    return dist;
}

bool GolayCode::preserved_by(const std::vector<int>& perm) const {
    for (auto b : basis_) {
        std::uint32_t img = 0;
        for (int i = 0; i < 24; ++i)
            if (b >> i & 1) img |= 1u << perm[static_cast<std::size_t>(i)];
        if (!contains(img)) return false;
    }
    return true;
}

const std::vector<std::vector<int>>& golay_aut_generators() {
    static std::vector<std::vector<int>> gens = [] {
        nlohmann::json j = load_json("golay_aut_gens.json");
        std::vector<std::vector<int>> out;
        for (const auto& g : j.at("generators")) {
            std::vector<int> perm = g.get<std::vector<int>>();
            if (perm.size() != 24) throw std::runtime_error("automorphism fixture corrupted: length");
            std::vector<bool> seen(24, false);
            for (int v : perm) {
                if (v < 0 || v >= 24 || seen[static_cast<std::size_t>(v)])
                    throw std::runtime_error("automorphism fixture corrupted: not a permutation");
                seen[static_cast<std::size_t>(v)] = true;
            }
            if (!GolayCode::instance().preserved_by(perm))
                throw std::runtime_error("automorphism fixture corrupted: does not preserve the code");
            out.push_back(perm);
        }
        if (out.empty()) throw std::runtime_error("automorphism fixture corrupted: no generators");
        return out;
    }();
    return gens;
}

}  // namespace orbilat

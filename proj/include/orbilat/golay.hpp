#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbilat {

// The [24,12,8] binary Golay code, loaded from the fixture generator matrix
// and fully re-verified (dimension, self-duality, weight distribution).
class GolayCode {
  public:
    static const GolayCode& instance();

    const std::vector<std::uint32_t>& basis() const { return basis_; }
    const std::vector<std::vector<int>>& generator_rows() const { return rows_; }

    bool contains(std::uint32_t word) const;
    std::map<long, long> weight_distribution() const;
    bool preserved_by(const std::vector<int>& perm) const;

  private:
    GolayCode();
    std::vector<std::vector<int>> rows_;
    std::vector<std::uint32_t> basis_;  // reduced bitmask basis
};

// fixture automorphism generators (each verified to preserve the code)
const std::vector<std::vector<int>>& golay_aut_generators();

// path of the data directory (ORBILAT_DATA env var, else compiled-in default)
std::string data_dir();

}  // namespace orbilat

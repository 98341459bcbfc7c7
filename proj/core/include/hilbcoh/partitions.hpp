#pragma once

#include "hilbcoh/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbcoh {

// A conjugacy class of S_n: cycle lengths in weakly decreasing order.
// n = 0 (the empty partition) is allowed and labels the trivial group.
class CycleType {
  public:
    CycleType() = default;
    explicit CycleType(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }

    // sign of any permutation with this cycle type: (-1)^{n - length}
    int sgn() const { return (n() - length()) % 2 == 0 ? 1 : -1; }
    // number of permutations in the class: n! / prod(k_i * m_i!)
    Int class_size() const;
    std::map<int, int> multiplicities() const;

    bool operator<(const CycleType& o) const { return parts_ < o.parts_; }
    bool operator==(const CycleType& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

// all partitions of n in a fixed deterministic order (lexicographically
// decreasing on the part vectors)
std::vector<CycleType> partitions_of(int n);

Int factorial(int n);
Int binomial(int n, int k);

} // namespace hilbcoh

#include "hilbcoh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hilbcoh {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int k : parts_)
        if (k < 1) throw std::invalid_argument("CycleType: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int CycleType::n() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> CycleType::multiplicities() const {
    std::map<int, int> m;
    for (int k : parts_) ++m[k];
    return m;
}

Int CycleType::class_size() const {
    Int denom = 1;
    for (const auto& [k, m] : multiplicities()) {
        for (int i = 0; i < m; ++i) denom *= k;
        denom *= factorial(m);
    }
    return factorial(n()) / denom;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::vector<CycleType> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
    std::vector<CycleType> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

} // namespace hilbcoh

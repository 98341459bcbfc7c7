#pragma once

#include "hilbcoh/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace hilbcoh {

// Dense matrix over Q. Sizes in this library stay below ~30x30, so plain
// Gaussian elimination with exact division is all we need.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols);
    RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMat identity(int n);
    static RatMat diagonal(const std::vector<Rat>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator*(const Rat& s) const;
    bool operator==(const RatMat& o) const;

    RatMat transpose() const;
    Rat det() const;
    // Throws std::domain_error on a singular matrix.
    RatMat inverse() const;
    bool is_identity() const;
    bool is_zero() const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Solves A x = b requiring the solution to exist and be unique
// (full column rank and consistent). Returns nullopt otherwise.
std::optional<std::vector<Rat>> solve_unique(const RatMat& A,
                                             const std::vector<Rat>& b);

} // namespace hilbcoh

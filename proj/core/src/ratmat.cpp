#include "hilbcoh/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbcoh {

RatMat::RatMat(int rows, int cols)
    : rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative size");
}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("RatMat: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::diagonal(const std::vector<Rat>& d) {
    RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows_; ++i) m.at(i, i) = d[i];
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: size mismatch in +");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMat: size mismatch in -");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("RatMat: size mismatch in *");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

RatMat RatMat::operator*(const Rat& s) const {
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

bool RatMat::operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat RatMat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: det of non-square");
    RatMat m = *this;
    Rat d(1);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int r = c; r < rows_; ++r)
            if (m.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        for (int r = c + 1; r < rows_; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) / m.at(c, c);
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return d;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: inverse of non-square");
    RatMat m = *this;
    RatMat inv = identity(rows_);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int r = c; r < rows_; ++r)
            if (m.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("RatMat: singular matrix");
        if (pivot != c)
            for (int j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Rat p = m.at(c, c);
        for (int j = 0; j < cols_; ++j) {
            m.at(c, j) /= p;
            inv.at(c, j) /= p;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            Rat f = m.at(r, c);
            for (int j = 0; j < cols_; ++j) {
                m.at(r, j) -= f * m.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

bool RatMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::string RatMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::optional<std::vector<Rat>> solve_unique(const RatMat& A,
                                             const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw std::invalid_argument("solve_unique: rhs size mismatch");
    const int m = A.rows(), n = A.cols();
    RatMat aug(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = b[i];
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < n && row < m; ++c) {
        int pivot = -1;
        for (int r = row; r < m; ++r)
            if (aug.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j <= n; ++j) std::swap(aug.at(pivot, j), aug.at(row, j));
        Rat p = aug.at(row, c);
        for (int j = 0; j <= n; ++j) aug.at(row, j) /= p;
        for (int r = 0; r < m; ++r) {
            if (r == row || aug.at(r, c) == 0) continue;
            Rat f = aug.at(r, c);
            for (int j = 0; j <= n; ++j) aug.at(r, j) -= f * aug.at(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }
    // consistency
    for (int r = row; r < m; ++r)
        if (aug.at(r, n) != 0) return std::nullopt;
    // uniqueness: every column must be a pivot column
    if (static_cast<int>(pivot_col.size()) != n) return std::nullopt;
    std::vector<Rat> x(n);
    for (int r = 0; r < n; ++r) x[pivot_col[r]] = aug.at(r, n);
    return x;
}

} // namespace hilbcoh

#include "hilbcoh/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbcoh {

SurfaceRing::SurfaceRing(std::vector<std::string> labels,
                         std::vector<std::vector<long long>> gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
    const size_t r = labels_.size();
    if (gram_.size() != r)
        throw std::invalid_argument("SurfaceRing: gram size != label count");
    for (size_t i = 0; i < r; ++i) {
        if (gram_[i].size() != r)
            throw std::invalid_argument("SurfaceRing: gram is not square");
        if (gram_[i][i] % 2 != 0)
            throw std::invalid_argument("SurfaceRing: gram diagonal must be even");
        for (size_t j = 0; j < r; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("SurfaceRing: gram is not symmetric");
    }
}

int SurfaceRing::complex_degree(int b) const {
    if (b == unit_index()) return 0;
    if (b == point_index()) return 2;
    if (b >= 1 && b <= rank()) return 1;
    throw std::invalid_argument("SurfaceRing: bad basis index");
}

std::string SurfaceRing::basis_label(int b) const {
    if (b == unit_index()) return "1";
    if (b == point_index()) return "p";
    return labels_[b - 1];
}

SurfaceRing::BasisProduct SurfaceRing::cup_basis(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a == unit_index()) return {Rat(1), b};
    // a,b both of positive degree
    const int da = complex_degree(a), db = complex_degree(b);
    if (da + db > 2) return {Rat(0), -1};
    // two divisors
    return {Rat(gram_[a - 1][b - 1]), point_index()};
}

RingPtr make_ring(std::vector<std::string> labels,
                  std::vector<std::vector<long long>> gram) {
    return std::make_shared<const SurfaceRing>(std::move(labels), std::move(gram));
}

static void require_same_ring(const RingPtr& a, const RingPtr& b,
                              const char* what) {
    if (a.get() == b.get()) return;
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument(std::string(what) +
                                    ": classes live over different rings");
}

SurfaceClass::SurfaceClass(RingPtr ring)
    : ring_(std::move(ring)), c0_(0), c2_(ring_->rank(), Rat(0)), c4_(0) {}

SurfaceClass::SurfaceClass(RingPtr ring, Rat c0, std::vector<Rat> c2, Rat c4)
    : ring_(std::move(ring)), c0_(std::move(c0)), c2_(std::move(c2)),
      c4_(std::move(c4)) {
    if (static_cast<int>(c2_.size()) != ring_->rank())
        throw std::invalid_argument("SurfaceClass: divisor vector has wrong size");
}

SurfaceClass SurfaceClass::unit(const RingPtr& ring) {
    SurfaceClass x(ring);
    x.c0_ = 1;
    return x;
}

SurfaceClass SurfaceClass::point(const RingPtr& ring) {
    SurfaceClass x(ring);
    x.c4_ = 1;
    return x;
}

SurfaceClass SurfaceClass::divisor(const RingPtr& ring, int i) {
    SurfaceClass x(ring);
    x.c2_.at(i) = 1;
    return x;
}

SurfaceClass SurfaceClass::basis(const RingPtr& ring, int b) {
    if (b == ring->unit_index()) return unit(ring);
    if (b == ring->point_index()) return point(ring);
    return divisor(ring, b - 1);
}

Rat SurfaceClass::coeff(int b) const {
    if (b == ring_->unit_index()) return c0_;
    if (b == ring_->point_index()) return c4_;
    return c2_[b - 1];
}

std::vector<Rat> SurfaceClass::coords() const {
    std::vector<Rat> v;
    v.reserve(ring_->dim());
    v.push_back(c0_);
    for (const auto& x : c2_) v.push_back(x);
    v.push_back(c4_);
    return v;
}

SurfaceClass SurfaceClass::operator+(const SurfaceClass& o) const {
    require_same_ring(ring_, o.ring_, "SurfaceClass::+");
    SurfaceClass r(ring_);
    r.c0_ = c0_ + o.c0_;
    for (int i = 0; i < ring_->rank(); ++i) r.c2_[i] = c2_[i] + o.c2_[i];
    r.c4_ = c4_ + o.c4_;
    return r;
}

SurfaceClass SurfaceClass::operator-(const SurfaceClass& o) const {
    return *this + (-o);
}

SurfaceClass SurfaceClass::operator-() const { return *this * Rat(-1); }

SurfaceClass SurfaceClass::operator*(const Rat& s) const {
    SurfaceClass r(ring_);
    r.c0_ = c0_ * s;
    for (int i = 0; i < ring_->rank(); ++i) r.c2_[i] = c2_[i] * s;
    r.c4_ = c4_ * s;
    return r;
}

bool SurfaceClass::operator==(const SurfaceClass& o) const {
    require_same_ring(ring_, o.ring_, "SurfaceClass::==");
    return c0_ == o.c0_ && c2_ == o.c2_ && c4_ == o.c4_;
}

bool SurfaceClass::is_zero() const {
    if (c0_ != 0 || c4_ != 0) return false;
    for (const auto& x : c2_)
        if (x != 0) return false;
    return true;
}

std::string SurfaceClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rat& c, const std::string& name) {
        if (c == 0) return;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat ac = abs(c);
        if (ac != 1 || name.empty()) {
            os << ac;
            if (!name.empty()) os << "*";
        }
        os << name;
        first = false;
    };
    emit(c0_, "");
    for (int i = 0; i < ring_->rank(); ++i) emit(c2_[i], ring_->labels()[i]);
    emit(c4_, "p");
    if (first) os << "0";
    return os.str();
}

SurfaceEndo::SurfaceEndo(RingPtr ring, RatMat m)
    : ring_(std::move(ring)), m_(std::move(m)) {
    if (m_.rows() != ring_->dim() || m_.cols() != ring_->dim())
        throw std::invalid_argument("SurfaceEndo: matrix size != ring dim");
    Rat d = m_.det();
    det_sign_ = d == 0 ? 0 : (d > 0 ? 1 : -1);
}

SurfaceEndo SurfaceEndo::identity(const RingPtr& ring) {
    return SurfaceEndo(ring, RatMat::identity(ring->dim()));
}

SurfaceClass SurfaceEndo::apply(const SurfaceClass& x) const {
    require_same_ring(ring_, x.ring(), "SurfaceEndo::apply");
    const auto v = x.coords();
    const int n = ring_->dim();
    std::vector<Rat> w(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m_.at(i, j) != 0 && v[j] != 0) w[i] += m_.at(i, j) * v[j];
    std::vector<Rat> c2(w.begin() + 1, w.end() - 1);
    return SurfaceClass(ring_, w[0], std::move(c2), w[n - 1]);
}

SurfaceEndo SurfaceEndo::operator*(const SurfaceEndo& o) const {
    require_same_ring(ring_, o.ring_, "SurfaceEndo::*");
    return SurfaceEndo(ring_, m_ * o.m_);
}

SurfaceEndo SurfaceEndo::inverse() const {
    return SurfaceEndo(ring_, m_.inverse());
}

bool SurfaceEndo::operator==(const SurfaceEndo& o) const {
    require_same_ring(ring_, o.ring_, "SurfaceEndo::==");
    return m_ == o.m_;
}

SurfaceClass cup(const SurfaceClass& a, const SurfaceClass& b) {
    require_same_ring(a.ring(), b.ring(), "cup");
    const RingPtr& R = a.ring();
    SurfaceClass r(R);
    const int rk = R->rank();
    Rat c0 = a.c0() * b.c0();
    std::vector<Rat> c2(rk, Rat(0));
    for (int i = 0; i < rk; ++i) c2[i] = a.c0() * b.c2(i) + b.c0() * a.c2(i);
    Rat c4 = a.c0() * b.c4() + b.c0() * a.c4();
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j)
            if (a.c2(i) != 0 && b.c2(j) != 0)
                c4 += a.c2(i) * b.c2(j) * Rat(R->gram_at(i, j));
    return SurfaceClass(R, std::move(c0), std::move(c2), std::move(c4));
}

Rat mukai_pairing(const SurfaceClass& v, const SurfaceClass& w) {
    require_same_ring(v.ring(), w.ring(), "mukai_pairing");
    const RingPtr& R = v.ring();
    Rat s = -v.c0() * w.c4() - v.c4() * w.c0();
    for (int i = 0; i < R->rank(); ++i)
        for (int j = 0; j < R->rank(); ++j)
            if (v.c2(i) != 0 && w.c2(j) != 0)
                s += v.c2(i) * w.c2(j) * Rat(R->gram_at(i, j));
    return s;
}

SurfaceClass sqrt_todd(const RingPtr& ring) {
    // td(S) = 1 + 2p for a K3 surface; the square root truncates to 1 + p
    return SurfaceClass::unit(ring) + SurfaceClass::point(ring);
}

SurfaceClass mukai_vector(const SurfaceClass& ch) {
    return cup(ch, sqrt_todd(ch.ring()));
}

SurfaceClass line_bundle_ch(const SurfaceClass& d) {
    if (d.c0() != 0 || d.c4() != 0)
        throw std::invalid_argument("line_bundle_ch: input must be of degree 1");
    return SurfaceClass::unit(d.ring()) + d + cup(d, d) * Rat(1, 2);
}

SurfaceClass adams(long k, const SurfaceClass& a) {
    if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
    SurfaceClass r = a;
    std::vector<Rat> c2 = a.c2();
    for (auto& x : c2) x *= k;
    return SurfaceClass(a.ring(), a.c0(), std::move(c2), a.c4() * k * k);
}

SurfaceEndo cup_endo(const SurfaceClass& lambda) {
    const RingPtr& R = lambda.ring();
    const int n = R->dim();
    RatMat m(n, n);
    for (int j = 0; j < n; ++j) {
        SurfaceClass img = cup(lambda, SurfaceClass::basis(R, j));
        for (int i = 0; i < n; ++i) m.at(i, j) = img.coeff(i);
    }
    return SurfaceEndo(R, m);
}

SurfaceEndo grading_endo(const RingPtr& ring) {
    std::vector<Rat> d(ring->dim());
    for (int b = 0; b < ring->dim(); ++b)
        d[b] = 2 * ring->complex_degree(b) - 2;
    return SurfaceEndo(ring, RatMat::diagonal(d));
}

SurfaceEndo mukai_reflection(const SurfaceClass& v) {
    Rat vv = mukai_pairing(v, v);
    if (vv == 0)
        throw std::domain_error("mukai_reflection: (v,v) = 0");
    const RingPtr& R = v.ring();
    const int n = R->dim();
    RatMat m(n, n);
    for (int j = 0; j < n; ++j) {
        SurfaceClass x = SurfaceClass::basis(R, j);
        SurfaceClass img = x - v * (Rat(2) * mukai_pairing(x, v) / vv);
        for (int i = 0; i < n; ++i) m.at(i, j) = img.coeff(i);
    }
    return SurfaceEndo(R, m);
}

SurfaceEndo spherical_twist_action(const RingPtr& ring) {
    return mukai_reflection(mukai_vector(SurfaceClass::unit(ring)));
}

bool is_mukai_isometry(const SurfaceEndo& g) {
    const RingPtr& R = g.ring();
    const int n = R->dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SurfaceClass x = SurfaceClass::basis(R, i);
            SurfaceClass y = SurfaceClass::basis(R, j);
            if (mukai_pairing(g.apply(x), g.apply(y)) != mukai_pairing(x, y))
                return false;
        }
    return true;
}

Sl2Triple lefschetz_triple(const SurfaceClass& lambda) {
    const RingPtr& R = lambda.ring();
    if (lambda.c0() != 0 || lambda.c4() != 0)
        throw std::invalid_argument("lefschetz_triple: lambda must be of degree 1");
    if (mukai_pairing(lambda, lambda) == 0)
        throw std::domain_error("lefschetz_triple: (lambda,lambda) = 0, f is not unique");
    SurfaceEndo e = cup_endo(lambda);
    SurfaceEndo h = grading_endo(R);
    // unknown f, N^2 entries; equations [e,f] = h and [h,f] = -2f
    const int n = R->dim();
    const int vars = n * n;
    RatMat A(2 * vars, vars);
    std::vector<Rat> b(2 * vars, Rat(0));
    auto var = [n](int i, int j) { return i * n + j; };
    int row = 0;
    // sum_k e[i][k] f[k][j] - f[i][k] e[k][j] = h[i][j]
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++row) {
            for (int k = 0; k < n; ++k) {
                A.at(row, var(k, j)) += e.matrix().at(i, k);
                A.at(row, var(i, k)) -= e.matrix().at(k, j);
            }
            b[row] = h.matrix().at(i, j);
        }
    // (h_i - h_j + 2) f[i][j] = 0   (h diagonal)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++row)
            A.at(row, var(i, j)) =
                h.matrix().at(i, i) - h.matrix().at(j, j) + 2;
    auto sol = solve_unique(A, b);
    if (!sol)
        throw std::domain_error("lefschetz_triple: commutation system has no unique solution");
    RatMat f(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.at(i, j) = (*sol)[var(i, j)];
    return {e, h, SurfaceEndo(R, f)};
}

bool verify_st_conjugation(const SurfaceClass& lambda) {
    Sl2Triple t = lefschetz_triple(lambda);
    SurfaceEndo phi = spherical_twist_action(lambda.ring());
    RatMat lhs = phi.inverse().matrix() * t.e.matrix() * phi.matrix();
    RatMat rhs = t.f.matrix() * (-mukai_pairing(lambda, lambda) / Rat(2));
    return lhs == rhs;
}

SurfaceEndo adams_endo(const RingPtr& ring, long k) {
    if (k == 0) throw std::invalid_argument("adams_endo: k = 0");
    std::vector<Rat> d(ring->dim());
    for (int b = 0; b < ring->dim(); ++b)
        d[b] = rat_pow(Rat(k), ring->complex_degree(b));
    return SurfaceEndo(ring, RatMat::diagonal(d));
}

SurfaceEndo half_grading_scale(const RingPtr& ring, long k) {
    if (k < 1) throw std::invalid_argument("half_grading_scale: k must be >= 1");
    std::vector<Rat> d(ring->dim());
    for (int b = 0; b < ring->dim(); ++b)
        d[b] = rat_pow(Rat(k), ring->complex_degree(b) - 1);
    return SurfaceEndo(ring, RatMat::diagonal(d));
}

} // namespace hilbcoh

#include "hilbcoh/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbcoh {

namespace {

void require_compatible(const RingPtr& a, int na, const RingPtr& b, int nb,
                        const char* what) {
    if (na != nb)
        throw std::invalid_argument(std::string(what) + ": different n");
    if (a.get() != b.get() && !(*a == *b))
        throw std::invalid_argument(std::string(what) + ": different rings");
}

std::string vec_string(const RingPtr& ring, const std::vector<Rat>& coeffs,
                       const std::vector<std::string>& names, const Rat& last,
                       const std::string& last_name) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rat& c, const std::string& name) {
        if (c == 0) return;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat ac = abs(c);
        if (ac != 1) os << ac << "*";
        os << name;
        first = false;
    };
    for (size_t i = 0; i < coeffs.size(); ++i) emit(coeffs[i], names[i]);
    emit(last, last_name);
    if (first) os << "0";
    (void)ring;
    return os.str();
}

} // namespace

H2Vector::H2Vector(RingPtr r, int nn)
    : ring(std::move(r)), n(nn), surf(ring->rank(), Rat(0)), d(0) {
    if (n < 1) throw std::invalid_argument("H2Vector: n must be >= 1");
}

H2Vector::H2Vector(RingPtr r, int nn, std::vector<Rat> s, Rat dd)
    : ring(std::move(r)), n(nn), surf(std::move(s)), d(std::move(dd)) {
    if (n < 1) throw std::invalid_argument("H2Vector: n must be >= 1");
    if (static_cast<int>(surf.size()) != ring->rank())
        throw std::invalid_argument("H2Vector: wrong divisor vector size");
}

H2Vector H2Vector::theta(const RingPtr& ring, int n, int divisor) {
    H2Vector v(ring, n);
    v.surf.at(divisor) = 1;
    return v;
}

H2Vector H2Vector::delta(const RingPtr& ring, int n) {
    H2Vector v(ring, n);
    v.d = 1;
    return v;
}

H2Vector H2Vector::operator+(const H2Vector& o) const {
    require_compatible(ring, n, o.ring, o.n, "H2Vector::+");
    H2Vector r(ring, n);
    for (int i = 0; i < ring->rank(); ++i) r.surf[i] = surf[i] + o.surf[i];
    r.d = d + o.d;
    return r;
}

H2Vector H2Vector::operator-(const H2Vector& o) const {
    return *this + o * Rat(-1);
}

H2Vector H2Vector::operator*(const Rat& s) const {
    H2Vector r(ring, n);
    for (int i = 0; i < ring->rank(); ++i) r.surf[i] = surf[i] * s;
    r.d = d * s;
    return r;
}

bool H2Vector::operator==(const H2Vector& o) const {
    require_compatible(ring, n, o.ring, o.n, "H2Vector::==");
    return surf == o.surf && d == o.d;
}

bool H2Vector::is_zero() const {
    if (d != 0) return false;
    for (const auto& x : surf)
        if (x != 0) return false;
    return true;
}

std::string H2Vector::to_string() const {
    std::vector<std::string> names;
    for (const auto& l : ring->labels()) names.push_back("theta(" + l + ")");
    return vec_string(ring, surf, names, d, "delta");
}

CurveVector::CurveVector(RingPtr r, int nn)
    : ring(std::move(r)), n(nn), surf_dual(ring->rank(), Rat(0)), a(0) {
    if (n < 1) throw std::invalid_argument("CurveVector: n must be >= 1");
}

CurveVector::CurveVector(RingPtr r, int nn, std::vector<Rat> s, Rat aa)
    : ring(std::move(r)), n(nn), surf_dual(std::move(s)), a(std::move(aa)) {
    if (n < 1) throw std::invalid_argument("CurveVector: n must be >= 1");
    if (static_cast<int>(surf_dual.size()) != ring->rank())
        throw std::invalid_argument("CurveVector: wrong vector size");
}

CurveVector CurveVector::ell_n(const RingPtr& ring, int n, int divisor) {
    CurveVector v(ring, n);
    v.surf_dual.at(divisor) = 1;
    return v;
}

CurveVector CurveVector::fiber_class(const RingPtr& ring, int n) {
    CurveVector v(ring, n);
    v.a = 1;
    return v;
}

CurveVector CurveVector::operator+(const CurveVector& o) const {
    require_compatible(ring, n, o.ring, o.n, "CurveVector::+");
    CurveVector r(ring, n);
    for (int i = 0; i < ring->rank(); ++i)
        r.surf_dual[i] = surf_dual[i] + o.surf_dual[i];
    r.a = a + o.a;
    return r;
}

CurveVector CurveVector::operator-(const CurveVector& o) const {
    return *this + o * Rat(-1);
}

CurveVector CurveVector::operator*(const Rat& s) const {
    CurveVector r(ring, n);
    for (int i = 0; i < ring->rank(); ++i) r.surf_dual[i] = surf_dual[i] * s;
    r.a = a * s;
    return r;
}

bool CurveVector::operator==(const CurveVector& o) const {
    require_compatible(ring, n, o.ring, o.n, "CurveVector::==");
    return surf_dual == o.surf_dual && a == o.a;
}

std::string CurveVector::to_string() const {
    std::vector<std::string> names;
    for (const auto& l : ring->labels()) names.push_back("ell[" + l + "]");
    return vec_string(ring, surf_dual, names, a, "A");
}

Rat bbf(const H2Vector& x, const H2Vector& y) {
    require_compatible(x.ring, x.n, y.ring, y.n, "bbf");
    Rat s = Rat(-2 * (x.n - 1)) * x.d * y.d;
    for (int i = 0; i < x.ring->rank(); ++i)
        for (int j = 0; j < x.ring->rank(); ++j)
            if (x.surf[i] != 0 && y.surf[j] != 0)
                s += x.surf[i] * y.surf[j] * Rat(x.ring->gram_at(i, j));
    return s;
}

Rat curve_pair(const CurveVector& l, const H2Vector& x) {
    require_compatible(l.ring, l.n, x.ring, x.n, "curve_pair");
    // delta . A = -1, theta(lambda) . A = 0, ell_n-duals pair via the Gram
    Rat s = -l.a * x.d;
    for (int i = 0; i < l.ring->rank(); ++i)
        for (int j = 0; j < l.ring->rank(); ++j)
            if (l.surf_dual[i] != 0 && x.surf[j] != 0)
                s += l.surf_dual[i] * x.surf[j] * Rat(l.ring->gram_at(i, j));
    return s;
}

H2Vector curve_dual(const CurveVector& l) {
    if (l.n < 2) throw std::invalid_argument("curve_dual: n must be >= 2");
    // gram part carries over slotwise; the delta coefficient solves
    // (e delta, delta) = ell . delta, i.e. -2(n-1) e = -a
    RatMat g(l.ring->rank(), l.ring->rank());
    for (int i = 0; i < l.ring->rank(); ++i)
        for (int j = 0; j < l.ring->rank(); ++j)
            g.at(i, j) = Rat(l.ring->gram_at(i, j));
    if (g.rows() > 0 && g.det() == 0)
        throw std::domain_error("curve_dual: degenerate Gram matrix, no dual");
    return H2Vector(l.ring, l.n, l.surf_dual, l.a / Rat(2 * l.n - 2));
}

CurveVector h2_to_curve(const H2Vector& x) {
    return CurveVector(x.ring, x.n, x.surf, Rat(2 * x.n - 2) * x.d);
}

Rat line_norm(const RingPtr& ring, int curve_index, int n) {
    if (n < 2) throw std::invalid_argument("line_norm: n must be >= 2");
    if (ring->gram_at(curve_index, curve_index) != -2)
        throw std::invalid_argument("line_norm: distinguished curve must have self-intersection -2");
    CurveVector ell = CurveVector::ell_n(ring, n, curve_index) -
                      CurveVector::fiber_class(ring, n) * Rat(n - 1);
    H2Vector L = curve_dual(ell);
    return bbf(L, L);
}

HTildeVector::HTildeVector(Rat aa, H2Vector m, Rat bb)
    : a(std::move(aa)), mid(std::move(m)), b(std::move(bb)) {}

std::string HTildeVector::to_string() const {
    std::ostringstream os;
    os << a << "*alpha + " << mid.to_string() << " + " << b << "*beta";
    return os.str();
}

Rat htilde_pair(const HTildeVector& x, const HTildeVector& y) {
    return bbf(x.mid, y.mid) - x.a * y.b - x.b * y.a;
}

RatMat htilde_gram(const RingPtr& ring, int n) {
    const int r = ring->rank();
    const int d = r + 3;
    RatMat g(d, d);
    g.at(0, d - 1) = -1;
    g.at(d - 1, 0) = -1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g.at(1 + i, 1 + j) = Rat(ring->gram_at(i, j));
    g.at(r + 1, r + 1) = Rat(-2 * (n - 1));
    return g;
}

HTildeIsometry::HTildeIsometry(RingPtr ring, int n, RatMat m, bool check)
    : ring_(std::move(ring)), n_(n), m_(std::move(m)) {
    if (m_.rows() != ring_->rank() + 3 || m_.cols() != ring_->rank() + 3)
        throw std::invalid_argument("HTildeIsometry: wrong matrix size");
    if (check && !preserves_pairing())
        throw std::domain_error("HTildeIsometry: matrix does not preserve the pairing");
}

bool HTildeIsometry::preserves_pairing() const {
    RatMat g = htilde_gram(ring_, n_);
    return m_.transpose() * g * m_ == g;
}

HTildeVector HTildeIsometry::apply(const HTildeVector& x) const {
    require_compatible(ring_, n_, x.mid.ring, x.mid.n, "HTildeIsometry::apply");
    const int r = ring_->rank();
    const int d = r + 3;
    std::vector<Rat> v(d, Rat(0));
    v[0] = x.a;
    for (int i = 0; i < r; ++i) v[1 + i] = x.mid.surf[i];
    v[r + 1] = x.mid.d;
    v[d - 1] = x.b;
    std::vector<Rat> w(d, Rat(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (m_.at(i, j) != 0 && v[j] != 0) w[i] += m_.at(i, j) * v[j];
    H2Vector mid(ring_, n_, std::vector<Rat>(w.begin() + 1, w.begin() + 1 + r),
                 w[r + 1]);
    return HTildeVector(w[0], std::move(mid), w[d - 1]);
}

HTildeIsometry HTildeIsometry::operator*(const HTildeIsometry& o) const {
    require_compatible(ring_, n_, o.ring_, o.n_, "HTildeIsometry::*");
    return HTildeIsometry(ring_, n_, m_ * o.m_, false);
}

HTildeIsometry HTildeIsometry::inverse() const {
    return HTildeIsometry(ring_, n_, m_.inverse(), false);
}

bool HTildeIsometry::operator==(const HTildeIsometry& o) const {
    require_compatible(ring_, n_, o.ring_, o.n_, "HTildeIsometry::==");
    return m_ == o.m_;
}

HTildeIsometry b_field(const H2Vector& lambda) {
    const RingPtr& R = lambda.ring;
    const int r = R->rank();
    const int d = r + 3;
    RatMat m = RatMat::identity(d);
    // column of alpha: alpha + lambda + ((lambda,lambda)/2) beta
    for (int i = 0; i < r; ++i) m.at(1 + i, 0) = lambda.surf[i];
    m.at(r + 1, 0) = lambda.d;
    m.at(d - 1, 0) = bbf(lambda, lambda) / Rat(2);
    // columns of H^2: mu + (lambda,mu) beta
    for (int j = 0; j < r + 1; ++j) {
        H2Vector mu =
            j < r ? H2Vector::theta(R, lambda.n, j) : H2Vector::delta(R, lambda.n);
        m.at(d - 1, 1 + j) = bbf(lambda, mu);
    }
    return HTildeIsometry(R, lambda.n, std::move(m), false);
}

HTildeIsometry iota(const SurfaceEndo& g, int n) {
    if (g.det_sign() == 0)
        throw std::invalid_argument("iota: g is not invertible");
    const RingPtr& R = g.ring();
    const int r = R->rank();
    const int d = r + 3;
    // surface basis (1, divisors, p) sits at (alpha, theta-part, beta);
    // delta is fixed
    RatMat m(d, d);
    auto row_of = [&](int surface_basis) {
        // surface index 0 -> 0 (alpha), 1..r -> 1..r, r+1 -> d-1 (beta)
        return surface_basis == r + 1 ? d - 1 : surface_basis;
    };
    for (int j = 0; j < R->dim(); ++j)
        for (int i = 0; i < R->dim(); ++i)
            m.at(row_of(i), row_of(j)) = g.matrix().at(i, j);
    m.at(r + 1, r + 1) = 1;
    return HTildeIsometry(R, n, std::move(m), false);
}

HTildeIsometry htilde_of_induced(const SurfaceEndo& phi, int n) {
    if (phi.det_sign() == 0)
        throw std::invalid_argument("htilde_of_induced: phi is not invertible");
    const RingPtr& R = phi.ring();
    H2Vector half_delta = H2Vector::delta(R, n) * Rat(1, 2);
    HTildeIsometry comp =
        b_field(half_delta * Rat(-1)) * iota(phi, n) * b_field(half_delta);
    Rat sign = (phi.det_sign() == -1 && n % 2 == 0) ? Rat(-1) : Rat(1);
    return HTildeIsometry(R, n, comp.matrix() * sign, false);
}

} // namespace hilbcoh

#pragma once

#include "hilbcoh/ratmat.hpp"
#include "hilbcoh/surface.hpp"

#include <string>
#include <vector>

namespace hilbcoh {

// An element of H^2(S^[n],Q) = theta(H^2(S)) + Q delta, for a fixed n.
// BBF form: theta is an isometry for the surface Gram matrix, delta is
// orthogonal to it, and (delta,delta) = -2(n-1).
struct H2Vector {
    RingPtr ring;
    int n = 0;
    std::vector<Rat> surf; // coefficients over the divisor basis (via theta)
    Rat d;                 // coefficient of delta

    H2Vector(RingPtr ring, int n);
    H2Vector(RingPtr ring, int n, std::vector<Rat> surf, Rat d);

    static H2Vector theta(const RingPtr& ring, int n, int divisor);
    static H2Vector delta(const RingPtr& ring, int n);

    H2Vector operator+(const H2Vector& o) const;
    H2Vector operator-(const H2Vector& o) const;
    H2Vector operator*(const Rat& s) const;
    bool operator==(const H2Vector& o) const;
    bool is_zero() const;

    std::string to_string() const;
};

// An element of H_2(S^[n],Q) spanned by the duals of the divisor classes
// (the ell_n-type classes) and the exceptional fiber class A, with
// delta . A = -1 and theta(lambda) . A = 0.
struct CurveVector {
    RingPtr ring;
    int n = 0;
    std::vector<Rat> surf_dual;
    Rat a;

    CurveVector(RingPtr ring, int n);
    CurveVector(RingPtr ring, int n, std::vector<Rat> surf_dual, Rat a);

    static CurveVector ell_n(const RingPtr& ring, int n, int divisor);
    static CurveVector fiber_class(const RingPtr& ring, int n); // A

    CurveVector operator+(const CurveVector& o) const;
    CurveVector operator-(const CurveVector& o) const;
    CurveVector operator*(const Rat& s) const;
    bool operator==(const CurveVector& o) const;

    std::string to_string() const;
};

Rat bbf(const H2Vector& x, const H2Vector& y);
Rat curve_pair(const CurveVector& l, const H2Vector& x);

// the unique L with bbf(L, x) = l . x for all x; requires n >= 2 and a
// nondegenerate Gram matrix
H2Vector curve_dual(const CurveVector& l);
// the BBF contraction of an H^2 class, landing in H_2
CurveVector h2_to_curve(const H2Vector& x);

// bbf-norm of the dual of ell = ell_n - (n-1) A for the distinguished
// (-2)-curve; equals -(n+3)/2
Rat line_norm(const RingPtr& ring, int curve_index, int n);

// An element of the Mukai/LLV lattice Q alpha + H^2(S^[n],Q) + Q beta.
struct HTildeVector {
    Rat a; // alpha coefficient
    H2Vector mid;
    Rat b; // beta coefficient

    HTildeVector(Rat a, H2Vector mid, Rat b);
    std::string to_string() const;
};

Rat htilde_pair(const HTildeVector& x, const HTildeVector& y);

// basis order for matrices: alpha, divisors, delta, beta
RatMat htilde_gram(const RingPtr& ring, int n);

// An endomorphism of the Mukai lattice; `isometry` construction checks
// pairing preservation exactly.
class HTildeIsometry {
  public:
    HTildeIsometry(RingPtr ring, int n, RatMat m, bool check = true);

    const RingPtr& ring() const { return ring_; }
    int n() const { return n_; }
    const RatMat& matrix() const { return m_; }

    bool preserves_pairing() const;
    HTildeVector apply(const HTildeVector& x) const;
    HTildeIsometry operator*(const HTildeIsometry& o) const;
    HTildeIsometry inverse() const;
    bool operator==(const HTildeIsometry& o) const;
    bool is_identity() const { return m_.is_identity(); }

  private:
    RingPtr ring_;
    int n_;
    RatMat m_;
};

// B-field shift: alpha -> alpha + lambda + ((lambda,lambda)/2) beta,
// mu -> mu + (lambda,mu) beta on H^2, beta -> beta
HTildeIsometry b_field(const H2Vector& lambda);

// embed a surface endomorphism: alpha/beta from the unit/point slots,
// theta-equivariant on divisors, identity on delta
HTildeIsometry iota(const SurfaceEndo& g, int n);

// det(phi)^{n+1} B_{-delta/2} iota(phi) B_{delta/2}: the Mukai-lattice
// action of the induced endomorphism phi^[n]
HTildeIsometry htilde_of_induced(const SurfaceEndo& phi, int n);

} // namespace hilbcoh

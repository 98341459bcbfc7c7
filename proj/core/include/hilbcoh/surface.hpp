#pragma once

#include "hilbcoh/ratmat.hpp"
#include "hilbcoh/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hilbcoh {

// The rational cohomology ring of a K3-type surface, restricted to the unit,
// a chosen basis of algebraic divisor classes, and the point class p.
// Graded basis indices: 0 = unit, 1..rank = divisors, rank+1 = p.
class SurfaceRing {
  public:
    SurfaceRing(std::vector<std::string> labels,
                std::vector<std::vector<long long>> gram);

    int rank() const { return static_cast<int>(labels_.size()); }
    int dim() const { return rank() + 2; }

    int unit_index() const { return 0; }
    int divisor_index(int i) const { return 1 + i; }
    int point_index() const { return rank() + 1; }

    // complex degree of a graded basis element: 0, 1 or 2
    int complex_degree(int basis_index) const;

    long long gram_at(int i, int j) const { return gram_[i][j]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string basis_label(int basis_index) const;

    // cup product of two graded basis elements; every product is a scalar
    // multiple of a single basis element (or zero, basis = -1)
    struct BasisProduct {
        Rat coeff;
        int basis; // -1 when the product vanishes
    };
    BasisProduct cup_basis(int a, int b) const;

    bool operator==(const SurfaceRing& o) const {
        return labels_ == o.labels_ && gram_ == o.gram_;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<long long>> gram_;
};

using RingPtr = std::shared_ptr<const SurfaceRing>;

RingPtr make_ring(std::vector<std::string> labels,
                  std::vector<std::vector<long long>> gram);

// An element of H*(S,Q) = Q·1 + (divisor span) + Q·p.
class SurfaceClass {
  public:
    explicit SurfaceClass(RingPtr ring);
    SurfaceClass(RingPtr ring, Rat c0, std::vector<Rat> c2, Rat c4);

    static SurfaceClass unit(const RingPtr& ring);
    static SurfaceClass point(const RingPtr& ring);
    static SurfaceClass divisor(const RingPtr& ring, int i);
    static SurfaceClass basis(const RingPtr& ring, int basis_index);

    const RingPtr& ring() const { return ring_; }
    const Rat& c0() const { return c0_; }
    const Rat& c2(int i) const { return c2_[i]; }
    const std::vector<Rat>& c2() const { return c2_; }
    const Rat& c4() const { return c4_; }

    Rat coeff(int basis_index) const;
    std::vector<Rat> coords() const; // over the graded basis

    SurfaceClass operator+(const SurfaceClass& o) const;
    SurfaceClass operator-(const SurfaceClass& o) const;
    SurfaceClass operator-() const;
    SurfaceClass operator*(const Rat& s) const;
    bool operator==(const SurfaceClass& o) const;
    bool is_zero() const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    Rat c0_;
    std::vector<Rat> c2_;
    Rat c4_;
};

// An endomorphism of H*(S,Q) as a matrix over the graded basis, with the
// sign of its determinant cached (0 for non-invertible operators).
class SurfaceEndo {
  public:
    SurfaceEndo(RingPtr ring, RatMat m);

    static SurfaceEndo identity(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const RatMat& matrix() const { return m_; }
    int det_sign() const { return det_sign_; }

    SurfaceClass apply(const SurfaceClass& x) const;
    SurfaceEndo operator*(const SurfaceEndo& o) const; // composition
    SurfaceEndo inverse() const;
    bool operator==(const SurfaceEndo& o) const;

    std::string to_string() const { return m_.to_string(); }

  private:
    RingPtr ring_;
    RatMat m_;
    int det_sign_;
};

SurfaceClass cup(const SurfaceClass& a, const SurfaceClass& b);
Rat mukai_pairing(const SurfaceClass& v, const SurfaceClass& w);
SurfaceClass sqrt_todd(const RingPtr& ring);
SurfaceClass mukai_vector(const SurfaceClass& ch);

// ch of the line bundle with first Chern class d: 1 + d + d^2/2
SurfaceClass line_bundle_ch(const SurfaceClass& d);

// Adams operation psi^k: scales the complex-degree-i part by k^i.
SurfaceClass adams(long k, const SurfaceClass& a);

// the operator of cup product with lambda
SurfaceEndo cup_endo(const SurfaceClass& lambda);
// grading operator h, eigenvalue 2i - 2 on complex degree i
SurfaceEndo grading_endo(const RingPtr& ring);

// reflection x -> x - 2(x,v)/(v,v) v in the Mukai pairing; (v,v) != 0
SurfaceEndo mukai_reflection(const SurfaceClass& v);
// the cohomological spherical twist along O_S: the Mukai reflection about
// v(O_S) = 1 + p (an involution fixing the divisor part)
SurfaceEndo spherical_twist_action(const RingPtr& ring);

bool is_mukai_isometry(const SurfaceEndo& g);

struct Sl2Triple {
    SurfaceEndo e, h, f;
};

// Lefschetz triple for a divisor class with (lambda,lambda) != 0; f is found
// by solving [e,f] = h, [h,f] = -2f as an exact linear system.
Sl2Triple lefschetz_triple(const SurfaceClass& lambda);

// checks phi^{-1} e_lambda phi == -(lambda,lambda)/2 * f_lambda with phi the
// spherical twist action
bool verify_st_conjugation(const SurfaceClass& lambda);

// diag(k^0, k, ..., k, k^2): the Adams scaling as an operator (k != 0)
SurfaceEndo adams_endo(const RingPtr& ring, long k);
// k^{h/2} as a diagonal operator, exponents -1, 0, +1 (k >= 1)
SurfaceEndo half_grading_scale(const RingPtr& ring, long k);

} // namespace hilbcoh

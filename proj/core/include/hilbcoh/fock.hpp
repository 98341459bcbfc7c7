#pragma once

#include "hilbcoh/surface.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbcoh {

// A Nakajima monomial q_{k_1}(g_1)...q_{k_l}(g_l) 1 with basis-element
// labels, kept sorted by (k, basis index). Sorting is canonical because
// H*(S) of a K3 surface is purely even, so no Koszul signs arise.
struct FockMonomial {
    std::vector<std::pair<int, int>> factors; // (k, graded basis index)

    FockMonomial() = default;
    explicit FockMonomial(std::vector<std::pair<int, int>> f);

    int weight() const; // sum of the k_i
    // cohomological degree: sum of 2(k_i - 1) + deg_R(gamma_i)
    int degree(const SurfaceRing& ring) const;

    bool operator<(const FockMonomial& o) const { return factors < o.factors; }
    bool operator==(const FockMonomial& o) const { return factors == o.factors; }

    std::string to_string(const SurfaceRing& ring) const;
};

// A finite linear combination of weight-n Nakajima monomials.
class FockState {
  public:
    static FockState vacuum(RingPtr ring);
    FockState(RingPtr ring, int weight) : ring_(std::move(ring)), weight_(weight) {}

    const RingPtr& ring() const { return ring_; }
    int weight() const { return weight_; }
    const std::map<FockMonomial, Rat>& terms() const { return terms_; }

    void add_term(FockMonomial m, const Rat& c);
    Rat coeff(const FockMonomial& m) const;

    FockState operator+(const FockState& o) const;
    FockState operator-(const FockState& o) const;
    FockState operator*(const Rat& s) const;
    bool operator==(const FockState& o) const;
    bool is_zero() const { return terms_.empty(); }

    std::string to_string() const;

  private:
    RingPtr ring_;
    int weight_ = 0;
    std::map<FockMonomial, Rat> terms_; // zero coefficients are pruned
};

// q_k(gamma) applied to s, with gamma expanded over the graded basis
FockState create(int k, const SurfaceClass& gamma, const FockState& s);

// weight-n component of exp( sum_{m>=1} (-1)^{m-1}/m q_m([C]) ) 1
FockState lagrangian_plane_class(const SurfaceClass& C, int n);

// psi_k(g) = k^{h/2} g k^{-h/2}
SurfaceEndo psi_twist(long k, const SurfaceEndo& g);

// Theta_n(g): q_{k}(gamma) labels are twisted by psi_k(g) factorwise
FockState theta_action(const SurfaceEndo& g, const FockState& s);

// true iff every weight-n basis monomial of degree 2n + k maps to a state
// supported in degree 2n - k
bool check_degree_reversal(const SurfaceEndo& g, int n);

// Theta_n(spherical twist) fixes the Grojnowski-Nakajima class of C^[n]
bool check_final_lemma(const SurfaceClass& C, int n);

// all weight-n monomials with basis-element labels
std::vector<FockMonomial> basis_monomials(const SurfaceRing& ring, int n);

} // namespace hilbcoh

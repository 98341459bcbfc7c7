#pragma once

#include "hilbcoh/partitions.hpp"
#include "hilbcoh/trace_chern.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hilbcoh {

// One basis vector of a small graded space: a cohomological Z-degree (signs
// come from its parity) and the surface basis element it stands for.
struct GradedCell {
    int degree;
    int basis_index;
};

struct CellSpace {
    RingPtr ring;
    std::vector<GradedCell> cells;

    // the K-class of the graded space: sum of (-1)^degree e_{basis}
    SurfaceClass k_class() const;
    // true if no two cells share a surface basis element
    bool distinct_basis() const;
};

// multiset of cell indices, sorted ascending
using CellContent = std::vector<int>;

// The n-th tensor power of a graded cell space with the Koszul-signed
// permutation action of S_n (optionally twisted by the sign character),
// realized through explicit signed-permutation matrices for the adjacent
// transpositions. The S_n relations are verified on construction for n <= 5.
class ExplicitGModule {
  public:
    ExplicitGModule(CellSpace space, int n, bool chi_twisted = false);

    int n() const { return n_; }
    std::size_t dim() const { return words_; }
    const CellSpace& space() const { return space_; }

    // supertrace of g (one-line form, 0-based) per auxiliary content: the
    // matrix of g is assembled as a product of generator matrices and its
    // diagonal is read off literally, weighted by (-1)^{total degree}
    std::map<CellContent, Rat> brute_force_trace(const std::vector<int>& g) const;
    Rat total_trace(const std::vector<int>& g) const;

    // canonical permutation with the given cycle type: consecutive cycles
    static std::vector<int> permutation_of_type(const CycleType& t);

    // action of g on a single basis word; exposed for tests
    std::pair<std::vector<int>, int> act(const std::vector<int>& g,
                                         const std::vector<int>& word) const;

  private:
    struct SignedPerm {
        std::vector<std::uint32_t> img;
        std::vector<std::int8_t> sign;
    };
    SignedPerm identity_perm() const;
    SignedPerm compose(const SignedPerm& f, const SignedPerm& g) const;
    SignedPerm matrix_of(const std::vector<int>& g) const;
    void check_relations() const;

    std::size_t encode(const std::vector<int>& word) const;
    std::vector<int> decode(std::size_t index) const;

    CellSpace space_;
    int n_;
    bool chi_twisted_;
    std::size_t words_;
    std::vector<SignedPerm> gens_; // adjacent transpositions s_0..s_{n-2}
};

// Bridge between oracle output and formula output. The formula value for a
// box class over `space` has one coefficient per basis multi-index; dividing
// each by its per-slot Adams weight k_i^{deg} (the localization factor) and
// summing per content gives numbers comparable with brute_force_trace.
// Requires distinct surface basis indices per cell.
std::map<CellContent, Rat> bucket_formula(const CycleValue& value,
                                          const CellSpace& space,
                                          const CycleType& t);

// same reduction without the content refinement (no distinctness needed)
Rat total_formula(const CycleValue& value, const CycleType& t);

} // namespace hilbcoh

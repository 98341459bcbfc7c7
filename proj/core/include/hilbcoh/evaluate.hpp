#pragma once

#include "hilbcoh/kexpr.hpp"
#include "hilbcoh/trace_chern.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hilbcoh {

// Evaluates trace Chern characters ch_g and orbifold Mukai vectors v_g of
// K-expressions, one cycle type at a time, memoized per (node, cycle type).
class Evaluator {
  public:
    // ch_g(expr) on the fixed locus of the class with cycle type t
    CycleValue ch_g(const KExpr& expr, const CycleType& t);
    // all cycle types of the ambient n
    TraceChern ch(const KExpr& expr);

    // v_g per the closed-form rules; Induce and Tensor nodes are refused
    // (their normal-bundle data is not available in closed form)
    CycleValue v_g(const KExpr& expr, const CycleType& t);
    TraceChern orbifold_mukai(const KExpr& expr);

  private:
    enum class Mode { Chern, Mukai };
    CycleValue eval(const KExpr::Node* node, const RingPtr& ring,
                    const CycleType& t, Mode mode);
    // memo keys are node addresses, so evaluated roots are kept alive here
    // to prevent address reuse across expressions
    std::vector<KExpr::Ptr> pinned_;
    std::map<std::pair<const void*, CycleType>, CycleValue> memo_ch_;
    std::map<std::pair<const void*, CycleType>, CycleValue> memo_v_;
};

// convenience wrappers with a throwaway evaluator
CycleValue ch_g(const KExpr& expr, const CycleType& t);
TraceChern ch(const KExpr& expr);
TraceChern orbifold_mukai(const KExpr& expr);

// psi^k(phi) = k^{deg/2} phi k^{-deg/2}, the twist entering induced actions
SurfaceEndo adams_conjugate(long k, const SurfaceEndo& phi);

// the action induced by phi on orbifold cohomology: slotwise psi^{k_i}(phi)
// on the component of cycle type (k_1,...,k_l)
TraceChern induced_action(const SurfaceEndo& phi, const TraceChern& x);

// A class function on S_n with rational values.
struct SnCharacter {
    int n = 0;
    std::map<CycleType, Rat> values;

    static SnCharacter trivial(int n);
    static SnCharacter sign_char(int n);
    static SnCharacter regular(int n);

    const Rat& at(const CycleType& t) const;
};

// ch of the invariant part for a trivial geometric action:
// sum over conjugacy classes of (class size / n!) tr(g|V) times the class
SurfaceClass invariants_ch(
    const std::vector<std::pair<SnCharacter, SurfaceClass>>& parts, int n);

} // namespace hilbcoh

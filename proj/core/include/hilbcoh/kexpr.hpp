#pragma once

#include "hilbcoh/surface.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hilbcoh {

// A formal S_n-equivariant K-class on S^n, represented by its Chern
// character data only. Nodes are immutable and shared.
class KExpr {
  public:
    enum class Kind { Box, Induce, Chi, Tensor, Sum, Shift };

    struct Node;
    using Ptr = std::shared_ptr<const Node>;

    struct Term {
        long long coeff;
        Ptr child;
    };

    struct Node {
        Kind kind;
        int n; // ambient symmetric power
        // Box
        SurfaceClass box_ch;
        int box_sign = +1;
        // Induce(a on S^k, b on S^{n-k}), Tensor(a,b), Chi(a), Shift(m,a)
        Ptr a, b;
        int induce_k = 0;
        int shift_m = 0;
        // Sum
        std::vector<Term> terms;

        Node(Kind k, int amb, SurfaceClass ch)
            : kind(k), n(amb), box_ch(std::move(ch)) {}
    };

    // (F^{box n}, sign) with sign in {+1,-1}; the -1 variant is the chi-twist
    static KExpr box(const SurfaceClass& ch, int sign, int n);
    // Ind_{S_k x S_{n-k}}^{S_n}(left boxtimes right), k = left.ambient()
    static KExpr induce(const KExpr& left, const KExpr& right);
    static KExpr chi(const KExpr& x);
    static KExpr tensor(const KExpr& x, const KExpr& y);
    static KExpr sum(const std::vector<std::pair<long long, KExpr>>& terms);
    // homological shift [m]: multiplies every character by (-1)^m
    static KExpr shift(int m, const KExpr& x);

    int ambient() const { return node_->n; }
    Kind kind() const { return node_->kind; }
    const Node& node() const { return *node_; }
    const Ptr& ptr() const { return node_; }
    const RingPtr& ring() const { return ring_; }

    std::string to_string() const;

  private:
    KExpr(Ptr node, RingPtr ring) : node_(std::move(node)), ring_(std::move(ring)) {}
    Ptr node_;
    RingPtr ring_;
};

// W^k(L) = Ind_{S_k x S_{n-k}}^{S_n}( (L^{box k}, -1) boxtimes (O^{box n-k}, 1) )
KExpr w_class(int k, const SurfaceClass& L_ch, int n);

KExpr chi_twist(const KExpr& x);

// sum_k (-1)^k W^k(L): the K-theoretic alternating sum of the equivariant
// Koszul resolution for the two-term complex [L -> O]
KExpr koszul_class(const SurfaceClass& L_ch, int n);

} // namespace hilbcoh

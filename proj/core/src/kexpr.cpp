#include "hilbcoh/kexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbcoh {

KExpr KExpr::box(const SurfaceClass& ch, int sign, int n) {
    if (n < 0) throw std::invalid_argument("KExpr::box: n < 0");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("KExpr::box: sign must be +1 or -1");
    auto node = std::make_shared<Node>(Kind::Box, n, ch);
    node->box_sign = sign;
    return KExpr(node, ch.ring());
}

KExpr KExpr::induce(const KExpr& left, const KExpr& right) {
    if (!(*left.ring() == *right.ring()))
        throw std::invalid_argument("KExpr::induce: ring mismatch");
    const int k = left.ambient();
    const int n = k + right.ambient();
    auto node = std::make_shared<Node>(Kind::Induce, n,
                                       SurfaceClass(left.ring()));
    node->a = left.ptr();
    node->b = right.ptr();
    node->induce_k = k;
    return KExpr(node, left.ring());
}

KExpr KExpr::chi(const KExpr& x) {
    auto node = std::make_shared<Node>(Kind::Chi, x.ambient(),
                                       SurfaceClass(x.ring()));
    node->a = x.ptr();
    return KExpr(node, x.ring());
}

KExpr KExpr::tensor(const KExpr& x, const KExpr& y) {
    if (x.ambient() != y.ambient())
        throw std::invalid_argument("KExpr::tensor: ambient mismatch");
    if (!(*x.ring() == *y.ring()))
        throw std::invalid_argument("KExpr::tensor: ring mismatch");
    auto node = std::make_shared<Node>(Kind::Tensor, x.ambient(),
                                       SurfaceClass(x.ring()));
    node->a = x.ptr();
    node->b = y.ptr();
    return KExpr(node, x.ring());
}

KExpr KExpr::sum(const std::vector<std::pair<long long, KExpr>>& terms) {
    if (terms.empty()) throw std::invalid_argument("KExpr::sum: empty sum");
    const int n = terms.front().second.ambient();
    auto node = std::make_shared<Node>(Kind::Sum, n,
                                       SurfaceClass(terms.front().second.ring()));
    for (const auto& [c, t] : terms) {
        if (t.ambient() != n)
            throw std::invalid_argument("KExpr::sum: ambient mismatch");
        node->terms.push_back({c, t.ptr()});
    }
    return KExpr(node, terms.front().second.ring());
}

KExpr KExpr::shift(int m, const KExpr& x) {
    auto node = std::make_shared<Node>(Kind::Shift, x.ambient(),
                                       SurfaceClass(x.ring()));
    node->a = x.ptr();
    node->shift_m = m;
    return KExpr(node, x.ring());
}

static std::string node_str(const KExpr::Node& nd) {
    std::ostringstream os;
    switch (nd.kind) {
    case KExpr::Kind::Box:
        os << "(" << nd.box_ch.to_string() << ")^[x" << nd.n << "],"
           << (nd.box_sign > 0 ? "+1" : "-1");
        break;
    case KExpr::Kind::Induce:
        os << "Ind_" << nd.induce_k << "^" << nd.n << "(" << node_str(*nd.a)
           << " ; " << node_str(*nd.b) << ")";
        break;
    case KExpr::Kind::Chi:
        os << "chi(" << node_str(*nd.a) << ")";
        break;
    case KExpr::Kind::Tensor:
        os << "(" << node_str(*nd.a) << ") (x) (" << node_str(*nd.b) << ")";
        break;
    case KExpr::Kind::Sum: {
        bool first = true;
        for (const auto& t : nd.terms) {
            if (!first) os << " + ";
            os << t.coeff << "*(" << node_str(*t.child) << ")";
            first = false;
        }
        break;
    }
    case KExpr::Kind::Shift:
        os << "(" << node_str(*nd.a) << ")[" << nd.shift_m << "]";
        break;
    }
    return os.str();
}

std::string KExpr::to_string() const { return node_str(*node_); }

KExpr w_class(int k, const SurfaceClass& L_ch, int n) {
    if (k < 0 || k > n)
        throw std::invalid_argument("w_class: k out of range");
    const RingPtr& R = L_ch.ring();
    KExpr left = KExpr::box(L_ch, -1, k);
    KExpr right = KExpr::box(SurfaceClass::unit(R), +1, n - k);
    return KExpr::induce(left, right);
}

KExpr chi_twist(const KExpr& x) { return KExpr::chi(x); }

KExpr koszul_class(const SurfaceClass& L_ch, int n) {
    std::vector<std::pair<long long, KExpr>> terms;
    for (int k = 0; k <= n; ++k)
        terms.emplace_back(k % 2 == 0 ? 1 : -1, w_class(k, L_ch, n));
    return KExpr::sum(terms);
}

} // namespace hilbcoh

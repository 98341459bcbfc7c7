#include "hilbcoh/evaluate.hpp"

#include <functional>
#include <stdexcept>

namespace hilbcoh {

namespace {

// all ways to pick `take` slot positions out of [first, first+count)
void combinations(int first, int count, int take,
                  std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (count - idx < left) return;
        cur.push_back(first + idx);
        rec(idx + 1, left - 1);
        cur.pop_back();
        rec(idx + 1, left);
    };
    rec(0, take);
}

struct Run {
    int part;
    int start;
    int count;
};

std::vector<Run> runs_of(const CycleType& t) {
    std::vector<Run> runs;
    const auto& parts = t.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        runs.push_back({parts[i], static_cast<int>(i), static_cast<int>(j - i)});
        i = j;
    }
    return runs;
}

} // namespace

CycleValue Evaluator::eval(const KExpr::Node* node, const RingPtr& ring,
                           const CycleType& t, Mode mode) {
    if (t.n() != node->n)
        throw std::invalid_argument("Evaluator: cycle type " + t.to_string() +
                                    " does not match ambient n = " +
                                    std::to_string(node->n));
    auto& memo = mode == Mode::Chern ? memo_ch_ : memo_v_;
    const auto key = std::make_pair(static_cast<const void*>(node), t);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    CycleValue result(ring, t);
    switch (node->kind) {
    case KExpr::Kind::Box: {
        std::vector<SurfaceClass> slots;
        slots.reserve(t.length());
        for (int i = 0; i < t.length(); ++i) {
            const long k = t.part(i);
            if (mode == Mode::Chern) {
                slots.push_back(adams(k, node->box_ch));
            } else {
                // v_g picks up k^{-dim S/2} = 1/k per slot of cycle length k
                slots.push_back(adams(k, mukai_vector(node->box_ch)) *
                                (Rat(1) / Rat(k)));
            }
        }
        result = CycleValue::decomposable(ring, t, slots);
        if (node->box_sign < 0) result *= Rat(t.sgn());
        break;
    }
    case KExpr::Kind::Chi: {
        result = eval(node->a.get(), ring, t, mode) * Rat(t.sgn());
        break;
    }
    case KExpr::Kind::Shift: {
        result = eval(node->a.get(), ring, t, mode) *
                 Rat(node->shift_m % 2 == 0 ? 1 : -1);
        break;
    }
    case KExpr::Kind::Sum: {
        for (const auto& term : node->terms)
            result += eval(term.child.get(), ring, t, mode) * Rat(term.coeff);
        break;
    }
    case KExpr::Kind::Tensor: {
        if (mode == Mode::Mukai)
            throw std::domain_error(
                "orbifold_mukai: Tensor nodes are outside the closed-form cases");
        result = eval(node->a.get(), ring, t, mode)
                     .slotwise_cup(eval(node->b.get(), ring, t, mode));
        break;
    }
    case KExpr::Kind::Induce: {
        if (mode == Mode::Mukai)
            throw std::domain_error(
                "orbifold_mukai: Induce nodes are unsupported (normal-bundle "
                "data is not available in closed form)");
        // induced-character rule: sum over g-invariant k-subsets, i.e. over
        // selections of whole cycles of total length k; each selection
        // contributes the transported left value on the chosen slots times
        // the right value on the rest
        const int k = node->induce_k;
        const auto runs = runs_of(t);
        std::function<void(size_t, int, std::vector<int>&)> rec =
            [&](size_t ri, int rest, std::vector<int>& a_pos) {
                if (ri == runs.size()) {
                    if (rest != 0) return;
                    std::vector<bool> is_a(t.length(), false);
                    for (int p : a_pos) is_a[p] = true;
                    std::vector<int> parts_a, parts_b, pos_a, pos_b;
                    for (int s = 0; s < t.length(); ++s) {
                        if (is_a[s]) {
                            parts_a.push_back(t.part(s));
                            pos_a.push_back(s);
                        } else {
                            parts_b.push_back(t.part(s));
                            pos_b.push_back(s);
                        }
                    }
                    CycleValue va =
                        eval(node->a.get(), ring, CycleType(parts_a), mode);
                    CycleValue vb =
                        eval(node->b.get(), ring, CycleType(parts_b), mode);
                    for (const auto& [ka, ca] : va.coeff())
                        for (const auto& [kb, cb] : vb.coeff()) {
                            SlotKey nk = 0;
                            for (size_t i = 0; i < pos_a.size(); ++i)
                                nk = slot_set(nk, pos_a[i],
                                              slot_get(ka, static_cast<int>(i)));
                            for (size_t i = 0; i < pos_b.size(); ++i)
                                nk = slot_set(nk, pos_b[i],
                                              slot_get(kb, static_cast<int>(i)));
                            result.add_term(nk, ca * cb);
                        }
                    return;
                }
                const Run& run = runs[ri];
                const int max_take = std::min(run.count, rest / run.part);
                for (int take = 0; take <= max_take; ++take) {
                    std::vector<std::vector<int>> choices;
                    combinations(run.start, run.count, take, choices);
                    for (const auto& choice : choices) {
                        const size_t old = a_pos.size();
                        a_pos.insert(a_pos.end(), choice.begin(), choice.end());
                        rec(ri + 1, rest - take * run.part, a_pos);
                        a_pos.resize(old);
                    }
                }
            };
        std::vector<int> a_pos;
        rec(0, k, a_pos);
        break;
    }
    }
    memo.emplace(key, result);
    return result;
}

CycleValue Evaluator::ch_g(const KExpr& expr, const CycleType& t) {
    pinned_.push_back(expr.ptr());
    return eval(&expr.node(), expr.ring(), t, Mode::Chern);
}

TraceChern Evaluator::ch(const KExpr& expr) {
    TraceChern out(expr.ring(), expr.ambient());
    for (const auto& t : partitions_of(expr.ambient()))
        out.set(t, ch_g(expr, t));
    return out;
}

CycleValue Evaluator::v_g(const KExpr& expr, const CycleType& t) {
    pinned_.push_back(expr.ptr());
    return eval(&expr.node(), expr.ring(), t, Mode::Mukai);
}

TraceChern Evaluator::orbifold_mukai(const KExpr& expr) {
    TraceChern out(expr.ring(), expr.ambient());
    for (const auto& t : partitions_of(expr.ambient()))
        out.set(t, v_g(expr, t));
    return out;
}

CycleValue ch_g(const KExpr& expr, const CycleType& t) {
    Evaluator ev;
    return ev.ch_g(expr, t);
}

TraceChern ch(const KExpr& expr) {
    Evaluator ev;
    return ev.ch(expr);
}

TraceChern orbifold_mukai(const KExpr& expr) {
    Evaluator ev;
    return ev.orbifold_mukai(expr);
}

SurfaceEndo adams_conjugate(long k, const SurfaceEndo& phi) {
    SurfaceEndo d = adams_endo(phi.ring(), k);
    return d * phi * d.inverse();
}

TraceChern induced_action(const SurfaceEndo& phi, const TraceChern& x) {
    TraceChern out(x.ring(), x.n());
    for (const auto& [t, v] : x.components()) {
        std::vector<SurfaceEndo> maps;
        maps.reserve(t.length());
        for (int i = 0; i < t.length(); ++i)
            maps.push_back(adams_conjugate(t.part(i), phi));
        out.set(t, v.apply_slotwise(maps));
    }
    return out;
}

SnCharacter SnCharacter::trivial(int n) {
    SnCharacter c;
    c.n = n;
    for (const auto& t : partitions_of(n)) c.values[t] = 1;
    return c;
}

SnCharacter SnCharacter::sign_char(int n) {
    SnCharacter c;
    c.n = n;
    for (const auto& t : partitions_of(n)) c.values[t] = t.sgn();
    return c;
}

SnCharacter SnCharacter::regular(int n) {
    SnCharacter c;
    c.n = n;
    for (const auto& t : partitions_of(n))
        c.values[t] = t.length() == n ? Rat(factorial(n)) : Rat(0);
    return c;
}

const Rat& SnCharacter::at(const CycleType& t) const {
    auto it = values.find(t);
    if (it == values.end())
        throw std::invalid_argument("SnCharacter: missing value at " +
                                    t.to_string());
    return it->second;
}

SurfaceClass invariants_ch(
    const std::vector<std::pair<SnCharacter, SurfaceClass>>& parts, int n) {
    if (parts.empty())
        throw std::invalid_argument("invariants_ch: empty input");
    SurfaceClass out(parts.front().second.ring());
    const Rat order(factorial(n));
    for (const auto& [chr, cls] : parts) {
        if (chr.n != n)
            throw std::invalid_argument("invariants_ch: character of wrong S_n");
        Rat mult(0);
        for (const auto& t : partitions_of(n))
            mult += Rat(t.class_size()) * chr.at(t);
        out = out + cls * (mult / order);
    }
    return out;
}

} // namespace hilbcoh

#include "hilbcoh/fock.hpp"

#include "hilbcoh/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hilbcoh {

FockMonomial::FockMonomial(std::vector<std::pair<int, int>> f)
    : factors(std::move(f)) {
    for (const auto& [k, b] : factors)
        if (k < 1) throw std::invalid_argument("FockMonomial: k must be >= 1");
    std::sort(factors.begin(), factors.end());
}

int FockMonomial::weight() const {
    int w = 0;
    for (const auto& [k, b] : factors) w += k;
    return w;
}

int FockMonomial::degree(const SurfaceRing& ring) const {
    int d = 0;
    for (const auto& [k, b] : factors)
        d += 2 * (k - 1) + 2 * ring.complex_degree(b);
    return d;
}

std::string FockMonomial::to_string(const SurfaceRing& ring) const {
    if (factors.empty()) return "|0>";
    std::ostringstream os;
    for (const auto& [k, b] : factors)
        os << "q_" << k << "(" << ring.basis_label(b) << ")";
    os << "|0>";
    return os.str();
}

FockState FockState::vacuum(RingPtr ring) {
    FockState s(std::move(ring), 0);
    s.add_term(FockMonomial{}, Rat(1));
    return s;
}

void FockState::add_term(FockMonomial m, const Rat& c) {
    if (c == 0) return;
    if (m.weight() != weight_)
        throw std::invalid_argument("FockState: monomial weight mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat FockState::coeff(const FockMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

FockState FockState::operator+(const FockState& o) const {
    if (weight_ != o.weight_)
        throw std::invalid_argument("FockState::+: weight mismatch");
    FockState r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

FockState FockState::operator-(const FockState& o) const {
    return *this + o * Rat(-1);
}

FockState FockState::operator*(const Rat& s) const {
    FockState r(ring_, weight_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

bool FockState::operator==(const FockState& o) const {
    return weight_ == o.weight_ && terms_ == o.terms_;
}

std::string FockState::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat ac = abs(c);
        if (ac != 1) os << ac << "*";
        os << m.to_string(*ring_);
        first = false;
    }
    return os.str();
}

FockState create(int k, const SurfaceClass& gamma, const FockState& s) {
    if (k < 1) throw std::invalid_argument("create: k must be >= 1");
    const RingPtr& R = s.ring();
    FockState out(R, s.weight() + k);
    for (int b = 0; b < R->dim(); ++b) {
        Rat cb = gamma.coeff(b);
        if (cb == 0) continue;
        for (const auto& [m, c] : s.terms()) {
            auto factors = m.factors;
            factors.emplace_back(k, b);
            out.add_term(FockMonomial(std::move(factors)), c * cb);
        }
    }
    return out;
}

FockState lagrangian_plane_class(const SurfaceClass& C, int n) {
    if (n < 0) throw std::invalid_argument("lagrangian_plane_class: n < 0");
    const RingPtr& R = C.ring();
    FockState out(R, n);
    for (const auto& part : partitions_of(n)) {
        // exp coefficient: prod over part sizes m with multiplicity a of
        // ((-1)^{m-1}/m)^a / a!
        Rat coeff(1);
        for (const auto& [m, a] : part.multiplicities()) {
            Rat base = Rat(m % 2 == 1 ? 1 : -1) / Rat(m);
            coeff *= rat_pow(base, a) / Rat(factorial(a));
        }
        FockState term = FockState::vacuum(R);
        for (int i = 0; i < part.length(); ++i) term = create(part.part(i), C, term);
        out = out + term * coeff;
    }
    return out;
}

SurfaceEndo psi_twist(long k, const SurfaceEndo& g) {
    if (k < 1) throw std::invalid_argument("psi_twist: k must be >= 1");
    SurfaceEndo d = half_grading_scale(g.ring(), k);
    return d * g * d.inverse();
}

FockState theta_action(const SurfaceEndo& g, const FockState& s) {
    const RingPtr& R = s.ring();
    std::map<int, SurfaceEndo> twists;
    auto twist = [&](int k) -> const SurfaceEndo& {
        auto it = twists.find(k);
        if (it == twists.end())
            it = twists.emplace(k, psi_twist(k, g)).first;
        return it->second;
    };
    FockState out(R, s.weight());
    for (const auto& [m, c] : s.terms()) {
        // multilinear re-expansion of the twisted labels
        std::vector<std::pair<FockMonomial, Rat>> acc{{FockMonomial{}, c}};
        for (const auto& [k, b] : m.factors) {
            SurfaceClass img = twist(k).apply(SurfaceClass::basis(R, b));
            std::vector<std::pair<FockMonomial, Rat>> next;
            for (int nb = 0; nb < R->dim(); ++nb) {
                Rat cb = img.coeff(nb);
                if (cb == 0) continue;
                for (const auto& [pm, pc] : acc) {
                    auto factors = pm.factors;
                    factors.emplace_back(k, nb);
                    next.emplace_back(FockMonomial(std::move(factors)), pc * cb);
                }
            }
            acc = std::move(next);
        }
        for (auto& [pm, pc] : acc) out.add_term(std::move(pm), pc);
    }
    return out;
}

std::vector<FockMonomial> basis_monomials(const SurfaceRing& ring, int n) {
    std::vector<FockMonomial> out;
    for (const auto& part : partitions_of(n)) {
        std::vector<std::pair<int, int>> cur;
        std::function<void(int)> rec = [&](int i) {
            if (i == part.length()) {
                // label assignments differing by a permutation of equal
                // parts collapse to one canonical monomial; dedup below
                out.emplace_back(cur);
                return;
            }
            for (int b = 0; b < ring.dim(); ++b) {
                cur.emplace_back(part.part(i), b);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool check_degree_reversal(const SurfaceEndo& g, int n) {
    const RingPtr& R = g.ring();
    for (const auto& m : basis_monomials(*R, n)) {
        const int k = m.degree(*R) - 2 * n;
        FockState s(R, n);
        s.add_term(m, Rat(1));
        FockState img = theta_action(g, s);
        for (const auto& [im, c] : img.terms())
            if (im.degree(*R) != 2 * n - k) return false;
    }
    return true;
}

bool check_final_lemma(const SurfaceClass& C, int n) {
    FockState cls = lagrangian_plane_class(C, n);
    SurfaceEndo st = spherical_twist_action(C.ring());
    return theta_action(st, cls) == cls;
}

} // namespace hilbcoh

#include "hilbcoh/checks.hpp"

#include "hilbcoh/evaluate.hpp"
#include "hilbcoh/fock.hpp"
#include "hilbcoh/kexpr.hpp"
#include "hilbcoh/oracle.hpp"
#include "hilbcoh/partitions.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hilbcoh {

using json = nlohmann::ordered_json;

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
}

IsometrySampler::IsometrySampler(RingPtr ring, std::uint64_t seed)
    : ring_(std::move(ring)), rng_(seed) {}

SurfaceEndo IsometrySampler::reflection() {
    // integer Mukai vectors with (v,v) != 0 give exact-rational reflections
    for (;;) {
        SurfaceClass v(ring_);
        std::vector<Rat> c2(ring_->rank());
        for (auto& x : c2) x = rng_.range(-2, 2);
        v = SurfaceClass(ring_, Rat(rng_.range(-2, 2)), std::move(c2),
                         Rat(rng_.range(-2, 2)));
        if (mukai_pairing(v, v) != 0) return mukai_reflection(v);
    }
}

SurfaceEndo IsometrySampler::product(int reflections) {
    SurfaceEndo g = SurfaceEndo::identity(ring_);
    for (int i = 0; i < reflections; ++i) g = g * reflection();
    return g;
}

SurfaceEndo IsometrySampler::next() {
    return product(static_cast<int>(rng_.range(1, 3)));
}

H2Vector IsometrySampler::next_h2(int n) {
    std::vector<Rat> surf(ring_->rank());
    for (auto& x : surf) x = Rat(rng_.range(-4, 4), rng_.range(1, 2));
    return H2Vector(ring_, n, std::move(surf), Rat(rng_.range(-4, 4), 2));
}

SurfaceEndo divisor_reflection(const RingPtr& ring, int divisor_index) {
    if (ring->gram_at(divisor_index, divisor_index) != -2)
        throw std::invalid_argument(
            "divisor_reflection: divisor must have self-intersection -2");
    return mukai_reflection(SurfaceClass::divisor(ring, divisor_index));
}

namespace {

struct Ctx {
    RingPtr ring;
    int curve_index;
    std::uint64_t seed;
};

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name, int n) {
    std::uint64_t h = 0xCBF29CE484222325ULL ^ seed;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    h ^= static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL;
    return h;
}

using Witness = std::optional<std::string>;

std::string two_sided(const std::string& where, const std::string& lhs,
                      const std::string& rhs) {
    return where + ": lhs = " + lhs + ", rhs = " + rhs;
}

// ---- norm -----------------------------------------------------------------

Witness check_norm(const Ctx& ctx, int n) {
    Rat got = line_norm(ctx.ring, ctx.curve_index, n);
    Rat expected = Rat(-(n + 3), 2);
    if (got != expected)
        return two_sided("n = " + std::to_string(n), got.str(), expected.str());
    return std::nullopt;
}

// ---- dual -----------------------------------------------------------------

Witness check_dual(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    const int c = ctx.curve_index;
    CurveVector ell = CurveVector::ell_n(R, n, c) -
                      CurveVector::fiber_class(R, n) * Rat(n - 1);
    H2Vector L = curve_dual(ell);
    H2Vector expected =
        H2Vector::theta(R, n, c) - H2Vector::delta(R, n) * Rat(1, 2);
    if (!(L == expected))
        return two_sided("curve_dual(ell_n - (n-1)A), n = " + std::to_string(n),
                         L.to_string(), expected.to_string());

    H2Vector dual_a = curve_dual(CurveVector::fiber_class(R, n));
    H2Vector exp_a = H2Vector::delta(R, n) * Rat(1, 2 * n - 2);
    if (!(dual_a == exp_a))
        return two_sided("curve_dual(A)", dual_a.to_string(), exp_a.to_string());

    if (!(curve_dual(CurveVector::ell_n(R, n, c)) == H2Vector::theta(R, n, c)))
        return std::string("curve_dual(ell_n) != theta(C)");

    // contraction property on the basis
    std::vector<CurveVector> curves;
    for (int i = 0; i < R->rank(); ++i) curves.push_back(CurveVector::ell_n(R, n, i));
    curves.push_back(CurveVector::fiber_class(R, n));
    std::vector<H2Vector> h2s;
    for (int i = 0; i < R->rank(); ++i) h2s.push_back(H2Vector::theta(R, n, i));
    h2s.push_back(H2Vector::delta(R, n));
    for (const auto& l : curves) {
        H2Vector dual = curve_dual(l);
        for (const auto& x : h2s)
            if (bbf(dual, x) != curve_pair(l, x))
                return two_sided("bbf(curve_dual(" + l.to_string() + "), " +
                                     x.to_string() + ")",
                                 bbf(dual, x).str(), curve_pair(l, x).str());
    }

    // H_2/H^2 = Z/(2n-2): delta contracts to (2n-2) A
    CurveVector delta_curve = h2_to_curve(H2Vector::delta(R, n));
    CurveVector exp_c = CurveVector::fiber_class(R, n) * Rat(2 * n - 2);
    if (!(delta_curve == exp_c))
        return two_sided("h2_to_curve(delta)", delta_curve.to_string(),
                         exp_c.to_string());
    return std::nullopt;
}

// ---- st-sl2 ---------------------------------------------------------------

Witness check_st_sl2(const Ctx& ctx, int /*n*/) {
    const RingPtr& R = ctx.ring;
    // divisor sample: basis vectors, doubles, and pairwise sums/differences
    std::vector<SurfaceClass> sample;
    for (int i = 0; i < R->rank(); ++i) {
        sample.push_back(SurfaceClass::divisor(R, i));
        sample.push_back(SurfaceClass::divisor(R, i) * Rat(2));
        for (int j = i + 1; j < R->rank(); ++j) {
            sample.push_back(SurfaceClass::divisor(R, i) +
                             SurfaceClass::divisor(R, j));
            sample.push_back(SurfaceClass::divisor(R, i) -
                             SurfaceClass::divisor(R, j));
        }
    }
    for (const auto& lambda : sample) {
        if (mukai_pairing(lambda, lambda) == 0) continue;
        Sl2Triple t = lefschetz_triple(lambda);
        RatMat he = t.h.matrix() * t.e.matrix() - t.e.matrix() * t.h.matrix();
        if (!(he == t.e.matrix() * Rat(2)))
            return std::string("[h,e] != 2e at lambda = ") + lambda.to_string();
        RatMat hf = t.h.matrix() * t.f.matrix() - t.f.matrix() * t.h.matrix();
        if (!(hf == t.f.matrix() * Rat(-2)))
            return std::string("[h,f] != -2f at lambda = ") + lambda.to_string();
        RatMat ef = t.e.matrix() * t.f.matrix() - t.f.matrix() * t.e.matrix();
        if (!(ef == t.h.matrix()))
            return std::string("[e,f] != h at lambda = ") + lambda.to_string();
        if (!verify_st_conjugation(lambda))
            return std::string("phi^-1 e phi != -(l,l)/2 f at lambda = ") +
                   lambda.to_string();
    }
    // the spherical twist itself: involution, isometry, fixes divisors
    SurfaceEndo phi = spherical_twist_action(R);
    if (!(phi * phi == SurfaceEndo::identity(R)))
        return std::string("spherical twist is not an involution");
    if (!is_mukai_isometry(phi))
        return std::string("spherical twist is not a Mukai isometry");
    for (int i = 0; i < R->rank(); ++i) {
        SurfaceClass d = SurfaceClass::divisor(R, i);
        if (!(phi.apply(d) == d))
            return std::string("spherical twist moves a divisor class");
    }
    if (!(phi.apply(SurfaceClass::unit(R)) == -SurfaceClass::point(R)))
        return std::string("spherical twist: 1 does not map to -p");
    return std::nullopt;
}

// ---- localization ----------------------------------------------------------

Witness compare_box_suite(int n, const CellSpace& space, int sign,
                          bool chi_twisted) {
    // a box sign of -1 is itself a chi-twist, so the module carries the
    // total parity of the two twists
    ExplicitGModule module(space, n, (sign < 0) != chi_twisted);
    KExpr expr = KExpr::box(space.k_class(), sign, n);
    if (chi_twisted) expr = chi_twist(expr);
    Evaluator ev;
    for (const auto& t : partitions_of(n)) {
        auto oracle =
            module.brute_force_trace(ExplicitGModule::permutation_of_type(t));
        auto formula = bucket_formula(ev.ch_g(expr, t), space, t);
        if (oracle != formula) {
            std::ostringstream os;
            os << "box suite mismatch at t = " << t.to_string()
               << " (sign " << sign << (chi_twisted ? ", chi" : "") << ")";
            for (const auto& [content, v] : oracle) {
                os << " oracle{";
                for (int c : content) os << c;
                os << "}=" << v;
            }
            for (const auto& [content, v] : formula) {
                os << " formula{";
                for (int c : content) os << c;
                os << "}=" << v;
            }
            return os.str();
        }
    }
    return std::nullopt;
}

Witness check_localization(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    const int unit = R->unit_index();
    const int div = R->divisor_index(ctx.curve_index);
    const int point = R->point_index();
    // graded cell spaces of total dimension <= 3 mixing parities and
    // geometric degrees
    std::vector<CellSpace> suites = {
        {R, {{0, unit}}},
        {R, {{1, unit}}},
        {R, {{0, unit}, {2, div}}},
        {R, {{1, unit}, {0, div}}},
        {R, {{0, unit}, {1, div}, {2, point}}},
        {R, {{0, unit}, {0, div}, {1, point}}},
    };
    for (const auto& space : suites)
        for (int sign : {+1, -1})
            for (bool chi : {false, true})
                if (auto w = compare_box_suite(n, space, sign, chi))
                    return w;
    // merged-basis total check (two even cells on the same basis element)
    {
        CellSpace space{R, {{0, unit}, {0, unit}}};
        ExplicitGModule module(space, n);
        KExpr expr = KExpr::box(space.k_class(), +1, n);
        Evaluator ev;
        for (const auto& t : partitions_of(n)) {
            Rat oracle = module.total_trace(
                ExplicitGModule::permutation_of_type(t));
            Rat formula = total_formula(ev.ch_g(expr, t), t);
            if (oracle != formula)
                return two_sided("2-dim even total at t = " + t.to_string(),
                                 oracle.str(), formula.str());
        }
    }
    // induction combinatorics against the oracle: the k-odd-cell content of
    // the box power of (L[-1] + O) realizes W^k(L)[-k]
    {
        CellSpace space{R, {{1, div}, {0, unit}}};
        ExplicitGModule module(space, n);
        SurfaceClass L_ch = SurfaceClass::divisor(R, ctx.curve_index);
        Evaluator ev;
        for (const auto& t : partitions_of(n)) {
            auto oracle = module.brute_force_trace(
                ExplicitGModule::permutation_of_type(t));
            std::map<CellContent, Rat> formula;
            for (int k = 0; k <= n; ++k) {
                KExpr wk = KExpr::shift(k, w_class(k, L_ch, n));
                for (const auto& [content, v] :
                     bucket_formula(ev.ch_g(wk, t), space, t))
                    formula[content] += v;
            }
            for (auto it = formula.begin(); it != formula.end();)
                it = it->second == 0 ? formula.erase(it) : std::next(it);
            if (oracle != formula)
                return std::string("W^k induction vs oracle mismatch at t = ") +
                       t.to_string();
        }
    }
    return std::nullopt;
}

// ---- key-helper (Lemma 3.4) -------------------------------------------------

Witness check_key_helper(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    SurfaceClass C = SurfaceClass::divisor(R, ctx.curve_index);
    for (const Rat& mult : {Rat(1), Rat(2)}) {
        SurfaceClass L = line_bundle_ch(C * mult);
        SurfaceClass Ldual = line_bundle_ch(C * -mult);
        Evaluator ev;
        for (int k = 0; k <= n; ++k) {
            KExpr lhs = chi_twist(w_class(k, L, n));
            KExpr rhs = KExpr::tensor(KExpr::box(L, +1, n),
                                      w_class(n - k, Ldual, n));
            for (const auto& t : partitions_of(n)) {
                CycleValue a = ev.ch_g(lhs, t);
                CycleValue b = ev.ch_g(rhs, t);
                if (!(a == b))
                    return two_sided("k = " + std::to_string(k) +
                                         ", t = " + t.to_string() +
                                         ", c1(L) = " + (C * mult).to_string(),
                                     a.to_string(), b.to_string());
            }
        }
    }
    return std::nullopt;
}

// ---- koszul ------------------------------------------------------------------

Witness check_koszul(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    SurfaceClass C = SurfaceClass::divisor(R, ctx.curve_index);
    SurfaceClass chOC = line_bundle_ch(C);        // ch O(C)
    SurfaceClass chOmC = line_bundle_ch(-C);      // ch O(-C)
    SurfaceClass chStruct = SurfaceClass::unit(R) - chOmC; // ch O_C
    Evaluator ev;

    // alternating sum of W^k(O(-C)) telescopes to the box power of ch O_C
    KExpr alt = koszul_class(chOmC, n);
    KExpr boxOC = KExpr::box(chStruct, +1, n);
    for (const auto& t : partitions_of(n)) {
        CycleValue a = ev.ch_g(alt, t);
        CycleValue b = ev.ch_g(boxOC, t);
        if (!(a == b))
            return two_sided("alternating sum at t = " + t.to_string(),
                             a.to_string(), b.to_string());
    }

    // chi-twist of the chain: (O(-C)^{box n},1) tensor the reversed
    // alternating sum of W^j(O(C))
    std::vector<std::pair<long long, KExpr>> terms;
    for (int j = 0; j <= n; ++j)
        terms.emplace_back((n - j) % 2 == 0 ? 1 : -1, w_class(j, chOC, n));
    KExpr rhs = KExpr::tensor(KExpr::box(chOmC, +1, n), KExpr::sum(terms));
    KExpr lhs = chi_twist(alt);
    for (const auto& t : partitions_of(n)) {
        CycleValue a = ev.ch_g(lhs, t);
        CycleValue b = ev.ch_g(rhs, t);
        if (!(a == b))
            return two_sided("chi-twisted chain at t = " + t.to_string(),
                             a.to_string(), b.to_string());
    }

    // the resolved complex: sum_j (-1)^j W^j(O(C)) = (-1)^n (O_C(C)^{box n},-1)
    SurfaceClass chOCC = chOC - SurfaceClass::unit(R); // ch O_C(C) = C - p
    std::vector<std::pair<long long, KExpr>> terms2;
    for (int j = 0; j <= n; ++j)
        terms2.emplace_back(j % 2 == 0 ? 1 : -1, w_class(j, chOC, n));
    KExpr lhs2 = KExpr::sum(terms2);
    KExpr rhs2 = KExpr::shift(n, KExpr::box(chOCC, -1, n));
    for (const auto& t : partitions_of(n)) {
        CycleValue a = ev.ch_g(lhs2, t);
        CycleValue b = ev.ch_g(rhs2, t);
        if (!(a == b))
            return two_sided("resolved complex at t = " + t.to_string(),
                             a.to_string(), b.to_string());
    }
    return std::nullopt;
}

// ---- odd-shift ------------------------------------------------------------

Witness check_odd_shift(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    // (O_S[-1]^{box n}, 1) = (O_S^{box n}, -1)[-n]
    KExpr lhs = KExpr::box(-SurfaceClass::unit(R), +1, n);
    KExpr rhs = KExpr::shift(n, KExpr::box(SurfaceClass::unit(R), -1, n));
    Evaluator ev;
    for (const auto& t : partitions_of(n)) {
        CycleValue a = ev.ch_g(lhs, t);
        CycleValue b = ev.ch_g(rhs, t);
        if (!(a == b))
            return two_sided("t = " + t.to_string(), a.to_string(),
                             b.to_string());
    }
    // literal Koszul-sign trace for the transposition on an odd line
    if (n == 2) {
        CellSpace space{R, {{1, R->unit_index()}}};
        ExplicitGModule module(space, 2);
        CycleType swap(std::vector<int>{2});
        Rat oracle = module.total_trace({1, 0});
        Rat formula = total_formula(ev.ch_g(lhs, swap), swap);
        if (oracle != formula)
            return two_sided("odd transposition trace", oracle.str(),
                             formula.str());
        if (oracle != -1)
            return two_sided("odd transposition trace", oracle.str(), "-1");
    }
    return std::nullopt;
}

// ---- invariants -----------------------------------------------------------

Witness check_invariants(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    SurfaceClass x = SurfaceClass::unit(R) +
                     SurfaceClass::divisor(R, ctx.curve_index) * Rat(3) -
                     SurfaceClass::point(R) * Rat(5, 2);
    SurfaceClass got = invariants_ch({{SnCharacter::trivial(n), x}}, n);
    if (!(got == x))
        return two_sided("trivial character", got.to_string(), x.to_string());
    if (n >= 2) {
        got = invariants_ch({{SnCharacter::sign_char(n), x}}, n);
        if (!got.is_zero())
            return two_sided("sign character", got.to_string(), "0");
    }
    got = invariants_ch({{SnCharacter::regular(n), x}}, n);
    if (!(got == x))
        return two_sided("regular character", got.to_string(), x.to_string());
    // linearity in the list
    SurfaceClass y = SurfaceClass::point(R) * Rat(7);
    got = invariants_ch(
        {{SnCharacter::trivial(n), x}, {SnCharacter::regular(n), y}}, n);
    if (!(got == x + y))
        return two_sided("trivial + regular", got.to_string(),
                         (x + y).to_string());
    return std::nullopt;
}

// ---- induced-hom ----------------------------------------------------------

TraceChern spanning_trace(const Ctx& ctx, int n, SplitMix64& rng) {
    TraceChern x(ctx.ring, n);
    for (const auto& t : partitions_of(n)) {
        CycleValue v(ctx.ring, t);
        for (int trial = 0; trial < 3; ++trial) {
            SlotKey key = 0;
            for (int s = 0; s < t.length(); ++s)
                key = slot_set(key, s,
                               static_cast<int>(rng.range(0, ctx.ring->dim() - 1)));
            v.add_term(key, Rat(rng.range(1, 5)));
        }
        x.set(t, v);
    }
    return x;
}

Witness check_induced_hom(const Ctx& ctx, int n) {
    IsometrySampler sampler(ctx.ring, mix_seed(ctx.seed, "induced-hom", n));
    SplitMix64 rng(mix_seed(ctx.seed, "induced-hom-vals", n));
    for (int trial = 0; trial < 5; ++trial) {
        SurfaceEndo f = sampler.next();
        SurfaceEndo g = sampler.next();
        TraceChern x = spanning_trace(ctx, n, rng);
        TraceChern lhs = induced_action(f * g, x);
        TraceChern rhs = induced_action(f, induced_action(g, x));
        if (!(lhs == rhs))
            return std::string("composition fails at trial ") +
                   std::to_string(trial);
        if (!(induced_action(SurfaceEndo::identity(ctx.ring), x) == x))
            return std::string("identity is not preserved");
    }
    return std::nullopt;
}

// ---- theta-hom ------------------------------------------------------------

Witness check_theta_hom(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    IsometrySampler sampler(R, mix_seed(ctx.seed, "theta-hom", n));
    const auto monomials = basis_monomials(*R, n);
    for (int trial = 0; trial < 5; ++trial) {
        SurfaceEndo g1 = sampler.next();
        SurfaceEndo g2 = sampler.next();
        SurfaceEndo g12 = g1 * g2;
        for (const auto& m : monomials) {
            FockState s(R, n);
            s.add_term(m, Rat(1));
            FockState lhs = theta_action(g12, s);
            FockState rhs = theta_action(g1, theta_action(g2, s));
            if (!(lhs == rhs))
                return two_sided("monomial " + m.to_string(*R) + ", trial " +
                                     std::to_string(trial),
                                 lhs.to_string(), rhs.to_string());
        }
    }
    // det(-1) decomposition: Theta(g) = Theta(gh) Theta(h)^{-1}
    SurfaceEndo h = divisor_reflection(R, ctx.curve_index);
    for (int trial = 0; trial < 3; ++trial) {
        SurfaceEndo g = sampler.product(2) * sampler.reflection(); // det -1
        if (g.det_sign() != -1)
            return std::string("sampler produced wrong determinant");
        SurfaceEndo gh = g * h;
        SurfaceEndo h_inv = h.inverse();
        for (const auto& m : monomials) {
            FockState s(R, n);
            s.add_term(m, Rat(1));
            FockState lhs = theta_action(g, s);
            FockState rhs = theta_action(gh, theta_action(h_inv, s));
            if (!(lhs == rhs))
                return two_sided("det(-1) split at " + m.to_string(*R),
                                 lhs.to_string(), rhs.to_string());
        }
    }
    return std::nullopt;
}

// ---- degree-reversal --------------------------------------------------------

Witness check_degree_reversal_entry(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    if (!check_degree_reversal(spherical_twist_action(R), n))
        return std::string("Theta_n(F^H) does not reverse degrees around 2n");
    // control: a degree-preserving isometry must fail the reversal test
    if (check_degree_reversal(divisor_reflection(R, ctx.curve_index), n))
        return std::string(
            "degree-preserving control unexpectedly passes reversal");
    if (check_degree_reversal(SurfaceEndo::identity(R), n))
        return std::string("identity unexpectedly passes reversal");
    return std::nullopt;
}

// ---- final-lemma ----------------------------------------------------------

Witness check_final_lemma_entry(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    SurfaceClass C = SurfaceClass::divisor(R, ctx.curve_index);
    if (!check_final_lemma(C, n)) {
        FockState cls = lagrangian_plane_class(C, n);
        FockState img = theta_action(spherical_twist_action(R), cls);
        return two_sided("n = " + std::to_string(n), img.to_string(),
                         cls.to_string());
    }
    return std::nullopt;
}

// ---- bfield ----------------------------------------------------------------

Witness check_bfield(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    IsometrySampler sampler(R, mix_seed(ctx.seed, "bfield", n));
    H2Vector zero(R, n);
    if (!b_field(zero).is_identity())
        return std::string("B_0 is not the identity");
    for (int trial = 0; trial < 6; ++trial) {
        H2Vector l = sampler.next_h2(n);
        H2Vector m = sampler.next_h2(n);
        HTildeIsometry bl = b_field(l);
        if (!bl.preserves_pairing())
            return std::string("B_lambda is not an isometry at lambda = ") +
                   l.to_string();
        if (!(bl * b_field(m) == b_field(l + m)))
            return std::string("B_l B_m != B_{l+m} at l = ") + l.to_string() +
                   ", m = " + m.to_string();
        if (!(bl * b_field(l * Rat(-1))).is_identity())
            return std::string("B_l B_{-l} != 1 at l = ") + l.to_string();
    }
    return std::nullopt;
}

// ---- lemma2-6 ----------------------------------------------------------------

Witness check_lemma26(const Ctx& ctx, int n) {
    const RingPtr& R = ctx.ring;
    IsometrySampler sampler(R, mix_seed(ctx.seed, "lemma2-6", n));
    for (int trial = 0; trial < 6; ++trial) {
        SurfaceEndo phi = sampler.next();
        HTildeIsometry emb = iota(phi, n);
        if (!emb.preserves_pairing())
            return std::string("iota(phi) is not an isometry (trial ") +
                   std::to_string(trial) + ")";
        HTildeIsometry ind = htilde_of_induced(phi, n);
        if (!ind.preserves_pairing())
            return std::string("htilde_of_induced(phi) is not an isometry "
                               "(trial ") +
                   std::to_string(trial) + ")";
        SurfaceEndo psi = sampler.next();
        if (!(htilde_of_induced(phi * psi, n) ==
              htilde_of_induced(phi, n) * htilde_of_induced(psi, n)))
            return std::string("htilde_of_induced is not multiplicative "
                               "(trial ") +
                   std::to_string(trial) + ")";
    }
    if (!iota(SurfaceEndo::identity(R), n).is_identity())
        return std::string("iota(id) != id");
    // the induced spherical twist squares to the identity for both parities
    // of n (the det sign squares away)
    HTildeIsometry st = htilde_of_induced(spherical_twist_action(R), n);
    if (!(st * st).is_identity())
        return std::string("htilde_of_induced(F^H)^2 != 1 at n = ") +
               std::to_string(n);
    return std::nullopt;
}

// ---- registry ----------------------------------------------------------------

using CheckFn = std::function<Witness(const Ctx&, int)>;

struct Entry {
    CheckInfo info;
    CheckFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"norm", "line_norm(n) = -(n+3)/2", false, 2, 1000}, check_norm},
        {{"dual", "curve_dual inverts the BBF contraction; L = theta(C) - delta/2",
          false, 2, 1000},
         check_dual},
        {{"st-sl2",
          "Lefschetz sl2 relations and the spherical-twist conjugation identity",
          true, 1, 1 << 20},
         check_st_sl2},
        {{"localization", "ch_g formula vs brute-force trace oracle", false, 1,
          5},
         check_localization},
        {{"key-helper", "W^k(L) chi = (L^box,1) W^{n-k}(L^dual) per cycle type",
          false, 2, 4},
         check_key_helper},
        {{"koszul", "equivariant Koszul alternating sums and their chi-twists",
          false, 1, 4},
         check_koszul},
        {{"odd-shift", "(O[-1]^box,1) = (O^box,-1)[-n] at character level",
          false, 1, 4},
         check_odd_shift},
        {{"invariants", "invariant-part ch via averaged trace characters",
          false, 1, 8},
         check_invariants},
        {{"induced-hom", "functoriality of the induced orbifold action",
          false, 1, 4},
         check_induced_hom},
        {{"theta-hom", "Theta_n is a homomorphism; det(-1) decomposition",
          false, 1, 5},
         check_theta_hom},
        {{"degree-reversal", "Theta_n(F^H) reverses degrees around 2n",
          false, 1, 6},
         check_degree_reversal_entry},
        {{"final-lemma", "Theta_n(F^H) fixes the class of C^[n]", false, 1, 8},
         check_final_lemma_entry},
        {{"bfield", "B-field exponential law and isometry", false, 2, 1000},
         check_bfield},
        {{"lemma2-6",
          "htilde of induced maps: isometry, multiplicativity, involution",
          false, 2, 1000},
         check_lemma26},
    };
    return entries;
}

} // namespace

RingPtr CheckConfig::make_validated_ring() const {
    RingPtr ring = make_ring(lattice.labels, lattice.gram);
    if (lattice.curve_index < 0 || lattice.curve_index >= ring->rank())
        throw std::invalid_argument("config: curve index out of range");
    if (ring->gram_at(lattice.curve_index, lattice.curve_index) != -2)
        throw std::invalid_argument(
            "config: distinguished curve must have self-intersection -2");
    return ring;
}

const std::vector<CheckInfo>& list_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool CheckReport::all_pass() const {
    for (const auto& r : results)
        if (r.status != "pass") return false;
    return true;
}

int CheckReport::exit_code() const { return all_pass() ? 0 : 1; }

CheckReport run_checks(const CheckConfig& cfg) {
    RingPtr ring = cfg.make_validated_ring();
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("config: bad n range");

    std::vector<const Entry*> selected;
    if (cfg.checks.empty()) {
        for (const auto& e : registry()) selected.push_back(&e);
    } else {
        for (const auto& name : cfg.checks) {
            const Entry* found = nullptr;
            for (const auto& e : registry())
                if (e.info.name == name) found = &e;
            if (!found)
                throw std::invalid_argument("config: unknown check '" + name + "'");
            selected.push_back(found);
        }
    }

    CheckReport report;
    for (const Entry* e : selected) {
        CheckResult r;
        r.name = e->info.name;
        r.seed = cfg.seed;
        const auto t0 = std::chrono::steady_clock::now();
        const int lo = std::max(cfg.n_min, e->info.min_n);
        const int hi = std::min(cfg.n_max, e->info.max_n);
        if (e->info.n_independent) {
            r.n_min = r.n_max = cfg.n_min;
            try {
                Ctx ctx{ring, cfg.lattice.curve_index, cfg.seed};
                if (auto w = e->fn(ctx, cfg.n_min)) {
                    r.status = "fail";
                    r.witness = *w;
                } else {
                    r.status = "pass";
                }
            } catch (const std::exception& ex) {
                r.status = "error";
                r.witness = ex.what();
            }
        } else if (lo > hi) {
            r.n_min = cfg.n_min;
            r.n_max = cfg.n_max;
            r.status = "error";
            r.witness = "requested n range [" + std::to_string(cfg.n_min) + "," +
                        std::to_string(cfg.n_max) +
                        "] lies outside the feasible range [" +
                        std::to_string(e->info.min_n) + "," +
                        std::to_string(e->info.max_n) + "]";
        } else {
            r.n_min = lo;
            r.n_max = hi;
            r.status = "pass";
            for (int n = lo; n <= hi && r.status == "pass"; ++n) {
                try {
                    Ctx ctx{ring, cfg.lattice.curve_index, cfg.seed};
                    if (auto w = e->fn(ctx, n)) {
                        r.status = "fail";
                        r.witness = "n = " + std::to_string(n) + ": " + *w;
                    }
                } catch (const std::exception& ex) {
                    r.status = "error";
                    r.witness = "n = " + std::to_string(n) + ": " + ex.what();
                }
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.wall_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        report.results.push_back(std::move(r));
    }
    return report;
}

CheckConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                    ex.what());
    }
    CheckConfig cfg;
    if (!j.contains("lattice") || !j["lattice"].is_object())
        throw std::invalid_argument("config: missing 'lattice' object");
    const auto& lat = j["lattice"];
    if (!lat.contains("labels") || !lat.contains("gram"))
        throw std::invalid_argument("config: lattice needs 'labels' and 'gram'");
    cfg.lattice.labels = lat["labels"].get<std::vector<std::string>>();
    cfg.lattice.gram =
        lat["gram"].get<std::vector<std::vector<long long>>>();
    cfg.lattice.curve_index = lat.value("curve", 0);
    cfg.n_min = j.value("n_min", 2);
    cfg.n_max = j.value("n_max", 6);
    cfg.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("checks"))
        cfg.checks = j["checks"].get<std::vector<std::string>>();
    return cfg;
}

std::string config_to_json(const CheckConfig& cfg) {
    json j;
    j["lattice"]["labels"] = cfg.lattice.labels;
    j["lattice"]["gram"] = cfg.lattice.gram;
    j["lattice"]["curve"] = cfg.lattice.curve_index;
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    j["seed"] = cfg.seed;
    if (!cfg.checks.empty()) j["checks"] = cfg.checks;
    return j.dump(2);
}

std::string report_to_json(const CheckReport& report, const CheckConfig& cfg) {
    json j;
    j["schema_version"] = 1;
    j["lattice"]["labels"] = cfg.lattice.labels;
    j["lattice"]["gram"] = cfg.lattice.gram;
    j["lattice"]["curve"] = cfg.lattice.curve_index;
    j["seed"] = cfg.seed;
    j["checks"] = json::array();
    int pass = 0, fail = 0, error = 0;
    for (const auto& r : report.results) {
        json c;
        c["name"] = r.name;
        c["n_min"] = r.n_min;
        c["n_max"] = r.n_max;
        c["status"] = r.status;
        if (r.status == "pass") c["witness"] = nullptr;
        else c["witness"] = r.witness;
        j["checks"].push_back(c);
        if (r.status == "pass") ++pass;
        else if (r.status == "fail") ++fail;
        else ++error;
    }
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"error", error}};
    return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& report) {
    std::ostringstream os;
    for (const auto& r : report.results) {
        os << (r.status == "pass" ? "PASS " : r.status == "fail" ? "FAIL " : "ERROR")
           << "  " << r.name << "  n=[" << r.n_min << "," << r.n_max << "]"
           << "  (" << r.wall_ms << " ms)";
        if (!r.witness.empty()) os << "\n      " << r.witness;
        os << "\n";
    }
    int pass = 0;
    for (const auto& r : report.results) pass += r.status == "pass";
    os << pass << "/" << report.results.size() << " checks passed\n";
    return os.str();
}

std::string checks_to_json() {
    json j = json::array();
    for (const auto& info : list_checks()) {
        json c;
        c["name"] = info.name;
        c["description"] = info.description;
        if (info.n_independent) {
            c["n_bound"] = nullptr;
        } else {
            c["n_bound"] = {{"min", info.min_n}, {"max", info.max_n}};
        }
        j.push_back(c);
    }
    return j.dump(2) + "\n";
}

std::string checks_to_text() {
    std::ostringstream os;
    for (const auto& info : list_checks()) {
        os << info.name;
        if (info.n_independent) os << "  (n-independent)";
        else os << "  (n <= " << info.max_n << ")";
        os << "\n      " << info.description << "\n";
    }
    return os.str();
}

} // namespace hilbcoh

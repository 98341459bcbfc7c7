#include "hilbcoh/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbcoh {

SurfaceClass CellSpace::k_class() const {
    SurfaceClass x(ring);
    for (const auto& c : cells) {
        SurfaceClass e = SurfaceClass::basis(ring, c.basis_index);
        x = c.degree % 2 == 0 ? x + e : x - e;
    }
    return x;
}

bool CellSpace::distinct_basis() const {
    std::vector<int> idx;
    for (const auto& c : cells) idx.push_back(c.basis_index);
    std::sort(idx.begin(), idx.end());
    return std::adjacent_find(idx.begin(), idx.end()) == idx.end();
}

ExplicitGModule::ExplicitGModule(CellSpace space, int n, bool chi_twisted)
    : space_(std::move(space)), n_(n), chi_twisted_(chi_twisted) {
    if (n_ < 0) throw std::invalid_argument("ExplicitGModule: n < 0");
    if (space_.cells.empty())
        throw std::invalid_argument("ExplicitGModule: empty cell space");
    words_ = 1;
    for (int i = 0; i < n_; ++i) {
        words_ *= space_.cells.size();
        if (words_ > (1u << 22))
            throw std::invalid_argument("ExplicitGModule: module too large");
    }
    gens_.reserve(std::max(0, n_ - 1));
    for (int i = 0; i + 1 < n_; ++i) {
        SignedPerm sp;
        sp.img.resize(words_);
        sp.sign.resize(words_);
        for (std::size_t w = 0; w < words_; ++w) {
            std::vector<int> word = decode(w);
            const int a = word[i], b = word[i + 1];
            std::swap(word[i], word[i + 1]);
            int s = (space_.cells[a].degree * space_.cells[b].degree) % 2 == 0
                        ? 1
                        : -1;
            if (chi_twisted_) s = -s;
            sp.img[w] = static_cast<std::uint32_t>(encode(word));
            sp.sign[w] = static_cast<std::int8_t>(s);
        }
        gens_.push_back(std::move(sp));
    }
    if (n_ <= 5) check_relations();
}

std::size_t ExplicitGModule::encode(const std::vector<int>& word) const {
    std::size_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i)
        idx = idx * space_.cells.size() + static_cast<std::size_t>(word[i]);
    return idx;
}

std::vector<int> ExplicitGModule::decode(std::size_t index) const {
    std::vector<int> word(n_);
    for (int i = 0; i < n_; ++i) {
        word[i] = static_cast<int>(index % space_.cells.size());
        index /= space_.cells.size();
    }
    return word;
}

ExplicitGModule::SignedPerm ExplicitGModule::identity_perm() const {
    SignedPerm sp;
    sp.img.resize(words_);
    sp.sign.assign(words_, 1);
    for (std::size_t w = 0; w < words_; ++w)
        sp.img[w] = static_cast<std::uint32_t>(w);
    return sp;
}

ExplicitGModule::SignedPerm
ExplicitGModule::compose(const SignedPerm& f, const SignedPerm& g) const {
    // matrix product: (f o g) e_w = g.sign[w] * f.sign[g(w)] * e_{f(g(w))}
    SignedPerm r;
    r.img.resize(words_);
    r.sign.resize(words_);
    for (std::size_t w = 0; w < words_; ++w) {
        const std::uint32_t mid = g.img[w];
        r.img[w] = f.img[mid];
        r.sign[w] = static_cast<std::int8_t>(g.sign[w] * f.sign[mid]);
    }
    return r;
}

void ExplicitGModule::check_relations() const {
    auto is_identity = [&](const SignedPerm& sp) {
        for (std::size_t w = 0; w < words_; ++w)
            if (sp.img[w] != w || sp.sign[w] != 1) return false;
        return true;
    };
    const int g = static_cast<int>(gens_.size());
    for (int i = 0; i < g; ++i) {
        // the sign twist squares away, so the relations are the same
        if (!is_identity(compose(gens_[i], gens_[i])))
            throw std::logic_error("ExplicitGModule: s_i^2 != 1");
        if (i + 1 < g) {
            SignedPerm b = compose(gens_[i], gens_[i + 1]);
            if (!is_identity(compose(b, compose(b, b))))
                throw std::logic_error("ExplicitGModule: braid relation fails");
        }
        for (int j = i + 2; j < g; ++j) {
            SignedPerm ab = compose(gens_[i], gens_[j]);
            SignedPerm ba = compose(gens_[j], gens_[i]);
            if (!(ab.img == ba.img && ab.sign == ba.sign))
                throw std::logic_error("ExplicitGModule: commutation fails");
        }
    }
}

ExplicitGModule::SignedPerm
ExplicitGModule::matrix_of(const std::vector<int>& g) const {
    if (static_cast<int>(g.size()) != n_)
        throw std::invalid_argument("ExplicitGModule: permutation has wrong size");
    std::vector<bool> seen(n_, false);
    for (int x : g) {
        if (x < 0 || x >= n_ || seen[x])
            throw std::invalid_argument("ExplicitGModule: input is not a permutation");
        seen[x] = true;
    }
    // bubble-sort the one-line form; the recorded adjacent swaps compose to g
    std::vector<int> a = g;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < n_; ++i)
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                swaps.push_back(i);
                moved = true;
            }
    }
    // g . s_{i_1} ... s_{i_m} = id, so g = s_{i_m} ... s_{i_1}: compose the
    // recorded swaps with each next generator applied on the left
    SignedPerm m = identity_perm();
    for (int i : swaps) m = compose(gens_[i], m);
    return m;
}

std::map<CellContent, Rat>
ExplicitGModule::brute_force_trace(const std::vector<int>& g) const {
    SignedPerm m = matrix_of(g);
    std::map<CellContent, Rat> out;
    for (std::size_t w = 0; w < words_; ++w) {
        if (m.img[w] != w) continue;
        std::vector<int> word = decode(w);
        int total_degree = 0;
        for (int c : word) total_degree += space_.cells[c].degree;
        int val = m.sign[w] * (total_degree % 2 == 0 ? 1 : -1);
        CellContent content = word;
        std::sort(content.begin(), content.end());
        out[content] += val;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rat ExplicitGModule::total_trace(const std::vector<int>& g) const {
    Rat s(0);
    for (const auto& [content, v] : brute_force_trace(g)) s += v;
    return s;
}

std::vector<int> ExplicitGModule::permutation_of_type(const CycleType& t) {
    std::vector<int> g(t.n());
    int base = 0;
    for (int i = 0; i < t.length(); ++i) {
        const int k = t.part(i);
        for (int j = 0; j < k; ++j) g[base + j] = base + (j + 1) % k;
        base += k;
    }
    return g;
}

std::pair<std::vector<int>, int>
ExplicitGModule::act(const std::vector<int>& g,
                     const std::vector<int>& word) const {
    SignedPerm m = matrix_of(g);
    const std::size_t w = encode(word);
    return {decode(m.img[w]), m.sign[w]};
}

std::map<CellContent, Rat> bucket_formula(const CycleValue& value,
                                          const CellSpace& space,
                                          const CycleType& t) {
    if (!space.distinct_basis())
        throw std::invalid_argument(
            "bucket_formula: cells must have distinct basis indices");
    std::map<int, int> cell_of;
    for (size_t c = 0; c < space.cells.size(); ++c)
        cell_of[space.cells[c].basis_index] = static_cast<int>(c);
    const RingPtr& R = space.ring;
    std::map<CellContent, Rat> out;
    for (const auto& [key, coeff] : value.coeff()) {
        CellContent content;
        Rat weight(1);
        for (int s = 0; s < t.length(); ++s) {
            const int b = slot_get(key, s);
            auto it = cell_of.find(b);
            if (it == cell_of.end())
                throw std::invalid_argument(
                    "bucket_formula: basis element not represented by a cell");
            // a cycle of length k occupies k tensor positions
            for (int rep = 0; rep < t.part(s); ++rep)
                content.push_back(it->second);
            weight *= rat_pow(Rat(t.part(s)), R->complex_degree(b));
        }
        std::sort(content.begin(), content.end());
        out[content] += coeff / weight;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rat total_formula(const CycleValue& value, const CycleType& t) {
    const RingPtr& R = value.ring();
    Rat out(0);
    for (const auto& [key, coeff] : value.coeff()) {
        Rat weight(1);
        for (int s = 0; s < t.length(); ++s)
            weight *= rat_pow(Rat(t.part(s)),
                              R->complex_degree(slot_get(key, s)));
        out += coeff / weight;
    }
    return out;
}

} // namespace hilbcoh

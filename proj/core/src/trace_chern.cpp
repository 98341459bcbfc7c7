#include "hilbcoh/trace_chern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilbcoh {

CycleValue CycleValue::scalar(RingPtr ring, CycleType type, Rat value) {
    if (type.length() != 0)
        throw std::invalid_argument("CycleValue::scalar: nonempty cycle type");
    CycleValue v(std::move(ring), std::move(type));
    v.add_term(0, value);
    return v;
}

CycleValue CycleValue::decomposable(const RingPtr& ring, const CycleType& type,
                                    const std::vector<SurfaceClass>& slots) {
    if (static_cast<int>(slots.size()) != type.length())
        throw std::invalid_argument("CycleValue::decomposable: slot count mismatch");
    CycleValue v(ring, type);
    std::map<SlotKey, Rat> acc{{SlotKey(0), Rat(1)}};
    for (int s = 0; s < type.length(); ++s) {
        std::map<SlotKey, Rat> next;
        for (const auto& [key, c] : acc)
            for (int b = 0; b < ring->dim(); ++b) {
                Rat cb = slots[s].coeff(b);
                if (cb == 0) continue;
                next[slot_set(key, s, b)] += c * cb;
            }
        acc = std::move(next);
    }
    for (auto& [key, c] : acc)
        if (c != 0) v.coeff_[key] = std::move(c);
    return v;
}

void CycleValue::add_term(SlotKey key, const Rat& c) {
    if (c == 0) return;
    auto it = coeff_.find(key);
    if (it == coeff_.end()) {
        coeff_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

CycleValue& CycleValue::operator+=(const CycleValue& o) {
    if (!(type_ == o.type_))
        throw std::invalid_argument("CycleValue::+=: cycle type mismatch");
    for (const auto& [key, c] : o.coeff_) add_term(key, c);
    return *this;
}

CycleValue& CycleValue::operator*=(const Rat& s) {
    if (s == 0) {
        coeff_.clear();
        return *this;
    }
    for (auto& [key, c] : coeff_) c *= s;
    return *this;
}

CycleValue CycleValue::operator*(const Rat& s) const {
    CycleValue v = *this;
    v *= s;
    return v;
}

CycleValue CycleValue::slotwise_cup(const CycleValue& o) const {
    if (!(type_ == o.type_))
        throw std::invalid_argument("CycleValue::slotwise_cup: cycle type mismatch");
    CycleValue out(ring_, type_);
    const int l = type_.length();
    for (const auto& [ka, ca] : coeff_)
        for (const auto& [kb, cb] : o.coeff_) {
            Rat c = ca * cb;
            SlotKey key = 0;
            bool dead = false;
            for (int s = 0; s < l && !dead; ++s) {
                auto pr = ring_->cup_basis(slot_get(ka, s), slot_get(kb, s));
                if (pr.basis < 0 || pr.coeff == 0) {
                    dead = true;
                    break;
                }
                c *= pr.coeff;
                key = slot_set(key, s, pr.basis);
            }
            if (!dead) out.add_term(key, c);
        }
    return out;
}

CycleValue CycleValue::apply_slotwise(const std::vector<SurfaceEndo>& maps) const {
    const int l = type_.length();
    if (static_cast<int>(maps.size()) != l)
        throw std::invalid_argument("CycleValue::apply_slotwise: map count mismatch");
    CycleValue out(ring_, type_);
    for (const auto& [key, c] : coeff_) {
        std::map<SlotKey, Rat> acc{{SlotKey(0), c}};
        for (int s = 0; s < l; ++s) {
            const int b = slot_get(key, s);
            std::map<SlotKey, Rat> next;
            for (int i = 0; i < ring_->dim(); ++i) {
                const Rat& m = maps[s].matrix().at(i, b);
                if (m == 0) continue;
                for (const auto& [k2, c2] : acc) next[slot_set(k2, s, i)] += c2 * m;
            }
            acc = std::move(next);
        }
        for (const auto& [k2, c2] : acc) out.add_term(k2, c2);
    }
    return out;
}

std::map<SlotKey, Rat> CycleValue::canonical() const {
    // sort basis indices within each run of equal parts
    std::map<SlotKey, Rat> out;
    const auto& parts = type_.parts();
    for (const auto& [key, c] : coeff_) {
        std::vector<int> idx(parts.size());
        for (size_t s = 0; s < parts.size(); ++s) idx[s] = slot_get(key, s);
        size_t start = 0;
        while (start < parts.size()) {
            size_t end = start;
            while (end < parts.size() && parts[end] == parts[start]) ++end;
            std::sort(idx.begin() + start, idx.begin() + end);
            start = end;
        }
        SlotKey ck = 0;
        for (size_t s = 0; s < parts.size(); ++s) ck = slot_set(ck, static_cast<int>(s), idx[s]);
        auto it = out.find(ck);
        if (it == out.end()) out.emplace(ck, c);
        else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

bool CycleValue::operator==(const CycleValue& o) const {
    if (!(type_ == o.type_)) return false;
    return canonical() == o.canonical();
}

std::string CycleValue::to_string() const {
    std::ostringstream os;
    const auto canon = canonical();
    if (canon.empty()) return "0";
    bool first = true;
    for (const auto& [key, c] : canon) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat ac = abs(c);
        if (ac != 1) os << ac << "*";
        if (type_.length() == 0) {
            if (ac == 1) os << "1";
        } else {
            os << "[";
            for (int s = 0; s < type_.length(); ++s)
                os << (s ? " (x) " : "") << ring_->basis_label(slot_get(key, s));
            os << "]";
        }
        first = false;
    }
    return os.str();
}

const CycleValue& TraceChern::at(const CycleType& t) const {
    auto it = comp_.find(t);
    if (it == comp_.end())
        throw std::invalid_argument("TraceChern: no component for cycle type " +
                                    t.to_string());
    return it->second;
}

void TraceChern::set(CycleType t, CycleValue v) {
    if (t.n() != n_)
        throw std::invalid_argument("TraceChern::set: cycle type has wrong n");
    comp_[std::move(t)] = std::move(v);
}

TraceChern& TraceChern::operator+=(const TraceChern& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("TraceChern::+=: ambient mismatch");
    for (const auto& [t, v] : o.comp_) {
        auto it = comp_.find(t);
        if (it == comp_.end()) comp_.emplace(t, v);
        else it->second += v;
    }
    return *this;
}

TraceChern TraceChern::operator*(const Rat& s) const {
    TraceChern r = *this;
    for (auto& [t, v] : r.comp_) v *= s;
    return r;
}

bool TraceChern::operator==(const TraceChern& o) const {
    if (n_ != o.n_) return false;
    // compare over the union of stored cycle types
    for (const auto& [t, v] : comp_) {
        auto it = o.comp_.find(t);
        if (it == o.comp_.end()) {
            if (!v.is_zero()) return false;
        } else if (!(v == it->second)) {
            return false;
        }
    }
    for (const auto& [t, v] : o.comp_)
        if (comp_.find(t) == comp_.end() && !v.is_zero()) return false;
    return true;
}

std::string TraceChern::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, v] : comp_) {
        if (!first) os << "; ";
        os << t.to_string() << ": " << v.to_string();
        first = false;
    }
    return os.str();
}

} // namespace hilbcoh

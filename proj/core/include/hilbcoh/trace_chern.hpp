#pragma once

#include "hilbcoh/partitions.hpp"
#include "hilbcoh/surface.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hilbcoh {

// A basis multi-index on S^l, one graded-basis index per tensor slot,
// packed 8 bits per slot (slot 0 in the low byte). l <= 8 throughout.
using SlotKey = std::uint64_t;

inline int slot_get(SlotKey k, int slot) {
    return static_cast<int>((k >> (8 * slot)) & 0xFF);
}
inline SlotKey slot_set(SlotKey k, int slot, int basis) {
    const SlotKey mask = SlotKey(0xFF) << (8 * slot);
    return (k & ~mask) | (SlotKey(basis) << (8 * slot));
}

// A class on S^l attached to one cycle type, in full tensor coordinates.
// Slots are ordered like the parts (weakly decreasing); every value built by
// the evaluators is invariant under permuting slots of equal part length.
class CycleValue {
  public:
    CycleValue() = default;
    CycleValue(RingPtr ring, CycleType type)
        : ring_(std::move(ring)), type_(std::move(type)) {}

    static CycleValue scalar(RingPtr ring, CycleType type, Rat value);
    // decomposable tensor with the given class in each slot
    static CycleValue decomposable(const RingPtr& ring, const CycleType& type,
                                   const std::vector<SurfaceClass>& slots);

    const RingPtr& ring() const { return ring_; }
    const CycleType& type() const { return type_; }
    const std::map<SlotKey, Rat>& coeff() const { return coeff_; }

    void add_term(SlotKey key, const Rat& c);
    CycleValue& operator+=(const CycleValue& o);
    CycleValue& operator*=(const Rat& s);
    CycleValue operator*(const Rat& s) const;

    // slotwise cup product (same cycle type)
    CycleValue slotwise_cup(const CycleValue& o) const;
    // apply one endomorphism per slot
    CycleValue apply_slotwise(const std::vector<SurfaceEndo>& maps) const;

    bool is_zero() const { return coeff_.empty(); }

    // coordinates after projecting to the equal-part symmetrization: keys
    // are sorted within runs of equal parts, coefficients summed over orbits
    std::map<SlotKey, Rat> canonical() const;
    // equality up to symmetrization over slots of equal part length
    bool operator==(const CycleValue& o) const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    CycleType type_;
    std::map<SlotKey, Rat> coeff_; // zero coefficients are pruned
};

// A cycle-type-indexed family of classes on powers of S: an element of the
// orbifold cohomology H*_{S_n}(S^n) (also the value type of ch^G and v^G).
class TraceChern {
  public:
    TraceChern() = default;
    TraceChern(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) {}

    const RingPtr& ring() const { return ring_; }
    int n() const { return n_; }

    const std::map<CycleType, CycleValue>& components() const { return comp_; }
    const CycleValue& at(const CycleType& t) const;
    void set(CycleType t, CycleValue v);

    TraceChern& operator+=(const TraceChern& o);
    TraceChern operator*(const Rat& s) const;
    bool operator==(const TraceChern& o) const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    int n_ = 0;
    std::map<CycleType, CycleValue> comp_;
};

} // namespace hilbcoh

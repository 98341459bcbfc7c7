#pragma once

#include "hilbcoh/surface.hpp"

namespace hilbcoh::testutil {

// S with a single (-2)-curve C: the lattice of the paper's specialization
inline RingPtr rank1() { return make_ring({"C"}, {{-2}}); }

// two (-2)-classes meeting once
inline RingPtr rank2() { return make_ring({"C", "E"}, {{-2, 1}, {1, -2}}); }

// A_3-type chain
inline RingPtr rank3() {
    return make_ring({"C", "E", "F"}, {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
}

} // namespace hilbcoh::testutil

#pragma once

#include "foxcalc/group_ring.hpp"

#include <string>
#include <vector>

namespace fox::test {

inline Ring ring_ab(CoeffRing coeff = CoeffRing::Rational) { return Ring{Alphabet::named({"a", "b"}), coeff}; }

inline Ring free_ring(int rank, CoeffRing coeff = CoeffRing::Rational) {
    return Ring{Alphabet::standard(rank), coeff};
}

inline RingElem E(const Ring& ring, const std::string& text) { return ring.parse(text); }
inline Word W(const Ring& ring, const std::string& text) { return ring.parse_word(text); }

}  // namespace fox::test

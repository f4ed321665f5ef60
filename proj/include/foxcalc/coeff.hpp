#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fox {

enum class CoeffRing { Rational, Integer, Mod2 };

using Scalar = mpq_class;

std::string_view coeff_tag(CoeffRing ring);  // "Q", "Z", "F2"
CoeffRing parse_coeff_ring(std::string_view tag);
bool is_field(CoeffRing ring);

// Maps a rational into the ring's canonical representatives. Z rejects
// non-integers; F2 reduces to {0,1} and rejects even denominators.
Scalar normalize(CoeffRing ring, const Scalar& value);

std::string format_scalar(const Scalar& value);

}  // namespace fox

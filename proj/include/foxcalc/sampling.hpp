#pragma once

#include "foxcalc/group_ring.hpp"

#include <cstdint>
#include <random>

namespace fox {

// Seeded sample stream. mt19937_64 output is fixed by the standard; bounded
// draws use our own rejection step so streams agree across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n);             // uniform in [0, n)
    std::int64_t range(std::int64_t lo, std::int64_t hi);  // inclusive

    // Reduced word with length uniform in [0, max_len].
    Word free_word(int rank, int max_len);
    // Exponent vector with entries in [-max_abs, max_abs].
    Word abelian_word(int rank, int max_abs);
    Word word(const Ring& ring, int max_len);

    // 1..max_terms terms, coefficients in [-max_coeff, max_coeff] \ {0}.
    RingElem ring_elem(const Ring& ring, int max_terms, int max_len, int max_coeff = 3);

private:
    std::mt19937_64 engine_;
};

}  // namespace fox

#include "foxcalc/sampling.hpp"

#include "foxcalc/errors.hpp"

namespace fox {

std::uint64_t Sampler::below(std::uint64_t n) {
    if (n == 0) throw DomainError("empty sampling range");
    const std::uint64_t limit = engine_.max() - engine_.max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::int64_t Sampler::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Word Sampler::free_word(int rank, int max_len) {
    const auto len = static_cast<std::size_t>(range(0, max_len));
    std::vector<std::int64_t> letters;
    while (letters.size() < len) {
        const auto gen = range(1, rank);
        const std::int64_t l = below(2) ? gen : -gen;
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return reduce(letters);
}

Word Sampler::abelian_word(int rank, int max_abs) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = range(-max_abs, max_abs);
    return Word::from_exponents(std::move(e));
}

Word Sampler::word(const Ring& ring, int max_len) {
    return ring.abelian() ? abelian_word(ring.rank(), max_len) : free_word(ring.rank(), max_len);
}

RingElem Sampler::ring_elem(const Ring& ring, int max_terms, int max_len, int max_coeff) {
    RingElem x = ring.zero();
    const auto terms = range(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
        std::int64_t c = range(1, max_coeff);
        if (below(2)) c = -c;
        x.add_term(word(ring, max_len), c);
    }
    return x;
}

}  // namespace fox

#pragma once

#include "foxcalc/coeff.hpp"
#include "foxcalc/words.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace fox {

class RingElem;

// A group ring K[G]: the alphabet fixes G (free or Z^n), `coeff` fixes K.
struct Ring {
    AlphabetPtr alphabet;
    CoeffRing coeff = CoeffRing::Rational;

    int rank() const { return alphabet->rank(); }
    bool abelian() const { return alphabet->abelian(); }
    Word identity() const { return Word::identity(rank(), abelian()); }
    Word gen_word(int gen, int sign = 1) const;  // 0-based

    RingElem zero() const;
    RingElem one() const;
    RingElem word(const Word& w, const Scalar& c = 1) const;
    RingElem gen(int g, int sign = 1) const;
    RingElem parse(std::string_view text) const;
    Word parse_word(std::string_view text) const;
    std::string print(const Word& w) const;

    bool operator==(const Ring& other) const;
};

class RingElem {
public:
    using Terms = std::map<Word, Scalar>;

    explicit RingElem(Ring ring);

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;
    std::int64_t max_length() const;  // -1 for zero

    // Adds c·w in place.
    void add_term(const Word& w, const Scalar& c);

    RingElem& operator+=(const RingElem& y);
    RingElem& operator-=(const RingElem& y);
    friend RingElem operator+(RingElem x, const RingElem& y) { return x += y; }
    friend RingElem operator-(RingElem x, const RingElem& y) { return x -= y; }
    RingElem operator-() const;
    friend RingElem operator*(const RingElem& x, const RingElem& y);
    friend bool operator==(const RingElem& x, const RingElem& y);

    RingElem scale(const Scalar& k) const;
    Scalar augment() const;
    RingElem involute() const;
    // Linear extension of a map on group elements.
    RingElem map_words(const std::function<Word(const Word&)>& f) const;

    std::string str() const;

private:
    void require_compatible(const RingElem& y) const;
    Ring ring_;
    Terms terms_;
};

inline RingElem scale(const Scalar& k, const RingElem& x) { return x.scale(k); }
inline Scalar augment(const RingElem& x) { return x.augment(); }
inline RingElem involute(const RingElem& x) { return x.involute(); }

RingElem parse_ring_elem(std::string_view text, const Ring& ring);

}  // namespace fox

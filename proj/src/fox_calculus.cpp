#include "foxcalc/fox_calculus.hpp"

#include "foxcalc/errors.hpp"
#include "foxcalc/sampling.hpp"

namespace fox {

namespace {

void require_free(const Ring& ring) {
    if (ring.abelian()) throw DomainError("Fox derivatives need the free regime; use laurent_derivation for Z^n");
}

}  // namespace

std::string_view side_name(Side side) { return side == Side::Left ? "left" : "right"; }

RingElem left_fox_derivative(const Ring& ring, const Word& w, int gen) {
    require_free(ring);
    RingElem out = ring.zero();
    const auto letters = w.letters();
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p] == gen + 1) out.add_term(w.prefix(p), 1);
        if (letters[p] == -(gen + 1)) out.add_term(w.prefix(p + 1), -1);
    }
    return out;
}

RingElem right_fox_derivative(const Ring& ring, const Word& w, int gen) {
    require_free(ring);
    RingElem out = ring.zero();
    const auto letters = w.letters();
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p] == gen + 1) out.add_term(w.suffix(p + 1), 1);
        if (letters[p] == -(gen + 1)) out.add_term(w.suffix(p), -1);
    }
    return out;
}

RingElem left_fox_derivative(const RingElem& x, int gen) {
    RingElem out = x.ring().zero();
    for (const auto& [w, c] : x.terms()) out += left_fox_derivative(x.ring(), w, gen).scale(c);
    return out;
}

RingElem right_fox_derivative(const RingElem& x, int gen) {
    RingElem out = x.ring().zero();
    for (const auto& [w, c] : x.terms()) out += right_fox_derivative(x.ring(), w, gen).scale(c);
    return out;
}

std::vector<RingElem> left_fox_gradient(const RingElem& x) {
    const Ring& ring = x.ring();
    require_free(ring);
    std::vector<RingElem> grad(static_cast<std::size_t>(ring.rank()), ring.zero());
    for (const auto& [w, c] : x.terms()) {
        const auto letters = w.letters();
        for (std::size_t p = 0; p < letters.size(); ++p) {
            const auto l = letters[p];
            auto& slot = grad[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
            if (l > 0)
                slot.add_term(w.prefix(p), c);
            else
                slot.add_term(w.prefix(p + 1), -c);
        }
    }
    return grad;
}

std::vector<RingElem> right_fox_gradient(const RingElem& x) {
    const Ring& ring = x.ring();
    require_free(ring);
    std::vector<RingElem> grad(static_cast<std::size_t>(ring.rank()), ring.zero());
    for (const auto& [w, c] : x.terms()) {
        const auto letters = w.letters();
        for (std::size_t p = 0; p < letters.size(); ++p) {
            const auto l = letters[p];
            auto& slot = grad[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
            if (l > 0)
                slot.add_term(w.suffix(p + 1), c);
            else
                slot.add_term(w.suffix(p), -c);
        }
    }
    return grad;
}

Derivation::Derivation(Side s, Ring r, std::vector<RingElem> values)
    : side(s), ring(std::move(r)), gen_values(std::move(values)) {
    require_free(ring);
    if (static_cast<int>(gen_values.size()) != ring.rank())
        throw MismatchError("derivation needs one value per generator");
    for (const auto& v : gen_values)
        if (!(v.ring() == ring)) throw MismatchError("derivation value over a different ring");
}

RingElem extend_derivation(const Derivation& d, const RingElem& x) {
    if (!(x.ring() == d.ring)) throw MismatchError("derivation and argument rings differ");
    RingElem out = d.ring.zero();
    if (d.side == Side::Left) {
        const auto grad = left_fox_gradient(x);
        for (std::size_t i = 0; i < grad.size(); ++i) out += grad[i] * d.gen_values[i];
    } else {
        const auto grad = right_fox_gradient(x);
        for (std::size_t j = 0; j < grad.size(); ++j) out += d.gen_values[j] * grad[j];
    }
    return out;
}

RingElem extend_derivation(const Derivation& d, const Word& w) {
    return extend_derivation(d, d.ring.word(w));
}

RingElem extend_derivation_recursive(const Derivation& d, const Word& w) {
    const Ring& ring = d.ring;
    RingElem acc = ring.zero();
    Word prefix;
    for (auto l : w.letters()) {
        const int gen = static_cast<int>((l > 0 ? l : -l) - 1);
        const Word letter = Word::generator(gen, l > 0 ? 1 : -1);
        const RingElem x = ring.word(letter);
        const RingElem& v = d.gen_values[static_cast<std::size_t>(gen)];
        if (d.side == Side::Left) {
            // D(x^-1) = -x^-1 D(x); D(p y) = D(p) + p D(y)
            const RingElem dy = l > 0 ? v : -(x * v);
            acc += ring.word(prefix) * dy;
        } else {
            // D(x^-1) = -D(x) x^-1; D(p y) = D(p) y + D(y)
            const RingElem dy = l > 0 ? v : -(v * x);
            acc = acc * x + dy;
        }
        prefix = prefix * letter;
    }
    return acc;
}

Derivation coboundary_derivation(const RingElem& c, Side side) {
    const Ring& ring = c.ring();
    std::vector<RingElem> values;
    for (int i = 0; i < ring.rank(); ++i) values.push_back(coboundary_value(c, side, ring.gen_word(i)));
    return Derivation(side, ring, std::move(values));
}

RingElem coboundary_value(const RingElem& c, Side side, const Word& g) {
    const RingElem one_minus_g = c.ring().one() - c.ring().word(g);
    return side == Side::Left ? one_minus_g * c : c * one_minus_g;
}

CheckReport check_derivation_law(Side side, const Ring& ring, const WordMap& map, std::size_t samples,
                                 std::uint64_t seed, int max_len) {
    CheckReport report(std::string(side_name(side)) + "-derivation", samples, seed);
    if (!map(ring.identity()).is_zero()) report.fail("D(1)=" + map(ring.identity()).str());
    Sampler rng(seed);
    for (std::size_t s = 0; s < samples && report.passed; ++s) {
        const Word u = rng.word(ring, max_len);
        const Word v = rng.word(ring, max_len);
        const RingElem lhs = map(u * v);
        const RingElem rhs = side == Side::Left ? map(u) + ring.word(u) * map(v) : map(u) * ring.word(v) + map(v);
        if (!(lhs == rhs))
            report.fail("u=" + ring.print(u) + " v=" + ring.print(v) + " D(uv)=" + lhs.str() + " law=" + rhs.str());
    }
    return report;
}

CheckReport is_derivation(const Derivation& d, std::size_t samples, std::uint64_t seed, int max_len) {
    return check_derivation_law(
        d.side, d.ring, [&d](const Word& w) { return extend_derivation(d, w); }, samples, seed, max_len);
}

}  // namespace fox

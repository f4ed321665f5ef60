#include "foxcalc/higher_pairing.hpp"

#include "foxcalc/cohomology.hpp"
#include "foxcalc/errors.hpp"

namespace fox {

namespace {

Word monomial(const Ring& ring, int i, std::int64_t l) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(ring.rank()), 0);
    e[static_cast<std::size_t>(i)] = l;
    return Word::from_exponents(std::move(e));
}

void require_laurent(const Ring& ring) {
    if (!ring.abelian()) throw DomainError("Laurent derivations need the abelian regime");
}

void require_tuple(const Ring& ring, const MonomialTuple& a) {
    if (static_cast<int>(a.size()) != ring.rank())
        throw MismatchError("tuple length " + std::to_string(a.size()) + " differs from n = " +
                            std::to_string(ring.rank()));
    for (const auto& w : a)
        if (!w.abelian() || static_cast<int>(w.exponents().size()) != ring.rank())
            throw MismatchError("tuple entry is not a monomial of Z^" + std::to_string(ring.rank()));
}

std::int64_t exp_of(const Word& w, int k) { return w.exponents()[static_cast<std::size_t>(k)]; }

}  // namespace

Ring laurent_ring(int n, CoeffRing coeff) { return Ring{Alphabet::standard(n, true), coeff}; }

RingElem divided_difference(const Ring& ring, int i, std::int64_t l) {
    require_laurent(ring);
    RingElem out = ring.zero();
    if (l >= 0) {
        for (std::int64_t k = 0; k < l; ++k) out.add_term(monomial(ring, i, k), 1);
    } else {
        for (std::int64_t k = 1; k <= -l; ++k) out.add_term(monomial(ring, i, -k), -1);
    }
    return out;
}

RingElem laurent_derivation(const Ring& ring, int i, const Word& w) {
    require_laurent(ring);
    if (i < 0 || i >= ring.rank()) throw DomainError("derivation index out of range");
    return divided_difference(ring, i, exp_of(w, i));
}

RingElem laurent_derivation(int i, const RingElem& x) {
    RingElem out = x.ring().zero();
    for (const auto& [w, c] : x.terms()) out += laurent_derivation(x.ring(), i, w).scale(c);
    return out;
}

RingElem higher_eta_Zn(const Ring& ring, const MonomialTuple& a, const MonomialTuple& b) {
    require_laurent(ring);
    require_tuple(ring, a);
    require_tuple(ring, b);
    const int n = ring.rank();
    RingElem out = ring.one();
    for (int k = 0; k < n; ++k) {
        std::int64_t shift_a = 0, shift_b = 0;
        for (int l = 0; l < k; ++l) shift_a += exp_of(a[static_cast<std::size_t>(l)], k);
        for (int l = k + 1; l < n; ++l) shift_b += exp_of(b[static_cast<std::size_t>(l)], k);
        out = out * ring.word(monomial(ring, k, shift_a)) *
              divided_difference(ring, k, exp_of(a[static_cast<std::size_t>(k)], k)) *
              divided_difference(ring, k, exp_of(b[static_cast<std::size_t>(k)], k)) *
              ring.word(monomial(ring, k, shift_b));
        if (out.is_zero()) break;
    }
    return out;
}

RingElem printed_higher_eta_Zn(const Ring& ring, const MonomialTuple& a, const MonomialTuple& b) {
    require_laurent(ring);
    require_tuple(ring, a);
    require_tuple(ring, b);
    const int n = ring.rank();
    auto half = [&](const MonomialTuple& x) {
        RingElem out = ring.one();
        for (int k = 0; k < n; ++k) {
            std::int64_t tail = 0;
            for (int l = k + 1; l < n; ++l) tail += exp_of(x[static_cast<std::size_t>(l)], l);
            out = out * divided_difference(ring, k, exp_of(x[static_cast<std::size_t>(k)], k)) *
                  ring.word(monomial(ring, k, -tail));
        }
        return out;
    };
    return half(a) * half(b);
}

HigherPairing zn_higher_pairing(int n, CoeffRing coeff) {
    const Ring ring = laurent_ring(n, coeff);
    return HigherPairing{n, ring, [ring](const MonomialTuple& a, const MonomialTuple& b) {
                             return higher_eta_Zn(ring, a, b);
                         }};
}

HigherPairing printed_zn_higher_pairing(int n, CoeffRing coeff) {
    const Ring ring = laurent_ring(n, coeff);
    return HigherPairing{n, ring, [ring](const MonomialTuple& a, const MonomialTuple& b) {
                             return printed_higher_eta_Zn(ring, a, b);
                         }};
}

RingElem evaluate_multilinear(const HigherPairing& hp, const std::vector<RingElem>& a,
                              const std::vector<RingElem>& b) {
    if (static_cast<int>(a.size()) != hp.n || static_cast<int>(b.size()) != hp.n)
        throw MismatchError("tuple length differs from n");
    std::vector<RingElem> slots = a;
    slots.insert(slots.end(), b.begin(), b.end());
    RingElem out = hp.ring.zero();
    MonomialTuple words(slots.size());
    // Expand the product of sums slot by slot.
    std::function<void(std::size_t, const Scalar&)> expand = [&](std::size_t k, const Scalar& c) {
        if (k == slots.size()) {
            const MonomialTuple left(words.begin(), words.begin() + hp.n);
            const MonomialTuple right(words.begin() + hp.n, words.end());
            out += hp.eval(left, right).scale(c);
            return;
        }
        for (const auto& [w, d] : slots[k].terms()) {
            words[k] = w;
            expand(k + 1, c * d);
        }
    };
    expand(0, Scalar(1));
    return out;
}

CheckReport check_higher_cocycle(const HigherPairing& hp, Side slot, std::size_t samples, std::uint64_t seed,
                                 int max_abs) {
    const std::string name = std::string("higher-cocycle-") + (slot == Side::Left ? "left" : "right") + "-n" +
                             std::to_string(hp.n);
    CheckReport report(name, samples, seed);
    const GroupDesc group{GroupKind::Abelian, hp.ring};
    Sampler rng(seed);
    for (std::size_t s = 0; s < samples && report.passed; ++s) {
        MonomialTuple fixed;
        for (int k = 0; k < hp.n; ++k) fixed.push_back(rng.abelian_word(hp.n, max_abs));
        RingCochain c{hp.n, group, slot == Side::Left ? ModuleKind::LeftRegular : ModuleKind::RightRegular,
                      [&hp, fixed, slot](const std::vector<GroupElem>& x) {
                          MonomialTuple t;
                          for (const auto& g : x) t.push_back(g.first);
                          return slot == Side::Left ? hp.eval(t, fixed) : hp.eval(fixed, t);
                      }};
        const RingCochain dc = coboundary(c);
        std::vector<GroupElem> args;
        for (int k = 0; k <= hp.n; ++k) args.push_back(sample_group_elem(group, rng, max_abs));
        const RingElem value = dc(args);
        if (!value.is_zero()) {
            std::string where, other;
            for (const auto& g : args) where += (where.empty() ? "" : ",") + hp.ring.print(g.first);
            for (const auto& w : fixed) other += (other.empty() ? "" : ",") + hp.ring.print(w);
            report.fail("tuple=(" + where + ") fixed=(" + other + ") delta=" + value.str());
        }
    }
    return report;
}

}  // namespace fox

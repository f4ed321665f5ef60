#include "foxcalc/fox_pairing.hpp"

#include "foxcalc/errors.hpp"
#include "foxcalc/sampling.hpp"
#include "foxcalc/sparse_elimination.hpp"

#include <map>

namespace fox {

FoxPairing::FoxPairing(Ring ring, std::vector<RingElem> entries, std::string metadata)
    : ring_(std::move(ring)), entries_(std::move(entries)), metadata_(std::move(metadata)) {
    if (ring_.abelian()) throw DomainError("Fox pairings are defined on free group rings");
    const auto r = static_cast<std::size_t>(ring_.rank());
    if (entries_.size() != r * r) throw MismatchError("pairing matrix must have rank^2 entries");
    for (const auto& e : entries_)
        if (!(e.ring() == ring_)) throw MismatchError("pairing entry over a different ring");
}

FoxPairing FoxPairing::zero(const Ring& ring) {
    const auto r = static_cast<std::size_t>(ring.rank());
    return FoxPairing(ring, std::vector<RingElem>(r * r, ring.zero()));
}

const RingElem& FoxPairing::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= rank() || j >= rank()) throw DomainError("pairing entry index out of range");
    return entries_[static_cast<std::size_t>(i * rank() + j)];
}

FoxPairing FoxPairing::operator+(const FoxPairing& other) const {
    if (!(ring_ == other.ring_)) throw MismatchError("pairings over different rings");
    auto e = entries_;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.entries_[k];
    return FoxPairing(ring_, std::move(e));
}

FoxPairing FoxPairing::operator-(const FoxPairing& other) const { return *this + other.scale(-1); }

FoxPairing FoxPairing::scale(const Scalar& k) const {
    auto e = entries_;
    for (auto& x : e) x = x.scale(k);
    return FoxPairing(ring_, std::move(e));
}

PairingEvaluator FoxPairing::evaluator() const {
    return [p = *this](const RingElem& x, const RingElem& y) { return evaluate(p, x, y); };
}

RingElem evaluate(const FoxPairing& p, const RingElem& x, const RingElem& y) {
    if (!(x.ring() == p.ring()) || !(y.ring() == p.ring())) throw MismatchError("pairing and arguments differ in ring");
    const auto left = left_fox_gradient(x);
    const auto right = right_fox_gradient(y);
    RingElem out = p.ring().zero();
    for (int i = 0; i < p.rank(); ++i) {
        const auto& li = left[static_cast<std::size_t>(i)];
        if (li.is_zero()) continue;
        RingElem row = p.ring().zero();
        for (int j = 0; j < p.rank(); ++j) {
            const auto& rj = right[static_cast<std::size_t>(j)];
            if (!rj.is_zero() && !p.entry(i, j).is_zero()) row += p.entry(i, j) * rj;
        }
        if (!row.is_zero()) out += li * row;
    }
    return out;
}

RingElem evaluate(const FoxPairing& p, const Word& g, const Word& h) {
    return evaluate(p, p.ring().word(g), p.ring().word(h));
}

CheckReport check_axioms(const PairingEvaluator& eta, const Ring& ring, const SampleOptions& opt) {
    CheckReport report("axioms", opt.samples, opt.seed);
    Sampler rng(opt.seed);
    const RingElem one = ring.one();
    auto W = [&](const Word& w) { return ring.word(w); };
    for (std::size_t s = 0; s < opt.samples && report.passed; ++s) {
        const Word a1 = rng.free_word(ring.rank(), opt.max_len);
        const Word a2 = rng.free_word(ring.rank(), opt.max_len);
        const Word b1 = rng.free_word(ring.rank(), opt.max_len);
        const Word b2 = rng.free_word(ring.rank(), opt.max_len);
        const std::string where = " a1=" + ring.print(a1) + " a2=" + ring.print(a2) + " b1=" + ring.print(b1) +
                                  " b2=" + ring.print(b2);

        // First slot: left derivation.
        if (!(eta(W(a1 * a2), W(b1)) == eta(W(a1), W(b1)) + W(a1) * eta(W(a2), W(b1))))
            report.fail("eq1" + where);
        // Second slot: right derivation.
        else if (!(eta(W(a1), W(b1 * b2)) == eta(W(a1), W(b1)) * W(b2) + eta(W(a1), W(b2))))
            report.fail("eq2" + where);
        else if (!eta(one, W(b1)).is_zero() || !eta(W(a1), one).is_zero())
            report.fail("unit" + where);
        if (!report.passed) break;

        // Ring-element form with augmentation factors and bilinearity.
        const RingElem x1 = rng.ring_elem(ring, 3, 3);
        const RingElem x2 = rng.ring_elem(ring, 3, 3);
        const RingElem y = rng.ring_elem(ring, 3, 3);
        const std::string rwhere = " x1=" + x1.str() + " x2=" + x2.str() + " y=" + y.str();
        if (!(eta(x1 * x2, y) == eta(x1, y).scale(x2.augment()) + x1 * eta(x2, y)))
            report.fail("eq1-ring" + rwhere);
        else if (!(eta(y, x1 * x2) == eta(y, x1) * x2 + eta(y, x2).scale(x1.augment())))
            report.fail("eq2-ring" + rwhere);
        else if (!(eta(x1 + x2.scale(2), y) == eta(x1, y) + eta(x2, y).scale(2)))
            report.fail("bilinear" + rwhere);
    }
    return report;
}

CheckReport check_axioms(const FoxPairing& p, const SampleOptions& opt) {
    return check_axioms(p.evaluator(), p.ring(), opt);
}

FoxPairing transpose(const FoxPairing& p) {
    const Ring& ring = p.ring();
    std::vector<RingElem> e;
    for (int i = 0; i < p.rank(); ++i)
        for (int j = 0; j < p.rank(); ++j) e.push_back(ring.gen(i) * p.entry(j, i).involute() * ring.gen(j));
    return FoxPairing(ring, std::move(e), p.metadata());
}

RingElem transpose_value(const FoxPairing& p, const Word& g, const Word& h) {
    return evaluate(p, h.inverse(), g.inverse()).involute();
}

FoxPairing inner_pairing(const RingElem& c) {
    const Ring& ring = c.ring();
    std::vector<RingElem> e;
    for (int i = 0; i < ring.rank(); ++i)
        for (int j = 0; j < ring.rank(); ++j)
            e.push_back((ring.one() - ring.gen(i)) * c * (ring.one() - ring.gen(j)));
    return FoxPairing(ring, std::move(e));
}

FoxPairing pairing_from_derivations(const Derivation& dl, const Derivation& dr) {
    if (dl.side != Side::Left || dr.side != Side::Right)
        throw MismatchError("pairing_from_derivations needs a left and a right derivation");
    if (!(dl.ring == dr.ring)) throw MismatchError("derivations over different rings");
    std::vector<RingElem> e;
    for (const auto& u : dl.gen_values)
        for (const auto& v : dr.gen_values) e.push_back(u * v);
    return FoxPairing(dl.ring, std::move(e));
}

std::optional<RingElem> left_divide_by_s_minus_one(const Word& s, const RingElem& v, int bound) {
    const Ring& ring = v.ring();
    if (v.is_zero()) return ring.zero();
    if (s.is_identity()) return std::nullopt;
    if (bound < 0) bound = static_cast<int>(2 * v.max_length() + 2);

    // Candidate support: s^k w for w in supp(v), |k| <= bound.
    std::vector<Word> powers;  // s^-bound .. s^bound
    Word neg = ring.identity(), pos = ring.identity();
    std::vector<Word> negs, poss;
    for (int k = 1; k <= bound; ++k) {
        neg = neg * s.inverse();
        pos = pos * s;
        negs.push_back(neg);
        poss.push_back(pos);
    }
    powers.assign(negs.rbegin(), negs.rend());
    powers.push_back(ring.identity());
    powers.insert(powers.end(), poss.begin(), poss.end());

    std::map<Word, std::size_t> unknowns;
    for (const auto& [w, c] : v.terms())
        for (const auto& p : powers) unknowns.try_emplace(p * w, 0);
    std::size_t idx = 0;
    for (auto& [w, k] : unknowns) k = idx++;

    // (s-1)u: u_w contributes +1 at s*w and -1 at w.
    std::map<Word, SparseSystem::Row> equations;
    for (const auto& [w, k] : unknowns) {
        equations[s * w].emplace_back(k, 1);
        equations[w].emplace_back(k, -1);
    }
    for (const auto& [w, c] : v.terms()) equations.try_emplace(w);

    const CoeffRing field = ring.coeff == CoeffRing::Mod2 ? CoeffRing::Mod2 : CoeffRing::Rational;
    SparseSystem system(unknowns.size(), field);
    for (auto& [w, row] : equations) system.add_equation(std::move(row), v.coefficient(w));
    const SolveResult res = solve_sparse(system);
    if (!res.consistent) return std::nullopt;

    RingElem u = ring.zero();
    for (const auto& [w, k] : unknowns) {
        const Scalar& c = res.solution[k];
        if (c == 0) continue;
        if (ring.coeff == CoeffRing::Integer && c.get_den() != 1) return std::nullopt;
        u.add_term(w, c);
    }
    if (!((ring.word(s) - ring.one()) * u == v)) throw Error("internal: left division check failed");
    return u;
}

CheckReport check_boundary_condition(const PairingEvaluator& eta, const Ring& ring, const Word& s,
                                     const std::optional<RingElem>& a_s, bool containment,
                                     const SampleOptions& opt) {
    CheckReport report(containment ? "boundary+containment" : "boundary", opt.samples, opt.seed);
    const RingElem coeff = a_s ? *a_s : ring.one();
    Sampler rng(opt.seed);
    for (std::size_t k = 0; k < opt.samples && report.passed; ++k) {
        const Word g = rng.free_word(ring.rank(), opt.max_len);
        const RingElem value = eta(ring.word(s), ring.word(g));
        const RingElem expected = coeff * (ring.one() - ring.word(g));
        if (!(value == expected)) {
            report.fail("g=" + ring.print(g) + " eta(s,g)=" + value.str() + " expected=" + expected.str());
        } else if (containment && !left_divide_by_s_minus_one(s, value, -1)) {
            report.fail("g=" + ring.print(g) + " eta(s,g)=" + value.str() + " not in (s-1)K[G]");
        }
    }
    return report;
}

CheckReport check_boundary_condition(const FoxPairing& p, const Word& s, const std::optional<RingElem>& a_s,
                                     bool containment, const SampleOptions& opt) {
    return check_boundary_condition(p.evaluator(), p.ring(), s, a_s, containment, opt);
}

CheckReport check_skew_identity(const FoxPairing& p, const SampleOptions& opt) {
    CheckReport report("skew", opt.samples, opt.seed);
    const FoxPairing t = transpose(p);
    const Ring& ring = p.ring();
    Sampler rng(opt.seed);
    for (std::size_t k = 0; k < opt.samples && report.passed; ++k) {
        const Word g = rng.free_word(ring.rank(), opt.max_len);
        const Word h = rng.free_word(ring.rank(), opt.max_len);
        const RingElem lhs = evaluate(p, g, h) + evaluate(t, g, h);
        const RingElem rhs = (ring.one() - ring.word(g)) * (ring.one() - ring.word(h));
        if (!(lhs == rhs))
            report.fail("g=" + ring.print(g) + " h=" + ring.print(h) + " lhs=" + lhs.str() + " rhs=" + rhs.str());
    }
    return report;
}

std::int64_t intersection_number(int genus, const Word& a, const Word& b) {
    std::int64_t total = 0;
    for (int i = 0; i < genus; ++i) {
        const int alpha = 2 * i, beta = 2 * i + 1;
        total += a.exponent_sum(alpha) * b.exponent_sum(beta) - a.exponent_sum(beta) * b.exponent_sum(alpha);
    }
    return total;
}

IntersectionReport check_aug_intersection(const PairingEvaluator& eta, const Ring& ring, int genus,
                                          const SampleOptions& opt) {
    if (genus < 1 || ring.rank() != 2 * genus) throw DomainError("alphabet is not a genus-" + std::to_string(genus) + " surface alphabet");
    IntersectionReport out;
    out.report = CheckReport("aug-intersection", opt.samples, opt.seed);
    Sampler rng(opt.seed);
    for (std::size_t k = 0; k < opt.samples && out.report.passed; ++k) {
        const Word a = rng.free_word(ring.rank(), opt.max_len);
        const Word b = rng.free_word(ring.rank(), opt.max_len);
        const Scalar aug = eta(ring.word(a), ring.word(b)).augment();
        const std::int64_t I = intersection_number(genus, a, b);
        const std::string where = "a=" + ring.print(a) + " b=" + ring.print(b) + " aug=" + format_scalar(aug) +
                                  " I=" + std::to_string(I);
        if (!out.lambda && normalize(ring.coeff, Scalar(I)) != 0) {
            Scalar lambda = aug / Scalar(I);
            lambda = normalize(ring.coeff == CoeffRing::Integer ? CoeffRing::Rational : ring.coeff, lambda);
            if (lambda == 0) {
                out.report.fail(where + " lambda=0");
                break;
            }
            out.lambda = lambda;
            continue;
        }
        if (out.lambda) {
            const Scalar expected = normalize(ring.coeff == CoeffRing::Integer ? CoeffRing::Rational : ring.coeff,
                                              *out.lambda * Scalar(I));
            if (aug != expected) out.report.fail(where + " lambda=" + format_scalar(*out.lambda));
        } else if (aug != 0) {
            // Before lambda is known every I = 0 pair must have aug = 0 too.
            out.report.fail(where);
        }
    }
    if (out.report.passed && !out.lambda) {
        out.inconclusive = true;
        out.report.fail("inconclusive: no sampled pair with I != 0");
    }
    if (out.lambda) out.report.notes.push_back("lambda=" + format_scalar(*out.lambda));
    return out;
}

}  // namespace fox

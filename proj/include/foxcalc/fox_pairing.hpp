#pragma once

#include "foxcalc/fox_calculus.hpp"
#include "foxcalc/group_ring.hpp"
#include "foxcalc/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fox {

using PairingEvaluator = std::function<RingElem(const RingElem&, const RingElem&)>;

// Fox pairing on a free group ring, stored by its generator matrix
// entry(i,j) = eta(x_i, x_j).
class FoxPairing {
public:
    FoxPairing(Ring ring, std::vector<RingElem> entries, std::string metadata = {});
    static FoxPairing zero(const Ring& ring);

    const Ring& ring() const { return ring_; }
    int rank() const { return ring_.rank(); }
    const RingElem& entry(int i, int j) const;
    const std::vector<RingElem>& entries() const { return entries_; }
    const std::string& metadata() const { return metadata_; }
    void set_metadata(std::string text) { metadata_ = std::move(text); }

    FoxPairing operator+(const FoxPairing& other) const;
    FoxPairing operator-(const FoxPairing& other) const;
    FoxPairing scale(const Scalar& k) const;

    PairingEvaluator evaluator() const;

private:
    Ring ring_;
    std::vector<RingElem> entries_;
    std::string metadata_;
};

// eta(x,y) = sum_ij (d^l x / dx_i) eta_ij (d^r y / dx_j)
RingElem evaluate(const FoxPairing& p, const RingElem& x, const RingElem& y);
RingElem evaluate(const FoxPairing& p, const Word& g, const Word& h);

struct SampleOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    int max_len = 5;
};

// Both Leibniz-type laws on sampled words and small ring elements, plus vanishing on 1.
CheckReport check_axioms(const PairingEvaluator& eta, const Ring& ring, const SampleOptions& opt);
CheckReport check_axioms(const FoxPairing& p, const SampleOptions& opt);

// Generator entry (i,j) = x_i conj(eta_ji) x_j, so that on group elements
// eta^t(g,h) = conj(eta(h^-1, g^-1)) = g conj(eta(h,g)) h.
FoxPairing transpose(const FoxPairing& p);
RingElem transpose_value(const FoxPairing& p, const Word& g, const Word& h);

// (1-g) c (1-h) on group elements.
FoxPairing inner_pairing(const RingElem& c);
FoxPairing pairing_from_derivations(const Derivation& dl, const Derivation& dr);

// eta(s,g) = a_s (1-g) on sampled g; `a_s` empty means a_s = 1.
// With `containment`, also eta(s,g) in (s-1)K[G] by bounded left division.
CheckReport check_boundary_condition(const PairingEvaluator& eta, const Ring& ring, const Word& s,
                                     const std::optional<RingElem>& a_s, bool containment,
                                     const SampleOptions& opt);
CheckReport check_boundary_condition(const FoxPairing& p, const Word& s, const std::optional<RingElem>& a_s,
                                     bool containment, const SampleOptions& opt);

// Solves (s-1) u = v with u supported on words of length <= bound.
std::optional<RingElem> left_divide_by_s_minus_one(const Word& s, const RingElem& v, int bound);

// eta + eta^t = (1-g)(1-h) on sampled pairs.
CheckReport check_skew_identity(const FoxPairing& p, const SampleOptions& opt);

// Symplectic exponent-sum form for generators a1,b1,...,ag,bg.
std::int64_t intersection_number(int genus, const Word& a, const Word& b);

struct IntersectionReport {
    CheckReport report;
    std::optional<Scalar> lambda;
    bool inconclusive = false;
};

IntersectionReport check_aug_intersection(const PairingEvaluator& eta, const Ring& ring, int genus,
                                          const SampleOptions& opt);

}  // namespace fox

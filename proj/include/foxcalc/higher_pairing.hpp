#pragma once

#include "foxcalc/fox_calculus.hpp"
#include "foxcalc/group_ring.hpp"
#include "foxcalc/report.hpp"

#include <functional>
#include <vector>

namespace fox {

// K[Z^n] as Laurent polynomials in t1..tn.
Ring laurent_ring(int n, CoeffRing coeff);

// D(t^l) in one variable: 1 + t + ... + t^(l-1) for l >= 0 and
// -(t^-1 + ... + t^l) for l < 0, written in variable i of `ring`.
RingElem divided_difference(const Ring& ring, int i, std::int64_t l);

// D_i pulled back along the projection Z^n -> Z onto the i-th factor:
// D_i(t^e) = D(t_i^(e_i)). Law: D_i(ab) = D_i(a) + t_i^(e_i(a)) D_i(b).
RingElem laurent_derivation(const Ring& ring, int i, const Word& w);
RingElem laurent_derivation(int i, const RingElem& x);

using MonomialTuple = std::vector<Word>;

// Type (n,n) pairing on Z^n. Left slot: prod_k t_k^(sum_{l<k} e_lk) D_k(t_k^e_kk).
// Right slot: prod_k D_k(t_k^f_kk) t_k^(sum_{l>k} f_lk). Value: left * right.
RingElem higher_eta_Zn(const Ring& ring, const MonomialTuple& a, const MonomialTuple& b);

// Diagonal-exponent formula with correction factors t_k^(-sum_{l>k} e_ll).
// Kept as a reference; it is not a cocycle for n >= 2.
RingElem printed_higher_eta_Zn(const Ring& ring, const MonomialTuple& a, const MonomialTuple& b);

struct HigherPairing {
    int n = 1;
    Ring ring;
    std::function<RingElem(const MonomialTuple&, const MonomialTuple&)> eval;
};

HigherPairing zn_higher_pairing(int n, CoeffRing coeff);
HigherPairing printed_zn_higher_pairing(int n, CoeffRing coeff);

// Multilinear extension to tuples of Laurent polynomials.
RingElem evaluate_multilinear(const HigherPairing& hp, const std::vector<RingElem>& a,
                              const std::vector<RingElem>& b);

// For sampled fixed b (resp. a), the left evaluation is an n-cocycle for the
// left regular action and the right evaluation one for the right action.
CheckReport check_higher_cocycle(const HigherPairing& hp, Side slot, std::size_t samples, std::uint64_t seed,
                                 int max_abs = 2);

}  // namespace fox

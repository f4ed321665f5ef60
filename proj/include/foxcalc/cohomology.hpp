#pragma once

#include "foxcalc/fox_pairing.hpp"
#include "foxcalc/report.hpp"
#include "foxcalc/sampling.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace fox {

// Element of K[G] (x) K[G].
class TensorElem {
public:
    using Terms = std::map<std::pair<Word, Word>, Scalar>;

    explicit TensorElem(Ring ring) : ring_(std::move(ring)) {}
    static TensorElem pure(const RingElem& x, const RingElem& y);

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& x, const Word& y, const Scalar& c);
    TensorElem& operator+=(const TensorElem& t);
    TensorElem& operator-=(const TensorElem& t);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    TensorElem scale(const Scalar& k) const;
    friend bool operator==(const TensorElem& a, const TensorElem& b);

    std::string str() const;

private:
    Ring ring_;
    Terms terms_;
};

// g (x) h -> g h^-1, extended linearly; equivalently x (x) y -> x conj(y).
RingElem mu_contract(const TensorElem& t);

// Group the cochains live on. Product means G2 x G1 with both factors equal
// to the free group of `ring`; elements then use both words of GroupElem.
enum class GroupKind { Free, Product, Abelian };

struct GroupDesc {
    GroupKind kind = GroupKind::Free;
    Ring ring;
};

struct GroupElem {
    Word first;
    Word second;  // product groups only

    friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

GroupElem group_identity(const GroupDesc& g);
GroupElem group_multiply(const GroupDesc& g, const GroupElem& x, const GroupElem& y);
GroupElem sample_group_elem(const GroupDesc& g, Sampler& rng, int max_len);
std::string print_group_elem(const GroupDesc& g, const GroupElem& x);

// Coefficient module and the action used by the coboundary. All actions are
// left actions except RightRegular.
enum class ModuleKind {
    LeftRegular,      // g.m = g m
    RightRegular,     // m.g = m g   (right coboundary)
    Conjugation,      // g.m = g m g^-1
    ProductBimodule,  // (g,h).m = g m h^-1
    Tensor,           // (g,h).(x (x) y) = gx (x) hy
};

std::string_view module_name(ModuleKind kind);
Side module_side(ModuleKind kind);

RingElem act(ModuleKind kind, const GroupDesc& g, const GroupElem& x, const RingElem& m);
TensorElem act(ModuleKind kind, const GroupDesc& g, const GroupElem& x, const TensorElem& m);

template <class V>
struct Cochain {
    int degree = 0;
    GroupDesc group;
    ModuleKind module = ModuleKind::LeftRegular;
    std::function<V(const std::vector<GroupElem>&)> eval;

    V operator()(const std::vector<GroupElem>& args) const { return eval(args); }
};

using RingCochain = Cochain<RingElem>;
using TensorCochain = Cochain<TensorElem>;

// Alternating-sum coboundary for the module's action. Degrees 0..3.
RingCochain coboundary(const RingCochain& c);
TensorCochain coboundary(const TensorCochain& c);

// Checks that `c` vanishes on sampled tuples of its degree.
CheckReport check_vanishes(const RingCochain& c, const std::string& name, std::size_t samples,
                           std::uint64_t seed, int max_len = 4);
CheckReport check_vanishes(const TensorCochain& c, const std::string& name, std::size_t samples,
                           std::uint64_t seed, int max_len = 4);
CheckReport check_cocycle(const RingCochain& c, std::size_t samples, std::uint64_t seed, int max_len = 4);
CheckReport check_cocycle(const TensorCochain& c, std::size_t samples, std::uint64_t seed, int max_len = 4);

// Degree-0 cochain with value m.
RingCochain constant_cochain(const GroupDesc& g, ModuleKind module, const RingElem& m);

// (g,h) -> eta(g,h) h^-1 g^-1 with the conjugation action.
RingCochain kappa_from_pairing(const FoxPairing& p);

// q(wx) = q(w) x + w q(x) + eta(w,x), with q(1) = 0 and
// q(x^-1) = x^-1 (-q(x) x^-1 - eta(x, x^-1)).
class QuasiDerivation {
public:
    QuasiDerivation(FoxPairing p, std::vector<RingElem> gen_values);

    RingElem operator()(const Word& w) const;
    // Letter-by-letter without reducing the input sequence.
    RingElem on_letters(std::span<const std::int64_t> letters) const;

    const FoxPairing& pairing() const { return pairing_; }

private:
    RingElem letter_value(std::int64_t letter) const;
    FoxPairing pairing_;
    std::vector<RingElem> gen_values_;
};

struct QuasiExtension {
    QuasiDerivation q;
    CheckReport report;
};

// Checks the quasi-derivation law on sampled pairs and consistency under inserted
// cancelling pairs.
QuasiExtension quasi_derivation_extend(const FoxPairing& p, std::vector<RingElem> gen_values,
                                       std::size_t samples = 100, std::uint64_t seed = 1, int max_len = 5);

// Left regular 1-cochain of a left derivation, and the left cocycle
// b -> conj(D_r(b^-1)) attached to a right derivation.
RingCochain derivation_cochain(const Derivation& d);
RingCochain left_cocycle_of_right_derivation(const Derivation& dr);

// (u x v)((a1,b1),(a2,b2)) = u(a1) (x) b1 v(b2). Inputs must be left regular
// 1-cocycles; this is verified on `samples` pairs.
TensorCochain cross_product_1_1(const RingCochain& u, const RingCochain& v, std::size_t samples = 50,
                                std::uint64_t seed = 1);

// mu applied pointwise; lands in the product bimodule.
RingCochain mu_compose(const TensorCochain& t);

using WordFunction = std::function<RingElem(const Word&)>;

struct RhoResult {
    PairingEvaluator eta;
    CheckReport side_conditions;
};

// rho_f(a,b) = f((a,1),(1,b)) - f((1,b),(a,1)) + q(a)(1-b^-1) + (1-a) q(b),
// read as a pairing via eta(a,b) = rho_f(a, b^-1). Side conditions checked
// on samples: delta q = f on 1 x G1 and delta q = -f on G2 x 1.
// Throws DomainError when they fail.
RhoResult rho_map(const RingCochain& f, const WordFunction& q, std::size_t samples = 50, std::uint64_t seed = 1,
                  int max_len = 4);

}  // namespace fox

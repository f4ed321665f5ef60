#pragma once

#include "foxcalc/group_ring.hpp"
#include "foxcalc/report.hpp"

#include <functional>
#include <vector>

namespace fox {

enum class Side { Left, Right };

std::string_view side_name(Side side);

// Classical free derivative d/dx_gen (prefix form). Left law:
// D(uv) = D(u) + u D(v).
RingElem left_fox_derivative(const Ring& ring, const Word& w, int gen);
RingElem left_fox_derivative(const RingElem& x, int gen);

// Suffix form. Right law: D(uv) = D(u) v + D(v).
RingElem right_fox_derivative(const Ring& ring, const Word& w, int gen);
RingElem right_fox_derivative(const RingElem& x, int gen);

// All r derivatives of x at once.
std::vector<RingElem> left_fox_gradient(const RingElem& x);
std::vector<RingElem> right_fox_gradient(const RingElem& x);

struct Derivation {
    Side side = Side::Left;
    Ring ring;
    std::vector<RingElem> gen_values;

    Derivation(Side s, Ring r, std::vector<RingElem> values);
};

// Fox-derivative expansion of d on x.
RingElem extend_derivation(const Derivation& d, const RingElem& x);
RingElem extend_derivation(const Derivation& d, const Word& w);

// Independent path: applies the side law letter by letter.
RingElem extend_derivation_recursive(const Derivation& d, const Word& w);

// Left: g -> (1-g)c. Right: g -> c(1-g).
Derivation coboundary_derivation(const RingElem& c, Side side);
RingElem coboundary_value(const RingElem& c, Side side, const Word& g);

using WordMap = std::function<RingElem(const Word&)>;

// Samples word pairs (u,v) and checks the side law for `map`, plus map(1) = 0.
CheckReport check_derivation_law(Side side, const Ring& ring, const WordMap& map, std::size_t samples,
                                 std::uint64_t seed, int max_len = 6);
CheckReport is_derivation(const Derivation& d, std::size_t samples, std::uint64_t seed, int max_len = 6);

}  // namespace fox

#include "foxcalc/coeff.hpp"

#include "foxcalc/errors.hpp"

namespace fox {

std::string_view coeff_tag(CoeffRing ring) {
    switch (ring) {
    case CoeffRing::Rational: return "Q";
    case CoeffRing::Integer: return "Z";
    case CoeffRing::Mod2: return "F2";
    }
    return "?";
}

CoeffRing parse_coeff_ring(std::string_view tag) {
    if (tag == "Q") return CoeffRing::Rational;
    if (tag == "Z") return CoeffRing::Integer;
    if (tag == "F2") return CoeffRing::Mod2;
    throw DomainError("unknown coefficient ring '" + std::string(tag) + "' (expected Q, Z or F2)");
}

bool is_field(CoeffRing ring) { return ring != CoeffRing::Integer; }

Scalar normalize(CoeffRing ring, const Scalar& value) {
    switch (ring) {
    case CoeffRing::Rational:
        return value;
    case CoeffRing::Integer:
        if (value.get_den() != 1) throw DomainError("coefficient " + value.get_str() + " is not an integer");
        return value;
    case CoeffRing::Mod2: {
        if (mpz_even_p(value.get_den().get_mpz_t()))
            throw DomainError("coefficient " + value.get_str() + " is undefined mod 2");
        return Scalar(mpz_odd_p(value.get_num().get_mpz_t()) ? 1 : 0);
    }
    }
    return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

}  // namespace fox

#include "foxcalc/group_ring.hpp"

#include "foxcalc/errors.hpp"

#include <cctype>

namespace fox {

Word Ring::gen_word(int gen, int sign) const {
    if (gen < 0 || gen >= rank()) throw DomainError("generator index out of range");
    if (!abelian()) return Word::generator(gen, sign);
    std::vector<std::int64_t> e(static_cast<std::size_t>(rank()), 0);
    e[static_cast<std::size_t>(gen)] = sign > 0 ? 1 : -1;
    return Word::from_exponents(std::move(e));
}

RingElem Ring::zero() const { return RingElem(*this); }
RingElem Ring::one() const { return word(identity()); }

RingElem Ring::word(const Word& w, const Scalar& c) const {
    RingElem x(*this);
    x.add_term(w, c);
    return x;
}

RingElem Ring::gen(int g, int sign) const { return word(gen_word(g, sign)); }
RingElem Ring::parse(std::string_view text) const { return parse_ring_elem(text, *this); }
Word Ring::parse_word(std::string_view text) const { return fox::parse_word(text, *alphabet); }
std::string Ring::print(const Word& w) const { return print_word(w, *alphabet); }

bool Ring::operator==(const Ring& other) const {
    return coeff == other.coeff && same_alphabet(alphabet, other.alphabet);
}

RingElem::RingElem(Ring ring) : ring_(std::move(ring)) {
    if (!ring_.alphabet) throw DomainError("ring element without alphabet");
}

Scalar RingElem::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::int64_t RingElem::max_length() const {
    std::int64_t m = -1;
    for (const auto& [w, c] : terms_) m = std::max(m, w.length());
    return m;
}

void RingElem::add_term(const Word& w, const Scalar& c) {
    if (w.abelian() != ring_.abelian()) throw MismatchError("word regime differs from ring");
    const Scalar v = normalize(ring_.coeff, c);
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, v);
    if (!inserted) {
        it->second = normalize(ring_.coeff, it->second + v);
        if (it->second == 0) terms_.erase(it);
    }
}

void RingElem::require_compatible(const RingElem& y) const {
    if (ring_.coeff != y.ring_.coeff) throw MismatchError("coefficient rings differ");
    if (!same_alphabet(ring_.alphabet, y.ring_.alphabet)) throw MismatchError("alphabets differ");
}

RingElem& RingElem::operator+=(const RingElem& y) {
    require_compatible(y);
    for (const auto& [w, c] : y.terms_) add_term(w, c);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& y) {
    require_compatible(y);
    for (const auto& [w, c] : y.terms_) add_term(w, -c);
    return *this;
}

RingElem RingElem::operator-() const { return scale(-1); }

RingElem operator*(const RingElem& x, const RingElem& y) {
    x.require_compatible(y);
    RingElem out(x.ring_);
    for (const auto& [u, a] : x.terms_)
        for (const auto& [v, b] : y.terms_) out.add_term(u * v, a * b);
    return out;
}

bool operator==(const RingElem& x, const RingElem& y) {
    x.require_compatible(y);
    return x.terms_ == y.terms_;
}

RingElem RingElem::scale(const Scalar& k) const {
    RingElem out(ring_);
    const Scalar kk = normalize(ring_.coeff, k);
    if (kk == 0) return out;
    for (const auto& [w, c] : terms_) out.add_term(w, c * kk);
    return out;
}

Scalar RingElem::augment() const {
    Scalar s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return normalize(ring_.coeff, s);
}

RingElem RingElem::involute() const {
    return map_words([](const Word& w) { return w.inverse(); });
}

RingElem RingElem::map_words(const std::function<Word(const Word&)>& f) const {
    RingElem out(ring_);
    for (const auto& [w, c] : terms_) out.add_term(f(w), c);
    return out;
}

std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const bool negative = c < 0;
        const Scalar mag = negative ? Scalar(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (w.is_identity()) {
            out += format_scalar(mag);
        } else {
            if (mag != 1) out += format_scalar(mag) + " ";
            out += print_word(w, *ring_.alphabet);
        }
    }
    return out;
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool digit_at(std::string_view text, std::size_t pos) {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

mpz_class read_integer(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (digit_at(text, pos)) ++pos;
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
}

}  // namespace

RingElem parse_ring_elem(std::string_view text, const Ring& ring) {
    RingElem out(ring);
    std::size_t pos = 0;
    skip_space(text, pos);
    if (pos >= text.size()) throw ParseError("expected a ring element", pos);
    bool first = true;
    while (true) {
        skip_space(text, pos);
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_space(text, pos);
        } else if (!first) {
            throw ParseError("expected '+' or '-'", pos);
        }
        first = false;

        const std::size_t term_start = pos;
        bool have_coeff = false;
        Scalar c = 1;
        if (digit_at(text, pos)) {
            have_coeff = true;
            mpz_class num = read_integer(text, pos);
            mpz_class den = 1;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                if (!digit_at(text, pos)) throw ParseError("expected a denominator", pos);
                const std::size_t den_pos = pos;
                den = read_integer(text, pos);
                if (den == 0) throw ParseError("zero denominator", den_pos);
            }
            c = Scalar(num, den);
            c.canonicalize();
            skip_space(text, pos);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_space(text, pos);
                if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    throw ParseError("expected a word after '*'", pos);
            }
        }
        Word w = ring.identity();
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            w = parse_word_at(text, pos, *ring.alphabet);
        } else if (!have_coeff) {
            throw ParseError("expected a term", term_start);
        }
        try {
            out.add_term(w, sign * c);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), term_start);
        }
        skip_space(text, pos);
        if (pos >= text.size()) break;
    }
    return out;
}

}  // namespace fox

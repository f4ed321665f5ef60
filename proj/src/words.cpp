#include "foxcalc/words.hpp"

#include "foxcalc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace fox {

namespace {

constexpr std::int64_t kMaxFreeExponent = 1'000'000;
constexpr std::int64_t kMaxAbelianExponent = std::int64_t{1} << 62;

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

// Rank key for shortlex: x1 < x1^-1 < x2 < x2^-1 < ...
std::int64_t letter_key(std::int64_t letter) {
    return letter > 0 ? 2 * letter : -2 * letter + 1;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, std::size_t offset) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r) || r > kMaxAbelianExponent || r < -kMaxAbelianExponent)
        throw ParseError("exponent overflow", offset);
    return r;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, bool abelian)
    : names_(std::move(names)), abelian_(abelian) {}

std::shared_ptr<const Alphabet> Alphabet::standard(int rank, bool abelian) {
    if (rank < 1) throw DomainError("alphabet rank must be at least 1");
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back((abelian ? "t" : "x") + std::to_string(i));
    return named(std::move(names), abelian);
}

std::shared_ptr<const Alphabet> Alphabet::named(std::vector<std::string> names, bool abelian) {
    if (names.empty()) throw DomainError("alphabet rank must be at least 1");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!valid_generator_name(n)) throw DomainError("invalid generator name '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate generator name '" + n + "'");
    }
    return std::shared_ptr<const Alphabet>(new Alphabet(std::move(names), abelian));
}

bool valid_generator_name(std::string_view name) {
    if (name.empty() || !is_name_start(name[0])) return false;
    if (!std::all_of(name.begin(), name.end(), is_name_char)) return false;
    return !(name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0])));
}

std::optional<int> Alphabet::lookup(std::string_view token) const {
    for (int i = 0; i < rank(); ++i)
        if (names_[static_cast<std::size_t>(i)] == token) return i + 1;
    if (token.size() != 1) return std::nullopt;
    const char c = token[0];
    if (std::islower(static_cast<unsigned char>(c))) {
        const int idx = c - 'a';
        if (idx < rank()) return idx + 1;
        return std::nullopt;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        auto base = lookup(std::string_view(&lower, 1));
        if (base) return -*base;
    }
    return std::nullopt;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

Word Word::identity(int rank, bool abelian) {
    Word w;
    w.abelian_ = abelian;
    if (abelian) w.data_.assign(static_cast<std::size_t>(rank), 0);
    return w;
}

Word Word::generator(int gen, int sign) {
    Word w;
    w.data_.push_back(sign > 0 ? gen + 1 : -(gen + 1));
    return w;
}

Word Word::from_exponents(std::vector<std::int64_t> exponents) {
    Word w;
    w.abelian_ = true;
    w.data_ = std::move(exponents);
    return w;
}

bool Word::is_identity() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t Word::length() const {
    if (!abelian_) return static_cast<std::int64_t>(data_.size());
    std::int64_t n = 0;
    for (auto e : data_) n += e < 0 ? -e : e;
    return n;
}

std::span<const std::int64_t> Word::letters() const {
    if (abelian_) throw DomainError("letters() requires a free-regime word");
    return data_;
}

std::span<const std::int64_t> Word::exponents() const {
    if (!abelian_) throw DomainError("exponents() requires an abelian-regime word");
    return data_;
}

std::int64_t Word::exponent_sum(int gen) const {
    if (abelian_) return data_.at(static_cast<std::size_t>(gen));
    std::int64_t s = 0;
    for (auto l : data_) {
        if (l == gen + 1) ++s;
        if (l == -(gen + 1)) --s;
    }
    return s;
}

Word Word::prefix(std::size_t n) const {
    Word w;
    w.data_.assign(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(std::min(n, data_.size())));
    return w;
}

Word Word::suffix(std::size_t from) const {
    Word w;
    w.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(std::min(from, data_.size())), data_.end());
    return w;
}

Word Word::inverse() const {
    Word w;
    w.abelian_ = abelian_;
    if (abelian_) {
        for (auto e : data_) w.data_.push_back(-e);
    } else {
        for (auto it = data_.rbegin(); it != data_.rend(); ++it) w.data_.push_back(-*it);
    }
    return w;
}

Word reduce(std::span<const std::int64_t> letters) {
    Word w;
    for (auto l : letters) {
        if (!w.data_.empty() && w.data_.back() == -l)
            w.data_.pop_back();
        else
            w.data_.push_back(l);
    }
    return w;
}

Word operator*(const Word& u, const Word& v) {
    if (u.abelian_ != v.abelian_) throw MismatchError("cannot multiply words of different regimes");
    if (u.abelian_) {
        if (u.data_.size() != v.data_.size()) throw MismatchError("abelian words of different rank");
        Word w = u;
        for (std::size_t i = 0; i < v.data_.size(); ++i) w.data_[i] += v.data_[i];
        return w;
    }
    // Cancel the overlap between the tail of u and the head of v.
    std::size_t k = 0;
    while (k < u.data_.size() && k < v.data_.size() &&
           u.data_[u.data_.size() - 1 - k] == -v.data_[k])
        ++k;
    Word w;
    w.data_.reserve(u.data_.size() + v.data_.size() - 2 * k);
    w.data_.insert(w.data_.end(), u.data_.begin(), u.data_.end() - static_cast<std::ptrdiff_t>(k));
    w.data_.insert(w.data_.end(), v.data_.begin() + static_cast<std::ptrdiff_t>(k), v.data_.end());
    return w;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
    if (u.abelian_ != v.abelian_) throw MismatchError("cannot compare words of different regimes");
    if (u.abelian_ && u.data_.size() != v.data_.size())
        throw MismatchError("abelian words of different rank");
    if (auto c = u.length() <=> v.length(); c != 0) return c;
    if (u.abelian_) return u.data_ <=> v.data_;
    for (std::size_t i = 0; i < u.data_.size(); ++i)
        if (auto c = letter_key(u.data_[i]) <=> letter_key(v.data_[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::strong_ordering shortlex_compare(const Word& u, const Word& v) { return u <=> v; }

Word parse_word_at(std::string_view text, std::size_t& pos, const Alphabet& alphabet) {
    const bool abelian = alphabet.abelian();
    const std::int64_t limit = abelian ? kMaxAbelianExponent : kMaxFreeExponent;
    skip_space(text, pos);
    if (pos >= text.size()) throw ParseError("expected a word", pos);

    if (text[pos] == '1' && (pos + 1 >= text.size() || !is_name_char(text[pos + 1]))) {
        ++pos;
        return Word::identity(alphabet.rank(), abelian);
    }

    std::vector<std::int64_t> raw;
    std::vector<std::int64_t> expo(abelian ? static_cast<std::size_t>(alphabet.rank()) : 0, 0);
    while (true) {
        skip_space(text, pos);
        if (pos >= text.size() || !is_name_start(text[pos]))
            throw ParseError("expected a generator name", pos);
        const std::size_t name_start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        const auto token = text.substr(name_start, pos - name_start);
        const auto letter = alphabet.lookup(token);
        if (!letter) throw ParseError("unknown generator '" + std::string(token) + "'", name_start);

        std::int64_t exponent = 1;
        std::size_t look = pos;
        skip_space(text, look);
        if (look < text.size() && text[look] == '^') {
            pos = look + 1;
            skip_space(text, pos);
            const std::size_t int_start = pos;
            bool negative = false;
            if (pos < text.size() && text[pos] == '-') {
                negative = true;
                ++pos;
            }
            if (pos >= text.size() || !is_digit(text[pos])) throw ParseError("expected an integer exponent", pos);
            std::int64_t value = 0;
            while (pos < text.size() && is_digit(text[pos])) {
                if (value > (limit - (text[pos] - '0')) / 10) throw ParseError("exponent overflow", int_start);
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            exponent = negative ? -value : value;
        }

        const std::int64_t gen = *letter > 0 ? *letter : -*letter;
        const std::int64_t signed_exp = *letter > 0 ? exponent : -exponent;
        if (abelian) {
            auto& slot = expo[static_cast<std::size_t>(gen - 1)];
            slot = checked_add(slot, signed_exp, name_start);
        } else {
            const std::int64_t step = signed_exp > 0 ? gen : -gen;
            const std::int64_t count = signed_exp > 0 ? signed_exp : -signed_exp;
            if (static_cast<std::int64_t>(raw.size()) + count > kMaxFreeExponent)
                throw ParseError("exponent overflow", name_start);
            raw.insert(raw.end(), static_cast<std::size_t>(count), step);
        }

        look = pos;
        skip_space(text, look);
        if (look < text.size() && text[look] == '*') {
            std::size_t after = look + 1;
            skip_space(text, after);
            // "2*a" style coefficients are handled by callers; here '*' must
            // be followed by another factor.
            pos = after;
            continue;
        }
        break;
    }
    return abelian ? Word::from_exponents(std::move(expo)) : reduce(raw);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::size_t pos = 0;
    Word w = parse_word_at(text, pos, alphabet);
    skip_space(text, pos);
    if (pos != text.size()) throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    return w;
}

std::string print_word(const Word& w, const Alphabet& alphabet) {
    if (w.abelian() != alphabet.abelian()) throw MismatchError("word and alphabet regimes differ");
    if (w.is_identity()) return "1";
    std::string out;
    auto emit = [&](int gen, std::int64_t power) {
        if (!out.empty()) out += '*';
        out += alphabet.name(gen);
        if (power != 1) out += '^' + std::to_string(power);
    };
    if (w.abelian()) {
        const auto e = w.exponents();
        if (static_cast<int>(e.size()) != alphabet.rank()) throw MismatchError("word rank differs from alphabet");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) emit(static_cast<int>(i), e[i]);
        return out;
    }
    const auto letters = w.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        const std::int64_t l = letters[i];
        const int gen = static_cast<int>((l > 0 ? l : -l) - 1);
        if (gen >= alphabet.rank()) throw MismatchError("word uses a generator outside the alphabet");
        const auto run = static_cast<std::int64_t>(j - i);
        emit(gen, l > 0 ? run : -run);
        i = j;
    }
    return out;
}

}  // namespace fox

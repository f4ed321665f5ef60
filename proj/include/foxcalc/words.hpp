#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fox {

// Generator set of a free group F_r or of Z^n (abelian regime).
class Alphabet {
public:
    // x1..xr, or t1..tn when abelian.
    static std::shared_ptr<const Alphabet> standard(int rank, bool abelian = false);
    static std::shared_ptr<const Alphabet> named(std::vector<std::string> names, bool abelian = false);

    int rank() const { return static_cast<int>(names_.size()); }
    bool abelian() const { return abelian_; }
    const std::string& name(int gen) const { return names_.at(static_cast<std::size_t>(gen)); }
    const std::vector<std::string>& names() const { return names_; }

    // Resolves a generator token: exact name, lowercase alias a..z, or an
    // uppercase alias for the inverse. Returns a signed 1-based letter.
    std::optional<int> lookup(std::string_view token) const;

    bool operator==(const Alphabet& other) const = default;

private:
    Alphabet(std::vector<std::string> names, bool abelian);
    std::vector<std::string> names_;
    bool abelian_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
bool valid_generator_name(std::string_view name);

// Group element. Free regime: reduced sequence of signed 1-based generator
// indices (+i is x_i, -i is its inverse). Abelian regime: exponent vector.
class Word {
public:
    Word() = default;  // free identity

    static Word identity(int rank, bool abelian);
    static Word generator(int gen, int sign = 1);  // gen is 0-based
    static Word from_exponents(std::vector<std::int64_t> exponents);

    bool abelian() const { return abelian_; }
    bool is_identity() const;
    // Letter count (free) or total absolute degree (abelian).
    std::int64_t length() const;

    std::span<const std::int64_t> letters() const;    // free regime only
    std::span<const std::int64_t> exponents() const;  // abelian regime only
    std::int64_t exponent_sum(int gen) const;

    Word prefix(std::size_t n) const;  // first n letters (free)
    Word suffix(std::size_t from) const;  // letters from index `from` on (free)

    Word inverse() const;

    friend Word operator*(const Word& u, const Word& v);
    friend bool operator==(const Word& u, const Word& v) = default;
    // Shortlex. Throws MismatchError across regimes or ranks.
    friend std::strong_ordering operator<=>(const Word& u, const Word& v);

private:
    std::vector<std::int64_t> data_;
    bool abelian_ = false;

    friend Word reduce(std::span<const std::int64_t> letters);
};

// Free cancellation of adjacent inverse pairs.
Word reduce(std::span<const std::int64_t> letters);
inline Word invert_word(const Word& w) { return w.inverse(); }
std::strong_ordering shortlex_compare(const Word& u, const Word& v);

Word parse_word(std::string_view text, const Alphabet& alphabet);
// Parses a word starting at `pos`, stopping before the first character that
// cannot continue it. Advances `pos`. Offsets in errors are absolute.
Word parse_word_at(std::string_view text, std::size_t& pos, const Alphabet& alphabet);
std::string print_word(const Word& w, const Alphabet& alphabet);

}  // namespace fox

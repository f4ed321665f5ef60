#include <catch_amalgamated.hpp>

#include "foxcalc/errors.hpp"
#include "foxcalc/fox_calculus.hpp"
#include "foxcalc/sampling.hpp"
#include "support.hpp"

using namespace fox;
using fox::test::E;
using fox::test::W;

TEST_CASE("left Fox derivative examples") {
    const Ring R = test::ring_ab();
    CHECK(left_fox_derivative(R, W(R, "a*b"), 0) == R.one());
    CHECK(left_fox_derivative(R, W(R, "A"), 0) == E(R, "-A"));
    const Word zeta = W(R, "a*b*A*B");
    CHECK(left_fox_derivative(R, zeta, 0) == E(R, "1 - a*b*a^-1"));
    CHECK(left_fox_derivative(R, zeta, 1) == E(R, "a - a*b*a^-1*b^-1"));
    CHECK(left_fox_derivative(R, Word(), 0).is_zero());
}

TEST_CASE("right Fox derivative examples") {
    const Ring R = test::ring_ab();
    CHECK(right_fox_derivative(R, W(R, "b^2"), 1) == E(R, "b + 1"));
    CHECK(right_fox_derivative(R, W(R, "B"), 1) == E(R, "-B"));
    CHECK(right_fox_derivative(R, W(R, "a*b"), 0) == E(R, "b"));
}

TEST_CASE("Fox derivatives reject the abelian regime") {
    const Ring L{Alphabet::standard(2, true), CoeffRing::Rational};
    CHECK_THROWS_AS(left_fox_derivative(L, Word::from_exponents({1, 0}), 0), DomainError);
    CHECK_THROWS_AS(right_fox_derivative(L, Word::from_exponents({1, 0}), 0), DomainError);
}

TEST_CASE("fundamental identity and product rules") {
    const Ring R = test::free_ring(3);
    Sampler rng(23);
    for (int s = 0; s < 200; ++s) {
        const Word w = rng.free_word(3, 10);
        RingElem left = R.zero(), right = R.zero();
        for (int i = 0; i < 3; ++i) {
            left += left_fox_derivative(R, w, i) * (R.gen(i) - R.one());
            right += (R.gen(i) - R.one()) * right_fox_derivative(R, w, i);
        }
        REQUIRE(left == R.word(w) - R.one());
        // Right form: sum_j (x_j - 1) d^r w / dx_j = w - 1.
        REQUIRE(right == R.word(w) - R.one());

        const Word u = rng.free_word(3, 8), v = rng.free_word(3, 8);
        for (int i = 0; i < 3; ++i) {
            REQUIRE(left_fox_derivative(R, u * v, i) ==
                    left_fox_derivative(R, u, i) + R.word(u) * left_fox_derivative(R, v, i));
            REQUIRE(right_fox_derivative(R, u * v, i) ==
                    right_fox_derivative(R, u, i) * R.word(v) + right_fox_derivative(R, v, i));
        }
    }
}

TEST_CASE("extend_derivation examples") {
    const Ring R = test::ring_ab();
    const Derivation d(Side::Left, R, {R.one(), R.zero()});
    CHECK(extend_derivation(d, W(R, "a*b")) == R.one());
    CHECK(extend_derivation(d, Word()).is_zero());
    const Derivation r(Side::Right, R, {E(R, "b"), E(R, "a - 1")});
    CHECK(extend_derivation(r, Word()).is_zero());

    const Derivation shift(Side::Left, R, {E(R, "a - 1"), E(R, "b - 1")});
    Sampler rng(8);
    for (int s = 0; s < 100; ++s) {
        const Word w = rng.free_word(2, 10);
        REQUIRE(extend_derivation(shift, w) == R.word(w) - R.one());
    }
}

TEST_CASE("two extension paths agree") {
    for (CoeffRing coeff : {CoeffRing::Rational, CoeffRing::Integer, CoeffRing::Mod2}) {
        const Ring R = test::free_ring(3, coeff);
        Sampler rng(31);
        for (int s = 0; s < 200; ++s) {
            std::vector<RingElem> values;
            for (int i = 0; i < 3; ++i) values.push_back(rng.ring_elem(R, 3, 3));
            const Side side = s % 2 ? Side::Left : Side::Right;
            const Derivation d(side, R, values);
            const Word w = rng.free_word(3, 8);
            REQUIRE(extend_derivation(d, w) == extend_derivation_recursive(d, w));
        }
    }
}

TEST_CASE("coboundary derivations") {
    const Ring R = test::ring_ab();
    const Derivation left = coboundary_derivation(R.one(), Side::Left);
    CHECK(extend_derivation(left, W(R, "a*b")) == E(R, "1 - a*b"));
    const Derivation right = coboundary_derivation(R.one(), Side::Right);
    const RingElem b1 = R.gen(0), b2 = R.gen(1);
    CHECK((R.one() - b1) * b2 + (R.one() - b2) == R.one() - b1 * b2);
    CHECK(extend_derivation(right, W(R, "a*b")) == E(R, "1 - a*b"));
    const Derivation zero = coboundary_derivation(R.zero(), Side::Left);
    for (const auto& v : zero.gen_values) CHECK(v.is_zero());

    Sampler rng(4);
    for (int s = 0; s < 50; ++s) {
        const RingElem c = rng.ring_elem(R, 3, 3);
        for (Side side : {Side::Left, Side::Right}) {
            const Derivation d = coboundary_derivation(c, side);
            REQUIRE(is_derivation(d, 20, static_cast<std::uint64_t>(s)).passed);
            const Word g = rng.free_word(2, 7);
            REQUIRE(extend_derivation(d, g) == coboundary_value(c, side, g));
        }
    }
}

TEST_CASE("is_derivation accepts tables and rejects a corrupted engine") {
    const Ring R = test::free_ring(2);
    Sampler rng(12);
    for (Side side : {Side::Left, Side::Right}) {
        const Derivation d(side, R, {rng.ring_elem(R, 3, 3), rng.ring_elem(R, 3, 3)});
        const CheckReport ok = is_derivation(d, 200, 9);
        CHECK(ok.passed);
        CHECK(ok.line() == std::string("PASS ") + std::string(side_name(side)) + "-derivation samples=200 seed=9");

        // Drop the last letter's contribution.
        auto broken = [&](const Word& w) {
            const auto n = w.letters().size();
            return extend_derivation(d, n > 1 ? w.prefix(n - 1) : w);
        };
        const CheckReport bad = check_derivation_law(side, R, broken, 200, 9);
        CHECK_FALSE(bad.passed);
        CHECK(bad.line().rfind("FAIL ", 0) == 0);
        CHECK(bad.line().find("counterexample=u=") != std::string::npos);
    }
}

TEST_CASE("derivation construction validates inputs") {
    const Ring R = test::free_ring(2);
    CHECK_THROWS_AS(Derivation(Side::Left, R, {R.one()}), MismatchError);
    const Ring S = test::free_ring(2, CoeffRing::Mod2);
    CHECK_THROWS_AS(Derivation(Side::Left, R, {R.one(), S.one()}), MismatchError);
}

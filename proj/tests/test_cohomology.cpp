#include <catch_amalgamated.hpp>

#include "foxcalc/cohomology.hpp"
#include "foxcalc/errors.hpp"
#include "foxcalc/fundamental_solver.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fox;
using fox::test::E;
using fox::test::W;

namespace {

GroupElem G(const Word& w) { return GroupElem{w, Word()}; }
GroupElem P(const Word& a, const Word& b) { return GroupElem{a, b}; }

// Deliberately non-cocycle cochains of degree n.
RingCochain generic_cochain(const GroupDesc& g, ModuleKind module, int degree, const RingElem& m1, const RingElem& m2) {
    return RingCochain{degree, g, module, [g, m1, m2](const std::vector<GroupElem>& x) {
                           const Ring& R = g.ring;
                           RingElem out = m1;
                           Word acc = R.identity();
                           for (std::size_t k = 0; k < x.size(); ++k) {
                               const Word w = x[k].first * x[k].first * x[k].second;
                               out = out * R.word(w) + m2 * R.word(acc);
                               acc = acc * x[k].first.inverse() * x[k].second;
                           }
                           return out;
                       }};
}

TensorCochain generic_tensor_cochain(const GroupDesc& g, int degree) {
    return TensorCochain{degree, g, ModuleKind::Tensor, [g](const std::vector<GroupElem>& x) {
                             const Ring& R = g.ring;
                             TensorElem out(R);
                             out.add_term(R.identity(), R.gen_word(0), 2);
                             Word acc = R.identity();
                             for (const auto& e : x) {
                                 acc = acc * e.first * e.second.inverse();
                                 out += TensorElem::pure(R.word(acc) - R.word(e.second), R.word(e.first * e.first));
                             }
                             return out;
                         }};
}

std::vector<Derivation> seeded_derivation_pair(const Ring& R, std::uint64_t seed) {
    Sampler rng(seed);
    std::vector<RingElem> l, r;
    for (int i = 0; i < R.rank(); ++i) {
        l.push_back(rng.ring_elem(R, 3, 2));
        r.push_back(rng.ring_elem(R, 3, 2));
    }
    return {Derivation(Side::Left, R, l), Derivation(Side::Right, R, r)};
}

}  // namespace

TEST_CASE("degree-0 coboundaries") {
    const Ring R = test::ring_ab();
    const GroupDesc F{GroupKind::Free, R};
    const RingElem m = E(R, "2 a - b^2");
    const Word g = W(R, "a*B");
    CHECK(coboundary(constant_cochain(F, ModuleKind::LeftRegular, m))({G(g)}) == R.word(g) * m - m);
    CHECK(coboundary(constant_cochain(F, ModuleKind::Conjugation, m))({G(g)}) ==
          R.word(g) * m * R.word(g.inverse()) - m);
    CHECK(coboundary(constant_cochain(F, ModuleKind::RightRegular, m))({G(g)}) == m - m * R.word(g));
}

TEST_CASE("delta squared vanishes for every module") {
    const Ring R = test::ring_ab();
    const RingElem m1 = E(R, "1 - 2 a*b"), m2 = E(R, "b^-1 + 3");
    const GroupDesc F{GroupKind::Free, R};
    const GroupDesc Pg{GroupKind::Product, R};
    const Ring L{Alphabet::standard(2, true), CoeffRing::Rational};
    const GroupDesc A{GroupKind::Abelian, L};
    const RingElem l1 = L.parse("t1 - 2"), l2 = L.parse("t2^-1");

    struct Case {
        GroupDesc g;
        ModuleKind m;
        RingElem a, b;
    };
    const std::vector<Case> cases = {
        {F, ModuleKind::LeftRegular, m1, m2},  {F, ModuleKind::RightRegular, m1, m2},
        {F, ModuleKind::Conjugation, m1, m2},  {Pg, ModuleKind::ProductBimodule, m1, m2},
        {A, ModuleKind::LeftRegular, l1, l2},  {A, ModuleKind::RightRegular, l1, l2},
    };
    for (const auto& c : cases) {
        for (int degree : {0, 1}) {
            const RingCochain f = generic_cochain(c.g, c.m, degree, c.a, c.b);
            const RingCochain df = coboundary(f);
            INFO(std::string(module_name(c.m)) << " degree " << degree);
            if (degree == 1) REQUIRE_FALSE(check_vanishes(df, "df", 20, 1, 3).passed);
            const CheckReport rep = check_vanishes(coboundary(df), "dd", 100, 2, 3);
            INFO(rep.line());
            REQUIRE(rep.passed);
        }
    }
    for (int degree : {0, 1}) {
        const TensorCochain t = generic_tensor_cochain(Pg, degree);
        REQUIRE(check_vanishes(coboundary(coboundary(t)), "dd-tensor", 100, 3, 3).passed);
    }
    CHECK_THROWS_AS(coboundary(generic_cochain(F, ModuleKind::LeftRegular, 4, m1, m2)), DomainError);
}

TEST_CASE("1-cochain coboundary encodes the derivation laws") {
    const Ring R = test::free_ring(2);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto d = seeded_derivation_pair(R, seed);
        CHECK(check_cocycle(derivation_cochain(d[0]), 50, seed).passed);
        CHECK(check_cocycle(derivation_cochain(d[1]), 50, seed).passed);
        CHECK(check_cocycle(left_cocycle_of_right_derivation(d[1]), 50, seed).passed);
    }
    const GroupDesc F{GroupKind::Free, R};
    const RingCochain square{1, F, ModuleKind::LeftRegular, [R](const std::vector<GroupElem>& x) {
                                 return R.word(x[0].first * x[0].first) - R.one();
                             }};
    CHECK_FALSE(check_cocycle(square, 50, 1).passed);
    const RingCochain shift{1, F, ModuleKind::LeftRegular, [R](const std::vector<GroupElem>& x) {
                                return R.word(x[0].first) - R.one();
                            }};
    CHECK(check_cocycle(shift, 50, 1).passed);
}

TEST_CASE("kappa is a 2-cocycle in conjugation coefficients") {
    const Ring R = test::ring_ab();
    const FoxPairing only_ab(R, {R.zero(), R.one(), R.zero(), R.zero()});
    CHECK(kappa_from_pairing(only_ab)({G(W(R, "a")), G(W(R, "b"))}) == E(R, "B*A"));
    CHECK(kappa_from_pairing(FoxPairing::zero(R))({G(W(R, "a*b")), G(W(R, "b"))}).is_zero());

    Sampler rng(5);
    std::vector<FoxPairing> pairings = {FoxPairing::zero(R), inner_pairing(E(R, "1 - 2 b")),
                                        test::frozen_genus1_fundamental(CoeffRing::Rational), only_ab};
    for (const auto& p : pairings) {
        const RingCochain k = kappa_from_pairing(p);
        CHECK(k.module == ModuleKind::Conjugation);
        const CheckReport rep = check_cocycle(k, 100, 7);
        INFO(rep.line());
        CHECK(rep.passed);
    }
}

TEST_CASE("quasi-derivations") {
    const Ring R = test::ring_ab();
    const FoxPairing zero = FoxPairing::zero(R);
    const QuasiExtension q0 = quasi_derivation_extend(zero, {R.zero(), R.zero()});
    CHECK(q0.report.passed);
    CHECK(q0.q(W(R, "a*b^-2*a")).is_zero());

    const std::vector<RingElem> vals = {E(R, "1 - b"), E(R, "a^2")};
    const QuasiExtension qd = quasi_derivation_extend(zero, vals);
    // With eta = 0 the law is the two-sided Leibniz rule.
    CHECK(qd.q(W(R, "a^-1")) == -(E(R, "A") * vals[0] * E(R, "A")));
    Sampler rng(3);
    for (int s = 0; s < 50; ++s) {
        const Word u = rng.free_word(2, 5), v = rng.free_word(2, 5);
        REQUIRE(qd.q(u * v) == qd.q(u) * R.word(v) + R.word(u) * qd.q(v));
    }

    const FoxPairing fund = test::frozen_genus1_fundamental(CoeffRing::Rational);
    const QuasiExtension qf = quasi_derivation_extend(fund, {R.zero(), R.zero()}, 100, 4);
    CHECK(qf.report.passed);
    CHECK(qf.report.line() == "PASS quasi-derivation samples=100 seed=4");

    const QuasiExtension qr = quasi_derivation_extend(inner_pairing(E(R, "b")), vals, 100, 5);
    CHECK(qr.report.passed);

    // Direct two-splitting: q(uv) computed from q(u), q(v).
    for (int s = 0; s < 30; ++s) {
        const Word u = rng.free_word(2, 5), v = rng.free_word(2, 5);
        REQUIRE(qf.q(u * v) == qf.q(u) * R.word(v) + R.word(u) * qf.q(v) + evaluate(fund, u, v));
    }
}

TEST_CASE("mu contraction") {
    const Ring R = test::ring_ab();
    TensorElem ab(R);
    ab.add_term(W(R, "a"), W(R, "b"), 1);
    CHECK(mu_contract(ab) == E(R, "a*B"));
    TensorElem gg(R);
    gg.add_term(W(R, "a*b"), W(R, "a*b"), 1);
    CHECK(mu_contract(gg) == R.one());

    Sampler rng(8);
    for (int s = 0; s < 50; ++s) {
        TensorElem t(R);
        RingElem expected = R.zero();
        for (int k = 0; k < 3; ++k) {
            const Word x = rng.free_word(2, 4), y = rng.free_word(2, 4);
            const Scalar c = rng.range(-3, 3);
            t.add_term(x, y, c);
            expected += R.word(x * y.inverse()).scale(c);
        }
        REQUIRE(mu_contract(t) == expected);
        // Equivariance for (g,h).(x (x) y) = gx (x) hy and (g,h).m = g m h^-1.
        const GroupDesc Pg{GroupKind::Product, R};
        const GroupElem gh = sample_group_elem(Pg, rng, 4);
        REQUIRE(mu_contract(act(ModuleKind::Tensor, Pg, gh, t)) ==
                act(ModuleKind::ProductBimodule, Pg, gh, mu_contract(t)));
    }
}

TEST_CASE("cross product of 1-cocycles") {
    const Ring R = test::free_ring(2);
    const GroupDesc F{GroupKind::Free, R};
    const RingCochain zero{1, F, ModuleKind::LeftRegular, [R](const std::vector<GroupElem>&) { return R.zero(); }};
    const TensorCochain zz = cross_product_1_1(zero, zero);
    CHECK(zz({P(W(R, "a"), W(R, "b")), P(W(R, "b"), W(R, "A"))}).is_zero());

    for (std::uint64_t seed : {11u, 12u}) {
        const auto d = seeded_derivation_pair(R, seed);
        const TensorCochain x = cross_product_1_1(derivation_cochain(d[0]), left_cocycle_of_right_derivation(d[1]));
        const CheckReport rep = check_cocycle(x, 50, seed, 3);
        INFO(rep.line());
        CHECK(rep.passed);
        CHECK(check_cocycle(mu_compose(x), 50, seed, 3).passed);
    }
    const RingCochain bad{1, F, ModuleKind::LeftRegular,
                          [R](const std::vector<GroupElem>& x) { return R.word(x[0].first * x[0].first); }};
    CHECK_THROWS_AS(cross_product_1_1(bad, zero), DomainError);
}

TEST_CASE("rho of a cross product of derivations is the derivation pairing") {
    for (int rank : {2, 4}) {
        const Ring R = test::free_ring(rank);
        for (std::uint64_t seed : {21u, 22u, 23u}) {
            const auto d = seeded_derivation_pair(R, seed);
            const RingCochain f =
                mu_compose(cross_product_1_1(derivation_cochain(d[0]), left_cocycle_of_right_derivation(d[1])));
            const RhoResult rho = rho_map(f, [R](const Word&) { return R.zero(); });
            CHECK(rho.side_conditions.passed);
            const FoxPairing expected = pairing_from_derivations(d[0], d[1]);
            Sampler rng(seed);
            for (int s = 0; s < 50; ++s) {
                const Word g = rng.free_word(rank, 4), h = rng.free_word(rank, 4);
                REQUIRE(rho.eta(R.word(g), R.word(h)) == evaluate(expected, g, h));
            }
            CHECK(check_axioms(rho.eta, R, SampleOptions{30, seed, 3}).passed);
        }
    }
}

TEST_CASE("rho of zero and of a non-product cocycle") {
    const Ring R = test::ring_ab();
    const GroupDesc Pg{GroupKind::Product, R};
    const RingCochain zero{2, Pg, ModuleKind::ProductBimodule, [R](const std::vector<GroupElem>&) { return R.zero(); }};
    const RhoResult r0 = rho_map(zero, [R](const Word&) { return R.zero(); });
    CHECK(r0.eta(E(R, "a + 2 b"), E(R, "a*b")).is_zero());

    // f = mu(u x v) + delta c, with c((a,b)) = q(b) - q(a) + (1-a) c0 (1-b).
    const auto d = seeded_derivation_pair(R, 31);
    const RingCochain base =
        mu_compose(cross_product_1_1(derivation_cochain(d[0]), left_cocycle_of_right_derivation(d[1])));
    const WordFunction q = [R](const Word& g) { return R.word(g * g) - R.word(g) + R.word(g) * R.gen(1); };
    const WordFunction q_fixed = [q, R](const Word& g) { return q(g) - q(R.identity()); };
    const RingElem c0 = E(R, "2 - a*b");
    const RingCochain c{1, Pg, ModuleKind::ProductBimodule, [R, q_fixed, c0](const std::vector<GroupElem>& x) {
                            const Word& a = x[0].first;
                            const Word& b = x[0].second;
                            return q_fixed(b) - q_fixed(a) + (R.one() - R.word(a)) * c0 * (R.one() - R.word(b));
                        }};
    const RingCochain dc = coboundary(c);
    const RingCochain f{2, Pg, ModuleKind::ProductBimodule,
                        [base, dc](const std::vector<GroupElem>& x) { return base(x) + dc(x); }};
    CHECK(check_cocycle(f, 30, 1, 3).passed);

    const RhoResult rho = rho_map(f, q_fixed);
    CHECK(check_axioms(rho.eta, R, SampleOptions{50, 2, 3}).passed);
    const FoxPairing expected = pairing_from_derivations(d[0], d[1]);
    Sampler rng(9);
    for (int s = 0; s < 30; ++s) {
        const Word g = rng.free_word(2, 4), h = rng.free_word(2, 4);
        REQUIRE(rho.eta(R.word(g), R.word(h)) == evaluate(expected, g, h));
    }

    CHECK_THROWS_AS(rho_map(f, [R](const Word&) { return R.zero(); }), DomainError);
}

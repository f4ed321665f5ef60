#include <catch_amalgamated.hpp>

#include "foxcalc/errors.hpp"
#include "foxcalc/fundamental_solver.hpp"
#include "foxcalc/sampling.hpp"
#include "oracles.hpp"

using namespace fox;

namespace {

// Word substitution x_i -> images[i], extended to words and ring elements.
struct Automorphism {
    std::vector<Word> images;

    Word operator()(const Word& w) const {
        Word out;
        for (auto l : w.letters()) {
            const Word& img = images[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
            out = out * (l > 0 ? img : img.inverse());
        }
        return out;
    }
};

Automorphism automorphism(const Ring& R, const std::vector<std::string>& images) {
    Automorphism f;
    for (const auto& s : images) f.images.push_back(R.parse_word(s));
    return f;
}

}  // namespace

TEST_CASE("surface presets") {
    const SurfacePreset g1 = surface_preset(1, CoeffRing::Rational);
    CHECK(g1.presentation.alphabet->names() == std::vector<std::string>{"a", "b"});
    CHECK(g1.ring.print(g1.presentation.boundary) == "a*b*a^-1*b^-1");
    CHECK(g1.l_start == 2);
    CHECK(g1.l_max == 8);
    const SurfacePresentation g2 = surface_presentation(2);
    CHECK(g2.alphabet->rank() == 4);
    CHECK(g2.boundary.length() == 8);
    for (int i = 0; i < 4; ++i) CHECK(g2.boundary.exponent_sum(i) == 0);
    CHECK_THROWS_AS(surface_preset(0, CoeffRing::Rational), DomainError);
}

TEST_CASE("boundary derivative row") {
    const SurfacePreset g1 = surface_preset(1, CoeffRing::Rational);
    const auto row = boundary_derivative_row(g1.presentation, CoeffRing::Rational);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == g1.ring.parse("1 - a*b*A"));
    CHECK(row[1] == g1.ring.parse("a - a*b*A*B"));
    for (int genus : {1, 2, 3}) {
        const SurfacePreset sp = surface_preset(genus, CoeffRing::Rational);
        const auto r = boundary_derivative_row(sp.presentation, CoeffRing::Rational);
        RingElem sum = sp.ring.zero();
        for (int i = 0; i < sp.ring.rank(); ++i) sum += r[static_cast<std::size_t>(i)] * (sp.ring.gen(i) - sp.ring.one());
        CHECK(sum == sp.ring.word(sp.presentation.boundary) - sp.ring.one());
    }
}

TEST_CASE("word enumeration and counts") {
    for (int r : {1, 2, 3}) {
        for (int L : {0, 1, 2, 3}) {
            const auto words = enumerate_words(r, L);
            REQUIRE(words.size() == count_words(r, L));
            for (std::size_t k = 1; k < words.size(); ++k) REQUIRE(words[k - 1] < words[k]);
        }
    }
    CHECK(count_words(2, 1) == 5);
    CHECK(count_words(2, 2) == 17);
    CHECK(count_words(4, 2) == 65);
}

TEST_CASE("assembled system size and linearity") {
    const SurfacePresentation sp = surface_presentation(1);
    const AssembledSystem sys = assemble_system(sp, make_support_bound(sp, 1), CoeffRing::Rational);
    CHECK(sys.unknown_count() == 20);
    CHECK(sys.unknowns(2).size() == 20);
    CHECK(sys.bound.equation_length == 1 + 4);
    CHECK_THROWS_AS(assemble_system(sp, make_support_bound(sp, 1), CoeffRing::Integer), DomainError);

    const AssembledSystem s2 = assemble_system(sp, make_support_bound(sp, 2), CoeffRing::Rational);
    const SparseSystem& block = s2.blocks[0];
    SparseSystem doubled(block.cols(), block.field());
    for (std::size_t r = 0; r < block.rows(); ++r) doubled.add_equation(block.matrix()[r], 2 * block.rhs()[r]);
    const auto x = solve_sparse(block).solution;
    const auto y = solve_sparse(doubled).solution;
    for (std::size_t k = 0; k < x.size(); ++k) REQUIRE(y[k] == 2 * x[k]);
}

TEST_CASE("support L=0 is infeasible and has trivial kernel") {
    const SurfacePresentation sp = surface_presentation(1);
    try {
        solve_fundamental(sp, CoeffRing::Rational, SolveOptions{0, 0, false});
        FAIL("expected SolveError");
    } catch (const SolveError& e) {
        REQUIRE(e.levels().size() == 1);
        CHECK_FALSE(e.levels()[0].feasible);
        CHECK(e.levels()[0].certificate_verified);
        CHECK(e.levels()[0].line().find("infeasible") != std::string::npos);
    }
    CHECK(verify_uniqueness(sp, make_support_bound(sp, 0), CoeffRing::Rational).kernel_dimension == 0);
    CHECK(verify_uniqueness(sp, make_support_bound(sp, 0), CoeffRing::Mod2).kernel_dimension == 0);
}

TEST_CASE("genus 1 fundamental pairing") {
    for (CoeffRing coeff : {CoeffRing::Rational, CoeffRing::Mod2}) {
        const SurfacePresentation sp = surface_presentation(1);
        const FundamentalResult res = solve_fundamental(sp, coeff, SolveOptions{0, 8, false});
        const Ring& R = res.pairing.ring();
        CHECK(res.bound.max_length == 2);
        REQUIRE(res.levels.size() == 3);
        CHECK_FALSE(res.levels[0].feasible);
        CHECK_FALSE(res.levels[1].feasible);
        CHECK(res.levels[1].certificate_verified);
        CHECK(res.levels[2].feasible);
        CHECK(res.kernel_dimension == 0);
        REQUIRE(res.lambda);
        CHECK(*res.lambda == 1);
        CHECK(res.pairing.entries() == test::frozen_genus1_fundamental(coeff).entries());

        for (const char* g : {"a", "b", "a*b", "A*b"}) {
            const Word w = R.parse_word(g);
            CHECK(evaluate(res.pairing, sp.boundary, w) == R.one() - R.word(w));
        }
        CHECK(check_boundary_condition(res.pairing, sp.boundary, std::nullopt, false, SampleOptions{50, 21, 8}).passed);
        CHECK(verify_uniqueness(sp, res.bound, coeff).kernel_dimension == 0);
        CHECK(res.pairing.metadata().find("L=2 kernel_dim=0 lambda=1") != std::string::npos);
    }
    CHECK_THROWS_AS(solve_fundamental(surface_presentation(1), CoeffRing::Integer, SolveOptions{}), DomainError);
}

TEST_CASE("genus 2 fundamental pairing") {
    for (CoeffRing coeff : {CoeffRing::Rational, CoeffRing::Mod2}) {
        const SurfacePresentation sp = surface_presentation(2);
        const FundamentalResult res = solve_fundamental(sp, coeff, SolveOptions{2, 8, false});
        CHECK(res.bound.max_length == 2);
        CHECK(res.kernel_dimension == 0);
        CHECK(res.pairing.entries() == test::frozen_genus2_fundamental(coeff).entries());
        CHECK(check_boundary_condition(res.pairing, sp.boundary, std::nullopt, false, SampleOptions{50, 22, 8}).passed);
        const IntersectionReport ir = check_aug_intersection(res.pairing.evaluator(), res.pairing.ring(), 2,
                                                             SampleOptions{100, 23, 6});
        CHECK(ir.report.passed);
        REQUIRE(ir.lambda);
        CHECK(*ir.lambda == 1);
    }
}

TEST_CASE("parallel mode is bit-identical") {
    for (int genus : {1, 2}) {
        const SurfacePresentation sp = surface_presentation(genus);
        const FundamentalResult a = solve_fundamental(sp, CoeffRing::Rational, SolveOptions{0, 8, false});
        const FundamentalResult b = solve_fundamental(sp, CoeffRing::Rational, SolveOptions{0, 8, true});
        CHECK(a.pairing.entries() == b.pairing.entries());
        CHECK(a.pairing.metadata() == b.pairing.metadata());
        REQUIRE(a.levels.size() == b.levels.size());
        for (std::size_t k = 0; k < a.levels.size(); ++k) CHECK(a.levels[k].line() == b.levels[k].line());
    }
}

TEST_CASE("automorphisms fixing zeta preserve the fundamental pairing") {
    const FoxPairing p = test::frozen_genus1_fundamental(CoeffRing::Rational);
    const Ring& R = p.ring();
    const Word zeta = R.parse_word("a*b*A*B");
    const std::vector<Automorphism> autos = {
        automorphism(R, {"a*b", "b"}),
        automorphism(R, {"a", "b*a"}),
        // conjugation by zeta
        Automorphism{{zeta * R.parse_word("a") * zeta.inverse(), zeta * R.parse_word("b") * zeta.inverse()}},
    };
    Sampler rng(60);
    for (const auto& f : autos) {
        REQUIRE(f(zeta) == zeta);
        for (int s = 0; s < 50; ++s) {
            const Word g = rng.free_word(2, 5), h = rng.free_word(2, 5);
            REQUIRE(evaluate(p, f(g), f(h)) == evaluate(p, g, h).map_words(f));
        }
    }

    const FoxPairing p2 = test::frozen_genus2_fundamental(CoeffRing::Rational);
    const Ring& R2 = p2.ring();
    const Automorphism f2 = automorphism(R2, {"a1*b1", "b1", "a2", "b2*a2"});
    REQUIRE(f2(surface_presentation(2).boundary) == surface_presentation(2).boundary);
    for (int s = 0; s < 50; ++s) {
        const Word g = rng.free_word(4, 4), h = rng.free_word(4, 4);
        REQUIRE(evaluate(p2, f2(g), f2(h)) == evaluate(p2, g, h).map_words(f2));
    }
}

#include "foxcalc/cohomology.hpp"
#include "foxcalc/errors.hpp"
#include "foxcalc/fox_calculus.hpp"
#include "foxcalc/fox_pairing.hpp"
#include "foxcalc/fundamental_solver.hpp"
#include "foxcalc/higher_pairing.hpp"
#include "foxcalc/pairing_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace fox;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

struct Common {
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    int max_len = 5;

    SampleOptions options() const { return SampleOptions{samples, seed, max_len}; }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--samples", c.samples, "Number of sampled cases")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Sampler seed")->capture_default_str();
    cmd->add_option("--max-len", c.max_len, "Maximum sampled word length")->capture_default_str();
}

struct RingSpec {
    std::string names;
    int rank = 0;
    std::string coeff = "Q";

    Ring build() const {
        const CoeffRing k = parse_coeff_ring(coeff);
        if (!names.empty()) {
            std::vector<std::string> list;
            std::stringstream ss(names);
            for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
            return Ring{Alphabet::named(list), k};
        }
        if (rank <= 0) throw UsageError("give --names or a positive --rank");
        return Ring{Alphabet::standard(rank), k};
    }
};

void add_ring(CLI::App* cmd, RingSpec& r) {
    cmd->add_option("--names", r.names, "Comma-separated generator names");
    cmd->add_option("--rank", r.rank, "Use generators x1..xr");
    cmd->add_option("--coeff", r.coeff, "Coefficients: Q, Z or F2")->capture_default_str();
}

// Semicolon-separated list of ring elements.
std::vector<RingElem> parse_list(const Ring& ring, const std::string& text) {
    std::vector<RingElem> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ';');) out.push_back(ring.parse(item));
    return out;
}

std::vector<RingElem> values_or_zero(const Ring& ring, const std::string& text) {
    if (text.empty()) return std::vector<RingElem>(static_cast<std::size_t>(ring.rank()), ring.zero());
    auto v = parse_list(ring, text);
    if (static_cast<int>(v.size()) != ring.rank())
        throw UsageError("expected " + std::to_string(ring.rank()) + " values, got " + std::to_string(v.size()));
    return v;
}

int report(const CheckReport& r) {
    std::cout << r.line() << '\n';
    return r.passed ? kOk : kCheckFailed;
}

int combine(int a, int b) { return std::max(a, b); }

void emit_pairing(const FoxPairing& p, const std::string& out) {
    if (out.empty())
        std::cout << serialize_pairing(p);
    else
        write_pairing_file(out, p);
}

// ---- verbs ----

struct SolveArgs {
    int genus = 1;
    std::string coeff = "Q";
    int l_start = 2;
    int l_max = 8;
    std::string out;
    bool parallel = false;
    bool verbose = false;
};

int run_solve(const SolveArgs& a) {
    const CoeffRing k = parse_coeff_ring(a.coeff);
    if (a.genus < 1) throw UsageError("--genus must be at least 1");
    try {
        const FundamentalResult res =
            solve_fundamental(surface_presentation(a.genus), k, SolveOptions{a.l_start, a.l_max, a.parallel});
        if (a.verbose)
            for (const auto& level : res.levels) std::cout << level.line() << '\n';
        std::cout << "L=" << res.bound.max_length << " kernel_dim=" << res.kernel_dimension
                  << " lambda=" << (res.lambda ? format_scalar(*res.lambda) : std::string("none")) << '\n';
        emit_pairing(res.pairing, a.out);
        return kOk;
    } catch (const SolveError& e) {
        for (const auto& level : e.levels()) std::cout << level.line() << '\n';
        std::cerr << "foxcalc: " << e.what() << '\n';
        return kCheckFailed;
    }
}

struct EvalArgs {
    std::string pairing, left, right;
};

int run_eval(const EvalArgs& a) {
    const FoxPairing p = read_pairing_file(a.pairing);
    const Ring& R = p.ring();
    std::cout << evaluate(p, R.parse(a.left), R.parse(a.right)).str() << '\n';
    return kOk;
}

struct CheckArgs {
    std::string pairing;
    bool axioms = false, skew = false, containment = false, normalized = false, aug = false;
    std::string boundary, a_s;
    int genus = 0;
    Common common;
};

int run_check(const CheckArgs& a) {
    if (!a.axioms && !a.skew && a.boundary.empty() && !a.aug)
        throw UsageError("choose at least one of --axioms, --skew, --boundary, --aug-intersection");
    if (!a.a_s.empty() && a.normalized) throw UsageError("--a-s and --normalized are exclusive");
    const FoxPairing p = read_pairing_file(a.pairing);
    const SampleOptions opt = a.common.options();
    int status = kOk;
    if (a.axioms) status = combine(status, report(check_axioms(p, opt)));
    if (a.skew) status = combine(status, report(check_skew_identity(p, opt)));
    if (!a.boundary.empty()) {
        std::optional<RingElem> a_s;
        if (!a.a_s.empty()) a_s = p.ring().parse(a.a_s);
        status = combine(status, report(check_boundary_condition(p, p.ring().parse_word(a.boundary), a_s,
                                                                 a.containment, opt)));
    }
    if (a.aug) {
        const int genus = a.genus > 0 ? a.genus : p.rank() / 2;
        const IntersectionReport r = check_aug_intersection(p.evaluator(), p.ring(), genus, opt);
        status = combine(status, report(r.report));
        if (r.lambda) std::cout << "lambda=" << format_scalar(*r.lambda) << '\n';
    }
    return status;
}

struct TransposeArgs {
    std::string pairing, out;
};

int run_transpose(const TransposeArgs& a) {
    emit_pairing(transpose(read_pairing_file(a.pairing)), a.out);
    return kOk;
}

struct DeriveArgs {
    std::string elem, gen, side = "left";
    RingSpec ring;
};

int run_derive(const DeriveArgs& a) {
    const Ring R = a.ring.build();
    const auto letter = R.alphabet->lookup(a.gen);
    if (!letter || *letter < 0) throw UsageError("unknown generator '" + a.gen + "'");
    const int g = static_cast<int>(*letter) - 1;
    const RingElem x = R.parse(a.elem);
    if (a.side == "left")
        std::cout << left_fox_derivative(x, g).str() << '\n';
    else if (a.side == "right")
        std::cout << right_fox_derivative(x, g).str() << '\n';
    else
        throw UsageError("--side must be left or right");
    return kOk;
}

struct HigherArgs {
    int n = 2;
    std::string left, right, coeff = "Q";
    bool check = false, printed = false;
    Common common;
};

MonomialTuple parse_tuple(const Ring& R, int n, const std::string& text) {
    MonomialTuple out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ';');) out.push_back(R.parse_word(item));
    if (static_cast<int>(out.size()) != n)
        throw UsageError("expected " + std::to_string(n) + " monomials, got " + std::to_string(out.size()));
    return out;
}

int run_higher(const HigherArgs& a) {
    if (a.n < 1) throw UsageError("--n must be positive");
    const CoeffRing k = parse_coeff_ring(a.coeff);
    const HigherPairing hp = a.printed ? printed_zn_higher_pairing(a.n, k) : zn_higher_pairing(a.n, k);
    if (a.left.empty() != a.right.empty()) throw UsageError("give both --left and --right");
    if (a.left.empty() && !a.check) throw UsageError("give --left/--right tuples or --check");
    int status = kOk;
    if (!a.left.empty())
        std::cout << hp.eval(parse_tuple(hp.ring, a.n, a.left), parse_tuple(hp.ring, a.n, a.right)).str() << '\n';
    if (a.check) {
        const int max_abs = std::max(1, a.common.max_len / 2);
        for (Side slot : {Side::Left, Side::Right})
            status = combine(status,
                             report(check_higher_cocycle(hp, slot, a.common.samples, a.common.seed, max_abs)));
    }
    return status;
}

struct KappaArgs {
    std::string pairing, g, h;
    Common common;
};

int run_kappa(const KappaArgs& a) {
    const FoxPairing p = read_pairing_file(a.pairing);
    const RingCochain kappa = kappa_from_pairing(p);
    if (a.g.empty() != a.h.empty()) throw UsageError("give both --left and --right");
    if (!a.g.empty()) {
        std::cout << kappa({GroupElem{p.ring().parse_word(a.g), Word()}, GroupElem{p.ring().parse_word(a.h), Word()}})
                         .str()
                  << '\n';
        return kOk;
    }
    return report(check_cocycle(kappa, a.common.samples, a.common.seed, a.common.max_len));
}

struct QuasiArgs {
    std::string pairing, values, word;
    Common common;
};

int run_quasi(const QuasiArgs& a) {
    const FoxPairing p = read_pairing_file(a.pairing);
    const QuasiExtension ext = quasi_derivation_extend(p, values_or_zero(p.ring(), a.values), a.common.samples,
                                                       a.common.seed, a.common.max_len);
    const int status = report(ext.report);
    if (!a.word.empty()) std::cout << ext.q(p.ring().parse_word(a.word)).str() << '\n';
    return status;
}

struct RhoArgs {
    std::string left_values, right_values, left, right, out;
    RingSpec ring;
    Common common;
};

// rho of mu o (D_l x D_r), compared against the derivation pairing.
int run_rho(const RhoArgs& a) {
    const Ring R = a.ring.build();
    const Derivation dl(Side::Left, R, values_or_zero(R, a.left_values));
    const Derivation dr(Side::Right, R, values_or_zero(R, a.right_values));
    const RingCochain f = mu_compose(cross_product_1_1(derivation_cochain(dl), left_cocycle_of_right_derivation(dr),
                                                       a.common.samples, a.common.seed));
    const RhoResult rho =
        rho_map(f, [R](const Word&) { return R.zero(); }, a.common.samples, a.common.seed, a.common.max_len);
    int status = report(rho.side_conditions);

    const FoxPairing expected = pairing_from_derivations(dl, dr);
    CheckReport agree("rho-equals-derivation-pairing", a.common.samples, a.common.seed);
    Sampler rng(a.common.seed);
    for (std::size_t s = 0; s < a.common.samples && agree.passed; ++s) {
        const Word g = rng.free_word(R.rank(), a.common.max_len), h = rng.free_word(R.rank(), a.common.max_len);
        if (!(rho.eta(R.word(g), R.word(h)) == evaluate(expected, g, h)))
            agree.fail("(" + R.print(g) + ", " + R.print(h) + ")");
    }
    status = combine(status, report(agree));
    if (a.left.empty() != a.right.empty()) throw UsageError("give both --left and --right");
    if (!a.left.empty()) std::cout << rho.eta(R.parse(a.left), R.parse(a.right)).str() << '\n';
    if (!a.out.empty()) {
        std::vector<RingElem> entries;
        for (int i = 0; i < R.rank(); ++i)
            for (int j = 0; j < R.rank(); ++j) entries.push_back(rho.eta(R.gen(i, 1), R.gen(j, 1)));
        write_pairing_file(a.out, FoxPairing(R, std::move(entries), "rho of a derivation cross product"));
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fox pairing toolkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* c_solve = app.add_subcommand("solve", "Solve for the fundamental pairing of a surface with one boundary");
    c_solve->add_option("--genus", solve.genus, "Surface genus")->required();
    c_solve->add_option("--coeff", solve.coeff, "Q or F2")->capture_default_str();
    c_solve->add_option("--l-start", solve.l_start, "First support bound")->capture_default_str();
    c_solve->add_option("--l-max", solve.l_max, "Last support bound")->capture_default_str();
    c_solve->add_option("--out", solve.out, "Write the pairing here instead of stdout");
    c_solve->add_flag("--parallel", solve.parallel, "Solve target blocks on separate threads");
    c_solve->add_flag("--verbose", solve.verbose, "Print one line per support bound");

    EvalArgs eval;
    auto* c_eval = app.add_subcommand("eval", "Evaluate a pairing on two ring elements");
    c_eval->add_option("--pairing", eval.pairing)->required();
    c_eval->add_option("--left", eval.left)->required();
    c_eval->add_option("--right", eval.right)->required();

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "Run property checks on a pairing");
    c_check->add_option("--pairing", check.pairing)->required();
    c_check->add_flag("--axioms", check.axioms, "Derivation laws in both slots");
    c_check->add_flag("--skew", check.skew, "eta + eta^t = (1-g)(1-h)");
    c_check->add_option("--boundary", check.boundary, "Word s for eta(s,g) = a_s (1-g)");
    c_check->add_flag("--normalized", check.normalized, "Boundary check with a_s = 1 (default)");
    c_check->add_option("--a-s", check.a_s, "Boundary factor a_s");
    c_check->add_flag("--containment", check.containment, "Also require eta(s,g) in (s-1)K[G]");
    c_check->add_flag("--aug-intersection", check.aug, "Augmentation against the intersection form");
    c_check->add_option("--genus", check.genus, "Genus for --aug-intersection (default rank/2)");
    add_common(c_check, check.common);

    TransposeArgs tr;
    auto* c_tr = app.add_subcommand("transpose", "Transpose a pairing");
    c_tr->add_option("--pairing", tr.pairing)->required();
    c_tr->add_option("--out", tr.out);

    DeriveArgs derive;
    auto* c_derive = app.add_subcommand("derive", "Fox derivative of a ring element");
    c_derive->add_option("--elem", derive.elem)->required();
    c_derive->add_option("--gen", derive.gen)->required();
    c_derive->add_option("--side", derive.side, "left or right")->capture_default_str();
    add_ring(c_derive, derive.ring);

    HigherArgs higher;
    auto* c_higher = app.add_subcommand("higher", "Higher Fox pairing on Z^n");
    c_higher->add_option("--n", higher.n)->capture_default_str();
    c_higher->add_option("--left", higher.left, "n monomials separated by ';'");
    c_higher->add_option("--right", higher.right, "n monomials separated by ';'");
    c_higher->add_option("--coeff", higher.coeff)->capture_default_str();
    c_higher->add_flag("--check", higher.check, "Sampled cocycle checks in both slots");
    c_higher->add_flag("--printed", higher.printed, "Use the diagonal-correction variant");
    add_common(c_higher, higher.common);

    KappaArgs kappa;
    auto* c_kappa = app.add_subcommand("kappa", "2-cochain eta(g,h) h^-1 g^-1");
    c_kappa->add_option("--pairing", kappa.pairing)->required();
    c_kappa->add_option("--left", kappa.g, "Group element g");
    c_kappa->add_option("--right", kappa.h, "Group element h");
    add_common(c_kappa, kappa.common);

    QuasiArgs quasi;
    auto* c_quasi = app.add_subcommand("quasi", "Extend generator values to a quasi-derivation");
    c_quasi->add_option("--pairing", quasi.pairing)->required();
    c_quasi->add_option("--values", quasi.values, "Generator values separated by ';' (default 0)");
    c_quasi->add_option("--word", quasi.word, "Print q on this word");
    add_common(c_quasi, quasi.common);

    RhoArgs rho;
    auto* c_rho = app.add_subcommand("rho", "rho of the cross product of a left and a right derivation");
    c_rho->add_option("--left-values", rho.left_values, "Left derivation on generators, ';'-separated");
    c_rho->add_option("--right-values", rho.right_values, "Right derivation on generators, ';'-separated");
    c_rho->add_option("--left", rho.left);
    c_rho->add_option("--right", rho.right);
    c_rho->add_option("--out", rho.out, "Write the generator matrix of the result");
    add_ring(c_rho, rho.ring);
    add_common(c_rho, rho.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*c_solve) return run_solve(solve);
        if (*c_eval) return run_eval(eval);
        if (*c_check) return run_check(check);
        if (*c_tr) return run_transpose(tr);
        if (*c_derive) return run_derive(derive);
        if (*c_higher) return run_higher(higher);
        if (*c_kappa) return run_kappa(kappa);
        if (*c_quasi) return run_quasi(quasi);
        if (*c_rho) return run_rho(rho);
    } catch (const ParseError& e) {
        std::cerr << "foxcalc: parse error: " << e.what();
        if (e.line() > 0)
            std::cerr << " (line " << e.line() << ")";
        else
            std::cerr << " (offset " << e.offset() << ")";
        std::cerr << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "foxcalc: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

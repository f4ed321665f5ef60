#include "foxcalc/fundamental_solver.hpp"

#include "foxcalc/errors.hpp"

#include <map>
#include <thread>

namespace fox {

namespace {

void require_field(CoeffRing coeff) {
    if (!is_field(coeff)) throw DomainError("the fundamental pairing solver needs a field (Q or F2)");
}

std::vector<SolveResult> solve_blocks(const AssembledSystem& sys, bool parallel, bool want_certificate) {
    std::vector<SolveResult> results(sys.blocks.size());
    if (!parallel) {
        for (std::size_t j = 0; j < sys.blocks.size(); ++j) results[j] = solve_sparse(sys.blocks[j], want_certificate);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(sys.blocks.size());
    for (std::size_t j = 0; j < sys.blocks.size(); ++j)
        workers.emplace_back([&, j] { results[j] = solve_sparse(sys.blocks[j], want_certificate); });
    for (auto& t : workers) t.join();
    return results;
}

}  // namespace

SurfacePresentation surface_presentation(int genus) {
    if (genus < 1) throw DomainError("genus must be at least 1");
    std::vector<std::string> names;
    if (genus == 1) {
        names = {"a", "b"};
    } else {
        for (int i = 1; i <= genus; ++i) {
            names.push_back("a" + std::to_string(i));
            names.push_back("b" + std::to_string(i));
        }
    }
    std::vector<std::int64_t> letters;
    for (int i = 0; i < genus; ++i) {
        const std::int64_t a = 2 * i + 1, b = 2 * i + 2;
        letters.insert(letters.end(), {a, b, -a, -b});
    }
    return SurfacePresentation{genus, Alphabet::named(std::move(names)), reduce(letters)};
}

SurfacePreset surface_preset(int genus, CoeffRing coeff) {
    SurfacePresentation sp = surface_presentation(genus);
    Ring ring{sp.alphabet, coeff};
    return SurfacePreset{std::move(sp), std::move(ring), 2, 8};
}

std::vector<RingElem> boundary_derivative_row(const SurfacePresentation& sp, CoeffRing coeff) {
    const Ring ring{sp.alphabet, coeff};
    return left_fox_gradient(ring.word(sp.boundary));
}

SupportBound make_support_bound(const SurfacePresentation& sp, int max_length) {
    if (max_length < 0) throw DomainError("support bound must be non-negative");
    std::int64_t longest = 0;
    for (const auto& d : boundary_derivative_row(sp, CoeffRing::Rational)) longest = std::max(longest, d.max_length());
    return SupportBound{max_length, max_length + static_cast<int>(longest)};
}

std::size_t count_words(int rank, int max_length) {
    std::size_t total = 1, layer = 1;
    for (int n = 1; n <= max_length; ++n) {
        layer = n == 1 ? static_cast<std::size_t>(2 * rank) : layer * static_cast<std::size_t>(2 * rank - 1);
        total += layer;
    }
    return total;
}

std::vector<Word> enumerate_words(int rank, int max_length) {
    std::vector<Word> out{Word()};
    std::vector<Word> layer{Word()};
    for (int n = 1; n <= max_length; ++n) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (int g = 0; g < rank; ++g) {
                for (int sign : {1, -1}) {
                    const std::int64_t l = sign * (g + 1);
                    if (!w.letters().empty() && w.letters().back() == -l) continue;
                    next.push_back(w * Word::generator(g, sign));
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::size_t AssembledSystem::unknown_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.cols();
    return n;
}

std::size_t AssembledSystem::equation_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    return n;
}

std::vector<Unknown> AssembledSystem::unknowns(int rank) const {
    std::vector<Unknown> out;
    for (const auto& w : support)
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) out.push_back(Unknown{w, i, j});
    return out;
}

AssembledSystem assemble_system(const SurfacePresentation& sp, const SupportBound& bound, CoeffRing coeff) {
    require_field(coeff);
    const Ring ring{sp.alphabet, coeff};
    const int r = ring.rank();
    const auto row = boundary_derivative_row(sp, coeff);

    AssembledSystem sys;
    sys.bound = bound;
    sys.support = enumerate_words(r, bound.max_length);
    const std::size_t cols = sys.support.size() * static_cast<std::size_t>(r);

    // The coefficient matrix is the same for every target; only the RHS moves.
    std::map<Word, SparseSystem::Row> lhs;
    for (std::size_t w = 0; w < sys.support.size(); ++w) {
        for (int i = 0; i < r; ++i) {
            const std::size_t col = w * static_cast<std::size_t>(r) + static_cast<std::size_t>(i);
            for (const auto& [t, c] : row[static_cast<std::size_t>(i)].terms())
                lhs[t * sys.support[w]].emplace_back(col, c);
        }
    }

    for (int j = 0; j < r; ++j) {
        const RingElem target = ring.one() - ring.gen(j);
        auto eqs = lhs;
        for (const auto& [w, c] : target.terms()) eqs.try_emplace(w);
        SparseSystem block(cols, coeff);
        std::vector<Word> words;
        for (auto& [w, entries] : eqs) {
            block.add_equation(entries, target.coefficient(w));
            words.push_back(w);
        }
        sys.blocks.push_back(std::move(block));
        sys.equation_words.push_back(std::move(words));
    }
    return sys;
}

std::string LevelReport::line() const {
    std::string out = "level L=" + std::to_string(max_length) + " unknowns=" + std::to_string(unknowns) +
                      " equations=" + std::to_string(equations) + (feasible ? " feasible" : " infeasible");
    if (!feasible)
        out += " target=" + std::to_string(infeasible_target + 1) +
               " certificate_rows=" + std::to_string(certificate_support) +
               (certificate_verified ? " certificate=verified" : " certificate=unverified");
    return out;
}

FundamentalResult solve_fundamental(const SurfacePresentation& sp, CoeffRing coeff, const SolveOptions& opt) {
    require_field(coeff);
    if (opt.l_start < 0 || opt.l_start > opt.l_max) throw DomainError("need 0 <= l_start <= l_max");
    const Ring ring{sp.alphabet, coeff};
    const int r = ring.rank();
    std::vector<LevelReport> levels;

    for (int L = opt.l_start; L <= opt.l_max; ++L) {
        const AssembledSystem sys = assemble_system(sp, make_support_bound(sp, L), coeff);
        const auto results = solve_blocks(sys, opt.parallel, true);

        LevelReport level;
        level.max_length = L;
        level.unknowns = sys.unknown_count();
        level.equations = sys.equation_count();
        level.feasible = true;
        for (std::size_t j = 0; j < results.size(); ++j) {
            if (results[j].consistent) continue;
            level.feasible = false;
            level.infeasible_target = static_cast<int>(j);
            for (const auto& y : results[j].certificate) level.certificate_support += y != 0;
            level.certificate_verified = results[j].certificate_verified;
            break;
        }
        levels.push_back(level);
        if (!level.feasible) continue;

        std::vector<RingElem> entries(static_cast<std::size_t>(r * r), ring.zero());
        std::size_t kernel = 0;
        for (int j = 0; j < r; ++j) {
            const auto& res = results[static_cast<std::size_t>(j)];
            kernel += res.kernel_dimension(sys.blocks[static_cast<std::size_t>(j)].cols());
            for (std::size_t w = 0; w < sys.support.size(); ++w)
                for (int i = 0; i < r; ++i) {
                    const Scalar& c = res.solution[w * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)];
                    if (c != 0) entries[static_cast<std::size_t>(i * r + j)].add_term(sys.support[w], c);
                }
        }
        FoxPairing pairing(ring, std::move(entries));

        // Re-check with the evaluation engine rather than the solver arithmetic.
        for (int j = 0; j < r; ++j)
            if (!(evaluate(pairing, sp.boundary, ring.gen_word(j)) == ring.one() - ring.gen(j)))
                throw Error("internal: solved pairing fails eta(zeta, x_" + std::to_string(j + 1) + ") = 1 - x_" +
                            std::to_string(j + 1));

        FundamentalResult out{std::move(pairing), sys.bound, kernel, std::nullopt, std::move(levels)};
        // I(a1,b1) = 1, so lambda = aug(eta(a1,b1)).
        const Scalar lambda = evaluate(out.pairing, ring.gen_word(0), ring.gen_word(1)).augment();
        if (lambda != 0) out.lambda = lambda;
        std::string meta = "genus=" + std::to_string(sp.genus) + " coeff=" + std::string(coeff_tag(coeff)) +
                           " L=" + std::to_string(L) + " kernel_dim=" + std::to_string(kernel) +
                           " lambda=" + (out.lambda ? format_scalar(*out.lambda) : std::string("none"));
        meta += "\nuniqueness certified only among entries supported on words of length <= L";
        out.pairing.set_metadata(meta);
        return out;
    }
    throw SolveError("no fundamental pairing with support length <= " + std::to_string(opt.l_max), std::move(levels));
}

UniquenessReport verify_uniqueness(const SurfacePresentation& sp, const SupportBound& bound, CoeffRing coeff) {
    const AssembledSystem sys = assemble_system(sp, bound, coeff);
    UniquenessReport rep;
    for (const auto& block : sys.blocks) {
        const std::size_t rk = sparse_rank(block);
        rep.unknowns += block.cols();
        rep.rank += rk;
        rep.kernel_dimension += block.cols() - rk;
    }
    return rep;
}

}  // namespace fox

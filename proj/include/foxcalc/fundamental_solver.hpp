#pragma once

#include "foxcalc/errors.hpp"
#include "foxcalc/fox_pairing.hpp"
#include "foxcalc/sparse_elimination.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fox {

// One-boundary surface group: free on a1,b1,...,ag,bg (a,b for genus 1)
// with boundary word zeta = [a1,b1]...[ag,bg].
struct SurfacePresentation {
    int genus = 0;
    AlphabetPtr alphabet;
    Word boundary;
};

struct SurfacePreset {
    SurfacePresentation presentation;
    Ring ring;
    int l_start = 2;
    int l_max = 8;
};

SurfacePresentation surface_presentation(int genus);
SurfacePreset surface_preset(int genus, CoeffRing coeff);

// (d^l zeta / dx_1, ..., d^l zeta / dx_2g)
std::vector<RingElem> boundary_derivative_row(const SurfacePresentation& sp, CoeffRing coeff);

struct SupportBound {
    int max_length = 0;       // L
    int equation_length = 0;  // L_eq = L + longest word in the derivative row
};

SupportBound make_support_bound(const SurfacePresentation& sp, int max_length);

// Unknown u_ij coefficient on `word`.
struct Unknown {
    Word word;
    int i = 0;
    int j = 0;
};

// Equations decouple by target generator j; block j holds the system
// sum_i (d^l zeta/dx_i) u_ij = 1 - x_j with block-local column indices.
struct AssembledSystem {
    SupportBound bound;
    std::vector<Word> support;                // words of length <= L, shortlex
    std::vector<SparseSystem> blocks;         // one per target j
    std::vector<std::vector<Word>> equation_words;  // per block, row order

    std::size_t unknown_count() const;
    std::size_t equation_count() const;
    // Global ordering: word (shortlex), then (i,j) lexicographic.
    std::vector<Unknown> unknowns(int rank) const;
    // Block column of u_ij on support[w] is w * rank + i.
};

AssembledSystem assemble_system(const SurfacePresentation& sp, const SupportBound& bound, CoeffRing coeff);

struct LevelReport {
    int max_length = 0;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    bool feasible = false;
    // Infeasible levels: the first block without a solution and a verified
    // Farkas certificate for it.
    int infeasible_target = -1;
    std::size_t certificate_support = 0;
    bool certificate_verified = false;

    std::string line() const;
};

struct SolveOptions {
    int l_start = 2;
    int l_max = 8;
    bool parallel = false;
};

struct FundamentalResult {
    FoxPairing pairing;
    SupportBound bound;
    std::size_t kernel_dimension = 0;
    std::optional<Scalar> lambda;
    std::vector<LevelReport> levels;
};

class SolveError : public Error {
public:
    SolveError(const std::string& what, std::vector<LevelReport> levels)
        : Error(what), levels_(std::move(levels)) {}
    const std::vector<LevelReport>& levels() const { return levels_; }

private:
    std::vector<LevelReport> levels_;
};

FundamentalResult solve_fundamental(const SurfacePresentation& sp, CoeffRing coeff, const SolveOptions& opt);

struct UniquenessReport {
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::size_t kernel_dimension = 0;
};

// Kernel of the homogeneous system at the bound. Zero certifies uniqueness
// among pairings supported on words of length <= L only.
UniquenessReport verify_uniqueness(const SurfacePresentation& sp, const SupportBound& bound, CoeffRing coeff);

// Number of reduced words of length <= L in a free group of rank r.
std::size_t count_words(int rank, int max_length);
std::vector<Word> enumerate_words(int rank, int max_length);

}  // namespace fox

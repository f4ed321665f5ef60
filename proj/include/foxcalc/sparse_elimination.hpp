#pragma once

#include "foxcalc/coeff.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace fox {

// Exact sparse system A x = b over Q or F2. Rows are stored as sorted
// (column, value) lists.
class SparseSystem {
public:
    using Row = std::vector<std::pair<std::size_t, Scalar>>;

    SparseSystem(std::size_t cols, CoeffRing field);

    // Duplicate columns in `row` are summed.
    void add_equation(Row row, const Scalar& rhs);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    CoeffRing field() const { return field_; }
    const std::vector<Row>& matrix() const { return rows_; }
    const std::vector<Scalar>& rhs() const { return rhs_; }

    SparseSystem homogeneous() const;
    // System for y with y^T A = 0 and y^T b = 1.
    SparseSystem farkas_dual() const;

private:
    std::size_t cols_;
    CoeffRing field_;
    std::vector<Row> rows_;
    std::vector<Scalar> rhs_;
};

struct SolveResult {
    bool consistent = false;
    std::size_t rank = 0;
    // Particular solution with every free column set to 0.
    std::vector<Scalar> solution;
    // When inconsistent and requested: y with y^T A = 0, y^T b = 1.
    std::vector<Scalar> certificate;
    bool certificate_verified = false;

    std::size_t kernel_dimension(std::size_t cols) const { return cols - rank; }
};

// Fraction-free row reduction (integer rows kept primitive) followed by
// rational back substitution. Pivots are chosen on the least column.
SolveResult solve_sparse(const SparseSystem& system, bool want_certificate = false);
std::size_t sparse_rank(const SparseSystem& system);

bool verify_solution(const SparseSystem& system, const std::vector<Scalar>& x);
bool verify_certificate(const SparseSystem& system, const std::vector<Scalar>& y);

}  // namespace fox

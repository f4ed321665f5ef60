#include "foxcalc/sparse_elimination.hpp"

#include "foxcalc/errors.hpp"

#include <algorithm>
#include <map>

namespace fox {

namespace {

struct IntRow {
    std::vector<std::pair<std::size_t, mpz_class>> entries;  // sorted, nonzero
    mpz_class rhs;
};

// Scales a rational row to a primitive integer row.
IntRow to_integer_row(const SparseSystem::Row& row, const Scalar& rhs, bool mod2) {
    mpz_class den = rhs.get_den();
    for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    IntRow out;
    for (const auto& [c, v] : row) {
        mpz_class x = v.get_num() * (den / v.get_den());
        if (mod2) x = x % 2;
        if (x != 0) out.entries.emplace_back(c, x);
    }
    out.rhs = rhs.get_num() * (den / rhs.get_den());
    if (mod2) out.rhs = out.rhs % 2;
    return out;
}

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row.entries) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.rhs.get_mpz_t());
    if (g == 1) return;
    for (auto& [c, v] : row.entries) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(row.rhs.get_mpz_t(), row.rhs.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*pivot, where a, b cancel the leading entry.
void eliminate(IntRow& row, const IntRow& pivot, bool mod2) {
    const mpz_class a = pivot.entries.front().second;
    const mpz_class b = row.entries.front().second;
    std::vector<std::pair<std::size_t, mpz_class>> merged;
    merged.reserve(row.entries.size() + pivot.entries.size());
    std::size_t i = 0, j = 0;
    auto push = [&](std::size_t col, mpz_class v) {
        if (mod2) v = v % 2;
        if (v != 0) merged.emplace_back(col, std::move(v));
    };
    while (i < row.entries.size() || j < pivot.entries.size()) {
        if (j >= pivot.entries.size() || (i < row.entries.size() && row.entries[i].first < pivot.entries[j].first)) {
            push(row.entries[i].first, a * row.entries[i].second);
            ++i;
        } else if (i >= row.entries.size() || pivot.entries[j].first < row.entries[i].first) {
            push(pivot.entries[j].first, -b * pivot.entries[j].second);
            ++j;
        } else {
            push(row.entries[i].first, a * row.entries[i].second - b * pivot.entries[j].second);
            ++i;
            ++j;
        }
    }
    row.entries = std::move(merged);
    row.rhs = a * row.rhs - b * pivot.rhs;
    if (mod2) row.rhs = row.rhs % 2;
    if (!mod2) make_primitive(row);
}

struct Echelon {
    std::map<std::size_t, IntRow> pivots;  // leading column -> row
    bool consistent = true;
};

Echelon reduce(const SparseSystem& system) {
    const bool mod2 = system.field() == CoeffRing::Mod2;
    Echelon ech;
    for (std::size_t r = 0; r < system.rows(); ++r) {
        IntRow row = to_integer_row(system.matrix()[r], system.rhs()[r], mod2);
        if (!mod2) make_primitive(row);
        while (!row.entries.empty()) {
            auto it = ech.pivots.find(row.entries.front().first);
            if (it == ech.pivots.end()) break;
            eliminate(row, it->second, mod2);
        }
        if (row.entries.empty()) {
            if (row.rhs != 0) ech.consistent = false;
            continue;
        }
        if (row.entries.front().second < 0) {
            for (auto& [c, v] : row.entries) v = -v;
            row.rhs = -row.rhs;
        }
        const std::size_t lead = row.entries.front().first;
        ech.pivots.emplace(lead, std::move(row));
    }
    return ech;
}

Scalar in_field(CoeffRing field, const Scalar& v) {
    return field == CoeffRing::Mod2 ? normalize(field, v) : v;
}

}  // namespace

SparseSystem::SparseSystem(std::size_t cols, CoeffRing field) : cols_(cols), field_(field) {
    if (!is_field(field)) throw DomainError("elimination needs a field (Q or F2)");
}

void SparseSystem::add_equation(Row row, const Scalar& rhs) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Row merged;
    for (auto& [c, v] : row) {
        if (c >= cols_) throw DomainError("equation column out of range");
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
        else
            merged.emplace_back(c, v);
    }
    Row clean;
    for (auto& [c, v] : merged) {
        Scalar x = in_field(field_, v);
        if (x != 0) clean.emplace_back(c, std::move(x));
    }
    rows_.push_back(std::move(clean));
    rhs_.push_back(in_field(field_, rhs));
}

SparseSystem SparseSystem::homogeneous() const {
    SparseSystem h(cols_, field_);
    h.rows_ = rows_;
    h.rhs_.assign(rows_.size(), Scalar(0));
    return h;
}

SparseSystem SparseSystem::farkas_dual() const {
    std::vector<Row> by_col(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) by_col[c].emplace_back(r, v);
    SparseSystem dual(rows_.size(), field_);
    for (auto& col : by_col)
        if (!col.empty()) dual.add_equation(std::move(col), 0);
    Row b;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rhs_[r] != 0) b.emplace_back(r, rhs_[r]);
    dual.add_equation(std::move(b), 1);
    return dual;
}

std::size_t sparse_rank(const SparseSystem& system) { return reduce(system.homogeneous()).pivots.size(); }

SolveResult solve_sparse(const SparseSystem& system, bool want_certificate) {
    SolveResult result;
    Echelon ech = reduce(system);
    result.rank = ech.pivots.size();
    result.consistent = ech.consistent;
    if (!ech.consistent) {
        if (want_certificate) {
            const SolveResult dual = solve_sparse(system.farkas_dual(), false);
            if (!dual.consistent) throw Error("internal: inconsistent system without a dual certificate");
            result.certificate = dual.solution;
            result.certificate_verified = verify_certificate(system, result.certificate);
        }
        return result;
    }
    const CoeffRing field = system.field();
    result.solution.assign(system.cols(), Scalar(0));
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
        const IntRow& row = it->second;
        Scalar acc(row.rhs);
        for (std::size_t k = 1; k < row.entries.size(); ++k)
            acc -= Scalar(row.entries[k].second) * result.solution[row.entries[k].first];
        acc /= Scalar(row.entries.front().second);
        result.solution[it->first] = in_field(field, acc);
    }
    return result;
}

bool verify_solution(const SparseSystem& system, const std::vector<Scalar>& x) {
    if (x.size() != system.cols()) return false;
    for (std::size_t r = 0; r < system.rows(); ++r) {
        Scalar acc = 0;
        for (const auto& [c, v] : system.matrix()[r]) acc += v * x[c];
        if (in_field(system.field(), acc - system.rhs()[r]) != 0) return false;
    }
    return true;
}

bool verify_certificate(const SparseSystem& system, const std::vector<Scalar>& y) {
    if (y.size() != system.rows()) return false;
    std::vector<Scalar> combo(system.cols(), Scalar(0));
    Scalar b = 0;
    for (std::size_t r = 0; r < system.rows(); ++r) {
        if (y[r] == 0) continue;
        for (const auto& [c, v] : system.matrix()[r]) combo[c] += y[r] * v;
        b += y[r] * system.rhs()[r];
    }
    for (const auto& v : combo)
        if (in_field(system.field(), v) != 0) return false;
    return in_field(system.field(), b) == 1;
}

}  // namespace fox

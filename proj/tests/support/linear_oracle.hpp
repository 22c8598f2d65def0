// Test-only oracle: exact Gauss-Jordan elimination over rationals. Used to
// solve the (possibly overdetermined) linear systems that the library
// solves with closed-form quotients.
#ifndef PROJGEOM_TESTS_LINEAR_ORACLE_HPP
#define PROJGEOM_TESTS_LINEAR_ORACLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "projgeom/scalar.hpp"

namespace projgeom::testing {

using Row = std::vector<Scalar>;

/// Solves rows * x = rhs. Returns nullopt unless the system is consistent
/// and has exactly one solution.
inline std::optional<std::vector<Scalar>> solve_unique(std::vector<Row> rows, std::vector<Scalar> rhs) {
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t r = 0; r < n_rows; ++r) {
        rows[r].push_back(rhs[r]);
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n_cols && pivot_row < n_rows; ++col) {
        std::size_t found = pivot_row;
        while (found < n_rows && rows[found][col].is_zero()) {
            ++found;
        }
        if (found == n_rows) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        const Scalar lead = rows[pivot_row][col];
        for (auto& v : rows[pivot_row]) {
            v /= lead;
        }
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) {
                continue;
            }
            const Scalar factor = rows[r][col];
            for (std::size_t c = 0; c <= n_cols; ++c) {
                rows[r][c] -= factor * rows[pivot_row][c];
            }
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    if (pivot_cols.size() != n_cols) {
        return std::nullopt;
    }
    for (std::size_t r = pivot_row; r < n_rows; ++r) {
        if (!rows[r][n_cols].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Scalar> x(n_cols);
    for (std::size_t r = 0; r < n_cols; ++r) {
        x[pivot_cols[r]] = rows[r][n_cols];
    }
    return x;
}

}  // namespace projgeom::testing

#endif

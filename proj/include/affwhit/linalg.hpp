#pragma once

/**
 * @file linalg.hpp
 * @brief Exact sparse Gaussian elimination over Q.
 *
 * Rows are inserted one at a time and reduced against the pivots collected
 * so far (incremental row echelon form).  Only nonzero rows are kept, so the
 * memory footprint is bounded by the rank rather than by the row count,
 * which matters for the Whittaker systems where most condition rows are
 * redundant.
 */

#include "affwhit/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace affwhit::linalg {

/// Sparse row: column -> nonzero coefficient.
using SparseRow = std::map<std::size_t, Scalar>;

class Echelon {
public:
    explicit Echelon(std::size_t columns) : columns_(columns) {}

    /// Reduces `row` against the current pivots and keeps it if it is
    /// independent.  Returns true when the rank grew.
    bool insert(SparseRow row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t columns() const { return columns_; }

    /// Basis of the right kernel {x : A x = 0}, one vector per free column,
    /// normalized so the free coordinate is 1.  Ordered by free column.
    std::vector<SparseRow> nullspace() const;

private:
    std::size_t columns_;
    // leading column -> row with leading coefficient 1
    std::map<std::size_t, SparseRow> pivots_;
};

/// Rank of a dense matrix given row by row.
std::size_t rank(const std::vector<std::vector<Scalar>>& rows);

} // namespace affwhit::linalg

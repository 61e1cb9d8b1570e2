#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "vecdil/rational.hpp"

namespace vecdil {

// Dense integer matrix with exact arbitrary-precision entries. Dimensions are
// fixed at construction.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {
        if (rows == 0 || cols == 0)
            fail(errc::invalid_argument, "IntMatrix: dimensions must be positive");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::vector<Int> row(std::size_t i) const;

    IntMatrix times(const IntMatrix& other) const;
    std::vector<Int> times(const std::vector<Int>& x) const;

    // Submatrix of the selected rows, all columns.
    IntMatrix select_rows(const std::vector<std::size_t>& rows) const;

    bool operator==(const IntMatrix& other) const = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

// Exact determinant via fraction-free Bareiss elimination (square input).
Int det_bareiss(const IntMatrix& m);

// Result of a unimodular column reduction of A: transformed = A * U with
// det(U) = +-1, so x <-> y = U^-1 x is a bijection of the integer lattice.
struct UnimodularReduction {
    IntMatrix transformed;
    IntMatrix U;
    IntMatrix U_inverse;
};

enum class ReduceMode {
    first_row,        // row 1 becomes (g, 0, ..., 0), g = gcd of the row, g > 0
    lower_triangular, // additionally clears above-diagonal entries of later rows
};

UnimodularReduction column_reduce(const IntMatrix& a,
                                  ReduceMode mode = ReduceMode::first_row);

// lcm of |det| over all n x n row-submatrices of A with nonzero determinant.
// Requires rank(A) = n (otherwise every minor vanishes).
Int minors_lcm(const IntMatrix& a);

} // namespace vecdil

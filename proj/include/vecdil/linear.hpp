#pragma once

#include <cstddef>
#include <vector>

#include "vecdil/int_matrix.hpp"
#include "vecdil/rational.hpp"

namespace vecdil {

using RatVec = std::vector<Rational>;

class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
        if (rows == 0 || cols == 0)
            fail(errc::invalid_argument, "RatMatrix: dimensions must be positive");
    }

    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

// Unique exact solution of a nonsingular square system M x = rhs.
// Throws singular_matrix if det(M) = 0.
RatVec solve_square(const RatMatrix& m, const RatVec& rhs);

// Exact Gaussian elimination on a general (possibly rectangular) system.
// On a consistent system the returned x is the particular solution with all
// free variables set to zero; rank reports the pivot count.
struct LinearSolution {
    RatVec x;
    std::size_t rank = 0;
    bool consistent = false;
};

LinearSolution solve_exact(RatMatrix m, RatVec rhs);

std::size_t rank_exact(RatMatrix m);

} // namespace vecdil

#include "vecdil/linear.hpp"

#include <utility>

namespace vecdil {

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = Rational(m.at(i, j));
    return out;
}

namespace {

// Forward elimination with column pivot bookkeeping. Returns the list of
// (row, col) pivot positions; `m` and `rhs` are reduced in place.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(RatMatrix& m, RatVec& rhs) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m.at(r, j), m.at(p, j));
            std::swap(rhs[r], rhs[p]);
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.at(i, c) == 0)
                continue;
            Rational f = m.at(i, c) / m.at(r, c);
            m.at(i, c) = 0;
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) -= f * m.at(r, j);
            rhs[i] -= f * rhs[r];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

} // namespace

LinearSolution solve_exact(RatMatrix m, RatVec rhs) {
    if (rhs.size() != m.rows())
        fail(errc::dimension_mismatch, "solve_exact: rhs length differs from row count");
    auto pivots = eliminate(m, rhs);
    LinearSolution sol;
    sol.rank = pivots.size();
    for (std::size_t i = sol.rank; i < m.rows(); ++i)
        if (rhs[i] != 0)
            return sol; // inconsistent
    sol.consistent = true;
    sol.x.assign(m.cols(), Rational(0));
    for (std::size_t k = pivots.size(); k-- > 0;) {
        auto [r, c] = pivots[k];
        Rational acc = rhs[r];
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (m.at(r, j) != 0)
                acc -= m.at(r, j) * sol.x[j];
        sol.x[c] = acc / m.at(r, c);
    }
    return sol;
}

RatVec solve_square(const RatMatrix& m, const RatVec& rhs) {
    if (m.rows() != m.cols())
        fail(errc::dimension_mismatch, "solve_square: matrix not square");
    LinearSolution sol = solve_exact(m, rhs);
    if (sol.rank < m.cols() || !sol.consistent)
        fail(errc::singular_matrix, "solve_square: matrix is singular");
    return sol.x;
}

std::size_t rank_exact(RatMatrix m) {
    RatVec dummy(m.rows(), Rational(0));
    return eliminate(m, dummy).size();
}

} // namespace vecdil

#include "vecdil/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace vecdil {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            fail(errc::dimension_mismatch, "IntMatrix: ragged initializer");
        std::size_t j = 0;
        for (long v : r)
            at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows.front().empty())
        fail(errc::invalid_argument, "IntMatrix: empty row list");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            fail(errc::dimension_mismatch, "IntMatrix: ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = at(i, j);
    return r;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        fail(errc::dimension_mismatch, "IntMatrix::times: inner dimensions differ");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::times(const std::vector<Int>& x) const {
    if (x.size() != cols_)
        fail(errc::dimension_mismatch, "IntMatrix::times: vector length differs");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += at(i, j) * x[j];
    return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    if (rows.empty())
        fail(errc::invalid_argument, "select_rows: empty selection");
    IntMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_)
            fail(errc::index_range, "select_rows: row index out of range");
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(rows[i], j);
    }
    return out;
}

Int det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols())
        fail(errc::dimension_mismatch, "det_bareiss: matrix not square");
    const std::size_t n = m.rows();
    IntMatrix w = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0)
                ++p;
            if (p == n)
                return Int(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    Int d = w.at(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

namespace {

// Extended gcd: returns (g, p, q) with g = gcd(a, b) >= 0 and p*a + q*b = g.
struct Xgcd {
    Int g, p, q;
};

Xgcd extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s(1), s(0);
    Int old_t(0), t(1);
    while (r != 0) {
        Int quot = old_r / r; // truncated is fine, any quotient sequence works
        Int tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

struct ReductionState {
    IntMatrix t;     // A * U so far
    IntMatrix u;     // column operations applied
    IntMatrix u_inv; // inverse, maintained by mirrored row operations
};

void swap_columns(ReductionState& st, std::size_t c0, std::size_t c1) {
    for (std::size_t i = 0; i < st.t.rows(); ++i)
        std::swap(st.t.at(i, c0), st.t.at(i, c1));
    for (std::size_t i = 0; i < st.u.rows(); ++i)
        std::swap(st.u.at(i, c0), st.u.at(i, c1));
    for (std::size_t j = 0; j < st.u_inv.cols(); ++j)
        std::swap(st.u_inv.at(c0, j), st.u_inv.at(c1, j));
}

void negate_column(ReductionState& st, std::size_t c) {
    for (std::size_t i = 0; i < st.t.rows(); ++i)
        st.t.at(i, c) = -st.t.at(i, c);
    for (std::size_t i = 0; i < st.u.rows(); ++i)
        st.u.at(i, c) = -st.u.at(i, c);
    for (std::size_t j = 0; j < st.u_inv.cols(); ++j)
        st.u_inv.at(c, j) = -st.u_inv.at(c, j);
}

// Combine columns c0, c1 so that row `pivot_row` becomes (gcd, 0) there.
// The 2x2 column transform [[p, -b/g], [q, a/g]] has determinant 1; its
// inverse [[a/g, b/g], [-q, p]] is applied as row operations on u_inv.
void gcd_columns(ReductionState& st, std::size_t pivot_row, std::size_t c0,
                 std::size_t c1) {
    const Int a = st.t.at(pivot_row, c0);
    const Int b = st.t.at(pivot_row, c1);
    if (b == 0)
        return;
    auto [g, p, q] = extended_gcd(a, b);
    const Int ag = a / g, bg = b / g;
    for (std::size_t i = 0; i < st.t.rows(); ++i) {
        Int x = st.t.at(i, c0), y = st.t.at(i, c1);
        st.t.at(i, c0) = p * x + q * y;
        st.t.at(i, c1) = ag * y - bg * x;
    }
    for (std::size_t i = 0; i < st.u.rows(); ++i) {
        Int x = st.u.at(i, c0), y = st.u.at(i, c1);
        st.u.at(i, c0) = p * x + q * y;
        st.u.at(i, c1) = ag * y - bg * x;
    }
    for (std::size_t j = 0; j < st.u_inv.cols(); ++j) {
        Int x = st.u_inv.at(c0, j), y = st.u_inv.at(c1, j);
        st.u_inv.at(c0, j) = ag * x + bg * y;
        st.u_inv.at(c1, j) = p * y - q * x;
    }
}

// Clear row `r` to the right of column `c` using gcd column operations, then
// make the diagonal entry positive. Returns false if the row is zero from
// column c onward.
bool reduce_row(ReductionState& st, std::size_t r, std::size_t c) {
    const std::size_t n = st.t.cols();
    if (st.t.at(r, c) == 0) {
        std::size_t p = c + 1;
        while (p < n && st.t.at(r, p) == 0)
            ++p;
        if (p == n)
            return false;
        swap_columns(st, c, p);
    }
    for (std::size_t j = c + 1; j < n; ++j)
        gcd_columns(st, r, c, j);
    if (st.t.at(r, c) < 0)
        negate_column(st, c);
    return true;
}

} // namespace

UnimodularReduction column_reduce(const IntMatrix& a, ReduceMode mode) {
    const std::size_t n = a.cols();
    ReductionState st{a, IntMatrix::identity(n), IntMatrix::identity(n)};
    if (!reduce_row(st, 0, 0))
        fail(errc::degenerate_row, "column_reduce: first row is zero");
    if (mode == ReduceMode::lower_triangular) {
        std::size_t c = 1;
        for (std::size_t r = 1; r < a.rows() && c < n; ++r)
            if (reduce_row(st, r, c))
                ++c;
    }
    return {std::move(st.t), std::move(st.u), std::move(st.u_inv)};
}

namespace {

void submatrix_dets(const IntMatrix& a, std::size_t next, std::vector<std::size_t>& pick,
                    Int& acc, bool& any) {
    const std::size_t n = a.cols();
    if (pick.size() == n) {
        Int d = det_bareiss(a.select_rows(pick));
        if (d != 0) {
            any = true;
            acc = lcm(acc, abs(d));
        }
        return;
    }
    for (std::size_t i = next; i + (n - pick.size()) <= a.rows(); ++i) {
        pick.push_back(i);
        submatrix_dets(a, i + 1, pick, acc, any);
        pick.pop_back();
    }
}

} // namespace

Int minors_lcm(const IntMatrix& a) {
    if (a.rows() < a.cols())
        fail(errc::rank_deficient, "minors_lcm: fewer rows than columns");
    Int acc(1);
    bool any = false;
    std::vector<std::size_t> pick;
    submatrix_dets(a, 0, pick, acc, any);
    if (!any)
        fail(errc::rank_deficient, "minors_lcm: matrix has rank below its column count");
    return acc;
}

} // namespace vecdil

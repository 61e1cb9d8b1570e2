#include "vecdil/count.hpp"

#include <algorithm>
#include <utility>

namespace vecdil {

namespace {

struct Box {
    std::vector<Int> lo, hi;
    bool empty = true;
};

// Integer bounding box of a vertex set: floor/ceil of each coordinate's
// exact min/max, so no lattice point of the hull can be missed.
Box bounding_box(const VertexSet& vs, std::size_t n) {
    Box box;
    if (vs.empty())
        return box;
    box.empty = false;
    box.lo.assign(n, Int(0));
    box.hi.assign(n, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = vs.vertices.front().point[j];
        Rational mx = mn;
        for (const auto& v : vs.vertices) {
            mn = std::min(mn, v.point[j]);
            mx = std::max(mx, v.point[j]);
        }
        box.lo[j] = floor_rat(mn);
        box.hi[j] = ceil_rat(mx);
    }
    return box;
}

template <typename Visit>
void scan_box(const Box& box, Visit&& visit) {
    if (box.empty)
        return;
    const std::size_t n = box.lo.size();
    std::vector<Int> x = box.lo;
    for (;;) {
        visit(x);
        std::size_t j = 0;
        while (j < n) {
            ++x[j];
            if (x[j] <= box.hi[j])
                break;
            x[j] = box.lo[j];
            ++j;
        }
        if (j == n)
            break;
    }
}

void require_chamber(const HRep& p, const Dilation& t, const char* who) {
    if (!is_chamber_point(p, t))
        fail(errc::chamber_violation,
             std::string(who) + ": dilation is not in the chamber of the polytope");
}

enum class RowUse { closed_only, strict_for_relint, equality };

struct FaceCounts {
    Int closed{0};
    Int relint{0};
};

// Lattice points of the face {eq rows tight, other rows <=} of a combined
// system, and of its relative interior. The rows made strict for the
// relative interior are those tight at some vertex of the face but not all
// of them (the rows carving the face's relative boundary).
FaceCounts count_face(const IntMatrix& a, const Dilation& t,
                      const std::vector<std::size_t>& eq_rows) {
    const std::size_t m = a.rows(), n = a.cols();
    VertexSet all = enumerate_vertices(a, t);
    VertexSet face;
    for (const auto& v : all.vertices) {
        bool on = true;
        for (std::size_t r : eq_rows)
            if (!std::binary_search(v.tight_rows.begin(), v.tight_rows.end(), r)) {
                on = false;
                break;
            }
        if (on)
            face.vertices.push_back(v);
    }
    FaceCounts out;
    if (face.empty())
        return out;

    std::vector<RowUse> use(m, RowUse::closed_only);
    for (std::size_t r : eq_rows)
        use[r] = RowUse::equality;
    for (std::size_t r = 0; r < m; ++r) {
        if (use[r] == RowUse::equality)
            continue;
        std::size_t hits = 0;
        for (const auto& v : face.vertices)
            if (std::binary_search(v.tight_rows.begin(), v.tight_rows.end(), r))
                ++hits;
        if (hits > 0 && hits < face.vertices.size())
            use[r] = RowUse::strict_for_relint;
    }

    Box box = bounding_box(face, n);
    scan_box(box, [&](const std::vector<Int>& x) {
        bool in_closed = true;
        bool in_relint = true;
        for (std::size_t r = 0; r < m && in_closed; ++r) {
            Int lhs(0);
            for (std::size_t j = 0; j < n; ++j)
                lhs += a.at(r, j) * x[j];
            switch (use[r]) {
            case RowUse::equality:
                if (lhs != t[r])
                    in_closed = false;
                break;
            case RowUse::strict_for_relint:
                if (lhs > t[r])
                    in_closed = false;
                else if (lhs == t[r])
                    in_relint = false;
                break;
            case RowUse::closed_only:
                if (lhs > t[r])
                    in_closed = false;
                break;
            }
        }
        if (in_closed) {
            ++out.closed;
            if (in_relint)
                ++out.relint;
        }
    });
    return out;
}

} // namespace

CountResult count_brute(const HRep& p, const Dilation& t) {
    require_chamber(p, t, "count_brute");
    const IntMatrix& a = p.matrix();
    const std::size_t m = a.rows(), n = a.cols();
    VertexSet vs = enumerate_vertices(p, t);
    Box box = bounding_box(vs, n);
    CountResult res{Int(0), Int(0), t, CountMethod::brute_force};
    scan_box(box, [&](const std::vector<Int>& x) {
        bool closed = true, interior = true;
        for (std::size_t r = 0; r < m && closed; ++r) {
            Int lhs(0);
            for (std::size_t j = 0; j < n; ++j)
                lhs += a.at(r, j) * x[j];
            if (lhs > t[r])
                closed = false;
            else if (lhs == t[r])
                interior = false;
        }
        if (closed) {
            ++res.closed;
            if (interior)
                ++res.interior;
        }
    });
    return res;
}

namespace {

// One level of the descent. `strict` selects the interior count, which
// replaces every right-hand side t by t - 1 thanks to integrality of both
// sides of each inequality.
Int count_raw(const IntMatrix& a, const Dilation& t, bool strict) {
    const std::size_t n = a.cols();

    // constraints with no variables left are pure feasibility checks
    std::vector<std::size_t> live;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        bool zero = true;
        for (std::size_t j = 0; j < n && zero; ++j)
            if (a.at(r, j) != 0)
                zero = false;
        if (zero) {
            if (t[r] < (strict ? 1 : 0))
                return Int(0);
        } else {
            live.push_back(r);
        }
    }
    if (live.empty())
        fail(errc::internal, "count_raw: slice system lost all constraints");

    if (n == 1) {
        bool has_hi = false, has_lo = false;
        Int hi(0), lo(0);
        for (std::size_t r : live) {
            const Int& c = a.at(r, 0);
            Int rhs = strict ? Int(t[r] - 1) : t[r];
            if (c > 0) {
                Int bound = floor_div(rhs, c);
                if (!has_hi || bound < hi)
                    hi = bound;
                has_hi = true;
            } else {
                Int bound = -floor_div(rhs, Int(-c));
                if (!has_lo || bound > lo)
                    lo = bound;
                has_lo = true;
            }
        }
        if (!has_hi || !has_lo)
            fail(errc::internal, "count_raw: unbounded interval slice");
        return hi >= lo ? Int(hi - lo + 1) : Int(0);
    }

    IntMatrix sys = a.select_rows(live);
    Dilation rhs(live.size());
    for (std::size_t i = 0; i < live.size(); ++i)
        rhs[i] = t[live[i]];

    UnimodularReduction red = column_reduce(sys);
    const IntMatrix& w = red.transformed;
    const Int a11 = w.at(0, 0);

    VertexSet vs = enumerate_vertices(w, rhs);
    if (vs.empty())
        return Int(0);
    Rational min_x1 = vs.vertices.front().point[0];
    for (const auto& v : vs.vertices)
        min_x1 = std::min(min_x1, v.point[0]);

    Int k_lo = ceil_rat(min_x1);
    Int k_hi = floor_div(strict ? Int(rhs[0] - 1) : rhs[0], a11);

    if (w.rows() < 2)
        fail(errc::internal, "count_raw: slice system has a single constraint");
    Int total(0);
    IntMatrix sub(w.rows() - 1, n - 1);
    for (std::size_t i = 1; i < w.rows(); ++i)
        for (std::size_t j = 1; j < n; ++j)
            sub.at(i - 1, j - 1) = w.at(i, j);
    Dilation sub_rhs(w.rows() - 1);
    for (Int k = k_lo; k <= k_hi; ++k) {
        for (std::size_t i = 1; i < w.rows(); ++i)
            sub_rhs[i - 1] = rhs[i] - w.at(i, 0) * k;
        total += count_raw(sub, sub_rhs, strict);
    }
    return total;
}

} // namespace

CountResult count_recursive(const HRep& p, const Dilation& t) {
    require_chamber(p, t, "count_recursive");
    CountResult res{Int(0), Int(0), t, CountMethod::recursive};
    res.closed = count_raw(p.matrix(), t, false);
    res.interior = count_raw(p.matrix(), t, true);
    return res;
}

Int count_facet_closed(const HRep& p, std::size_t row, const Dilation& t) {
    if (row >= p.facet_count())
        fail(errc::index_range, "count_facet_closed: row index out of range");
    require_chamber(p, t, "count_facet_closed");
    return count_face(p.matrix(), t, {row}).closed;
}

Int count_facet_relint(const HRep& p, std::size_t row, const Dilation& t) {
    if (row >= p.facet_count())
        fail(errc::index_range, "count_facet_relint: row index out of range");
    require_chamber(p, t, "count_facet_relint");
    return count_face(p.matrix(), t, {row}).relint;
}

RemovedCount count_removed(const HRep& p, const std::vector<std::size_t>& removed,
                           const Dilation& t) {
    for (std::size_t r : removed)
        if (r >= p.facet_count())
            fail(errc::index_range, "count_removed: row index out of range");
    CountResult whole = count_brute(p, t);
    RemovedCount out{whole.closed, whole.interior};
    for (std::size_t r : removed) {
        FaceCounts fc = count_face(p.matrix(), t, {r});
        out.closed_removed -= fc.closed;
        out.interior_removed += fc.relint;
    }
    return out;
}

namespace {

FaceCounts glue_boundary_counts(const GluedPolytope& g, const GlueEdge& e,
                                const std::vector<Dilation>& blocks) {
    CombinedSystem sys =
        combine_pieces(g.pieces()[e.piece_a], blocks[e.piece_a], g.pieces()[e.piece_b],
                       blocks[e.piece_b]);
    std::vector<std::size_t> eq{e.facet_a,
                                g.pieces()[e.piece_a].facet_count() + e.facet_b};
    return count_face(sys.a, sys.t, eq);
}

} // namespace

Int glue_boundary_closed(const GluedPolytope& g, const GlueEdge& e,
                         const std::vector<Dilation>& blocks) {
    return glue_boundary_counts(g, e, blocks).closed;
}

Int glue_boundary_relint(const GluedPolytope& g, const GlueEdge& e,
                         const std::vector<Dilation>& blocks) {
    return glue_boundary_counts(g, e, blocks).relint;
}

CountResult count_glued(const GluedPolytope& g, const Dilation& t,
                        CountMethod per_piece) {
    GluedInstance inst = glued_dilate(g, t);
    CountResult res{Int(0), Int(0), t, per_piece};
    for (std::size_t k = 0; k < g.pieces().size(); ++k) {
        CountResult piece = per_piece == CountMethod::brute_force
                                ? count_brute(g.pieces()[k], inst.blocks[k])
                                : count_recursive(g.pieces()[k], inst.blocks[k]);
        res.closed += piece.closed;
        res.interior += piece.interior;
    }
    for (const auto& e : g.edges()) {
        FaceCounts fc = glue_boundary_counts(g, e, inst.blocks);
        res.closed -= fc.closed;
        res.interior += fc.relint;
    }
    return res;
}

} // namespace vecdil

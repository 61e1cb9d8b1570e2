#include "vecdil/polytope.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace vecdil {

namespace {

std::string row_label(std::size_t i) {
    return std::to_string(i + 1); // diagnostics use 1-based rows
}

// Iterates over all k-subsets of {0, ..., m-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] != i + m - k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

VertexSet enumerate_vertices(const IntMatrix& a, const Dilation& t) {
    if (t.size() != a.rows())
        fail(errc::dimension_mismatch, "enumerate_vertices: dilation length differs from row count");
    const std::size_t m = a.rows(), n = a.cols();
    VertexSet out;
    if (m < n)
        return out;

    std::map<RatVec, std::vector<std::size_t>> found; // point -> tight rows
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    do {
        RatMatrix sq(n, n);
        RatVec rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                sq.at(i, j) = Rational(a.at(idx[i], j));
            rhs[i] = Rational(t[idx[i]]);
        }
        LinearSolution sol = solve_exact(sq, rhs);
        if (sol.rank < n || !sol.consistent)
            continue; // singular subset: no candidate vertex here
        if (found.count(sol.x))
            continue;
        // feasibility and the full equality set
        std::vector<std::size_t> tight;
        bool feasible = true;
        for (std::size_t r = 0; r < m && feasible; ++r) {
            Rational lhs(0);
            for (std::size_t j = 0; j < n; ++j)
                lhs += Rational(a.at(r, j)) * sol.x[j];
            if (lhs > Rational(t[r]))
                feasible = false;
            else if (lhs == Rational(t[r]))
                tight.push_back(r);
        }
        if (feasible)
            found.emplace(std::move(sol.x), std::move(tight));
    } while (next_combination(idx, m));

    out.vertices.reserve(found.size());
    for (auto& [point, tight] : found)
        out.vertices.push_back(Vertex{point, tight});
    return out;
}

IncidenceStructure incidence(const VertexSet& vs) {
    IncidenceStructure inc;
    inc.canonical.reserve(vs.size());
    for (const auto& v : vs.vertices)
        inc.canonical.push_back(v.tight_rows);
    std::sort(inc.canonical.begin(), inc.canonical.end());
    return inc;
}

std::size_t affine_rank(const std::vector<RatVec>& points) {
    if (points.empty())
        fail(errc::invalid_argument, "affine_rank: empty point set");
    if (points.size() == 1)
        return 0;
    const std::size_t n = points.front().size();
    RatMatrix diff(points.size() - 1, n);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            diff.at(i - 1, j) = points[i][j] - points[0][j];
    return rank_exact(diff);
}

namespace {

std::vector<RatVec> vertex_points(const VertexSet& vs) {
    std::vector<RatVec> pts;
    pts.reserve(vs.size());
    for (const auto& v : vs.vertices)
        pts.push_back(v.point);
    return pts;
}

// Bounded means the recession cone {A x <= 0} is just the origin, which holds
// iff the cone clipped to the unit box has no vertex other than the origin.
bool recession_cone_trivial(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix clipped(m + 2 * n, n);
    Dilation rhs(m + 2 * n, Int(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            clipped.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < n; ++j) {
        clipped.at(m + 2 * j, j) = 1;
        clipped.at(m + 2 * j + 1, j) = -1;
        rhs[m + 2 * j] = 1;
        rhs[m + 2 * j + 1] = 1;
    }
    VertexSet vs = enumerate_vertices(clipped, rhs);
    for (const auto& v : vs.vertices)
        for (const auto& c : v.point)
            if (c != 0)
                return false;
    return true;
}

// Full-dimensional iff every row is slack at some vertex (then the vertex
// barycenter is strictly feasible).
bool full_dimensional(const VertexSet& vs, std::size_t m) {
    if (vs.empty())
        return false;
    std::vector<bool> slack_somewhere(m, false);
    for (const auto& v : vs.vertices) {
        std::size_t k = 0;
        for (std::size_t r = 0; r < m; ++r) {
            bool tight = k < v.tight_rows.size() && v.tight_rows[k] == r;
            if (tight)
                ++k;
            else
                slack_somewhere[r] = true;
        }
    }
    return std::all_of(slack_somewhere.begin(), slack_somewhere.end(),
                       [](bool b) { return b; });
}

} // namespace

HRep::HRep(IntMatrix a, std::vector<Int> b) : a_(std::move(a)), b_(std::move(b)) {
    const std::size_t m = a_.rows(), n = a_.cols();
    if (b_.size() != m)
        fail(errc::dimension_mismatch, "HRep: base vector length differs from row count");
    if (!recession_cone_trivial(a_))
        fail(errc::invalid_argument, "HRep: system is unbounded");
    base_vertices_ = enumerate_vertices(a_, b_);
    if (base_vertices_.empty())
        fail(errc::invalid_argument, "HRep: base instance is empty");
    if (!full_dimensional(base_vertices_, m))
        fail(errc::invalid_argument, "HRep: base instance is not full-dimensional");

    // every row must define a facet, and no two rows the same one
    std::vector<std::vector<std::size_t>> tight_vertex_sets(m);
    for (std::size_t v = 0; v < base_vertices_.size(); ++v)
        for (std::size_t r : base_vertices_.vertices[v].tight_rows)
            tight_vertex_sets[r].push_back(v);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<RatVec> pts;
        for (std::size_t v : tight_vertex_sets[r])
            pts.push_back(base_vertices_.vertices[v].point);
        if (pts.empty() || affine_rank(pts) != n - 1)
            fail(errc::invalid_argument,
                 "HRep: row " + row_label(r) + " does not define a facet");
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = r + 1; s < m; ++s)
            if (tight_vertex_sets[r] == tight_vertex_sets[s])
                fail(errc::invalid_argument, "HRep: rows " + row_label(r) + " and " +
                                                 row_label(s) + " define the same facet");

    base_incidence_ = incidence(base_vertices_);
}

Instance dilate(const HRep& p, const Dilation& t) {
    if (t.size() != p.facet_count())
        fail(errc::dimension_mismatch, "dilate: dilation length differs from facet count");
    return Instance{&p, t};
}

VertexSet enumerate_vertices(const HRep& p, const Dilation& t) {
    if (t.size() != p.facet_count())
        fail(errc::dimension_mismatch, "enumerate_vertices: dilation length differs from facet count");
    return enumerate_vertices(p.matrix(), t);
}

bool is_chamber_point(const HRep& p, const Dilation& t) {
    VertexSet vs = enumerate_vertices(p, t);
    if (!full_dimensional(vs, p.facet_count()))
        return false;
    return incidence(vs) == p.base_incidence();
}

Facet facet(const HRep& p, std::size_t row) {
    if (row >= p.facet_count())
        fail(errc::index_range, "facet: row index out of range");
    // rows tight at some but not all vertices of the facet
    std::vector<const Vertex*> on_facet;
    for (const auto& v : p.base_vertices().vertices)
        if (std::binary_search(v.tight_rows.begin(), v.tight_rows.end(), row))
            on_facet.push_back(&v);
    Facet f{row, {}};
    for (std::size_t r = 0; r < p.facet_count(); ++r) {
        if (r == row)
            continue;
        std::size_t hits = 0;
        for (const Vertex* v : on_facet)
            if (std::binary_search(v->tight_rows.begin(), v->tight_rows.end(), r))
                ++hits;
        if (hits > 0 && hits < on_facet.size())
            f.boundary_rows.push_back(r);
    }
    return f;
}

namespace {

long bounded_draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Dilation perturbed_base(const std::vector<Int>& base, long scale,
                        const std::vector<long>& e) {
    Dilation t(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        t[i] = base[i] * scale + e[i];
    return t;
}

} // namespace

std::vector<Dilation> chamber_samples(const HRep& p, std::size_t count, long radius,
                                      std::uint64_t seed, long perturbation) {
    if (radius < 1)
        fail(errc::invalid_argument, "chamber_samples: radius must be >= 1");
    if (perturbation < 0)
        fail(errc::invalid_argument, "chamber_samples: perturbation must be >= 0");
    std::vector<Dilation> out;
    if (count == 0)
        return out;
    std::mt19937_64 rng(seed);
    std::set<Dilation> seen;
    const std::size_t budget = 200 + 100 * count;
    std::vector<long> e(p.facet_count());
    for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
        long s = bounded_draw(rng, 1, radius);
        for (auto& ei : e)
            ei = bounded_draw(rng, -perturbation, perturbation);
        Dilation t = perturbed_base(p.base(), s, e);
        if (seen.count(t))
            continue;
        if (!is_chamber_point(p, t))
            continue;
        seen.insert(t);
        out.push_back(std::move(t));
    }
    if (out.size() < count)
        fail(errc::insufficient_samples,
             "chamber_samples: found " + std::to_string(out.size()) + " of " +
                 std::to_string(count) + " requested chamber points");
    return out;
}

// --- glued unions ----------------------------------------------------------

CombinedSystem combine_pieces(const HRep& pa, const Dilation& ta, const HRep& pb,
                              const Dilation& tb) {
    const std::size_t n = pa.ambient_dim();
    const std::size_t ma = pa.facet_count(), mb = pb.facet_count();
    IntMatrix a(ma + mb, n);
    Dilation t(ma + mb);
    for (std::size_t i = 0; i < ma; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = pa.matrix().at(i, j);
        t[i] = ta[i];
    }
    for (std::size_t i = 0; i < mb; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a.at(ma + i, j) = pb.matrix().at(i, j);
        t[ma + i] = tb[i];
    }
    return {std::move(a), std::move(t)};
}

namespace {

bool vertex_tight_on(const Vertex& v, std::size_t row) {
    return std::binary_search(v.tight_rows.begin(), v.tight_rows.end(), row);
}

// Shared-boundary vertex set of an edge, given the combined-system vertices.
VertexSet filter_shared(const VertexSet& combined, std::size_t row_a, std::size_t row_b) {
    VertexSet k;
    for (const auto& v : combined.vertices)
        if (vertex_tight_on(v, row_a) && vertex_tight_on(v, row_b))
            k.vertices.push_back(v);
    return k;
}

struct GlueCheck {
    bool ok = false;
    std::string reason;
    VertexSet shared;
};

GlueCheck check_edge(const HRep& pa, const Dilation& ta, const HRep& pb,
                     const Dilation& tb, std::size_t facet_a, std::size_t facet_b,
                     std::size_t n) {
    GlueCheck res;
    CombinedSystem sys = combine_pieces(pa, ta, pb, tb);
    VertexSet both = enumerate_vertices(sys.a, sys.t);
    if (both.empty()) {
        res.reason = "glued pieces do not intersect";
        return res;
    }
    const std::size_t row_a = facet_a;
    const std::size_t row_b = pa.facet_count() + facet_b;
    for (const auto& v : both.vertices)
        if (!vertex_tight_on(v, row_a) || !vertex_tight_on(v, row_b)) {
            res.reason = "pieces overlap beyond the declared shared boundary";
            return res;
        }
    res.shared = filter_shared(both, row_a, row_b);
    if (res.shared.empty() || affine_rank(vertex_points(res.shared)) != n - 1) {
        res.reason = "shared boundary is not (n-1)-dimensional";
        return res;
    }
    res.ok = true;
    return res;
}

bool pieces_disjoint(const HRep& pa, const Dilation& ta, const HRep& pb,
                     const Dilation& tb) {
    CombinedSystem sys = combine_pieces(pa, ta, pb, tb);
    return enumerate_vertices(sys.a, sys.t).empty();
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

GluedPolytope::GluedPolytope(std::vector<HRep> pieces, std::vector<GlueEdge> edges)
    : pieces_(std::move(pieces)), edges_(std::move(edges)) {
    if (pieces_.empty())
        fail(errc::invalid_argument, "GluedPolytope: no pieces");
    const std::size_t n = pieces_.front().ambient_dim();
    for (const auto& p : pieces_)
        if (p.ambient_dim() != n)
            fail(errc::dimension_mismatch, "GluedPolytope: pieces in different ambient dimensions");

    offsets_.assign(1, 0);
    for (const auto& p : pieces_)
        offsets_.push_back(offsets_.back() + p.facet_count());

    if (edges_.size() + 1 != pieces_.size())
        fail(errc::invalid_argument, "GluedPolytope: glue edges must form a spanning tree");
    UnionFind uf(pieces_.size());
    for (const auto& e : edges_) {
        if (e.piece_a >= pieces_.size() || e.piece_b >= pieces_.size() ||
            e.piece_a == e.piece_b)
            fail(errc::index_range, "GluedPolytope: bad piece index in glue edge");
        if (e.facet_a >= pieces_[e.piece_a].facet_count() ||
            e.facet_b >= pieces_[e.piece_b].facet_count())
            fail(errc::index_range, "GluedPolytope: bad facet index in glue edge");
        if (!uf.merge(e.piece_a, e.piece_b))
            fail(errc::invalid_argument, "GluedPolytope: glue edges contain a cycle");
    }

    std::set<std::pair<std::size_t, std::size_t>> adjacent;
    for (const auto& e : edges_)
        adjacent.insert({std::min(e.piece_a, e.piece_b), std::max(e.piece_a, e.piece_b)});

    for (const auto& e : edges_) {
        GlueCheck chk = check_edge(pieces_[e.piece_a], pieces_[e.piece_a].base(),
                                   pieces_[e.piece_b], pieces_[e.piece_b].base(),
                                   e.facet_a, e.facet_b, n);
        if (!chk.ok)
            fail(errc::invalid_argument, "GluedPolytope: " + chk.reason);
        edge_incidence_.push_back(incidence(chk.shared));
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        for (std::size_t j = i + 1; j < pieces_.size(); ++j)
            if (!adjacent.count({i, j}) &&
                !pieces_disjoint(pieces_[i], pieces_[i].base(), pieces_[j],
                                 pieces_[j].base()))
                fail(errc::invalid_argument,
                     "GluedPolytope: non-adjacent pieces intersect");
}

GluedPolytope glued(std::vector<HRep> pieces, std::vector<GlueEdge> edges) {
    return GluedPolytope(std::move(pieces), std::move(edges));
}

std::vector<Int> GluedPolytope::base() const {
    std::vector<Int> b;
    b.reserve(total_facets());
    for (const auto& p : pieces_)
        b.insert(b.end(), p.base().begin(), p.base().end());
    return b;
}

std::vector<Dilation> GluedPolytope::split(const Dilation& t) const {
    if (t.size() != total_facets())
        fail(errc::dimension_mismatch,
             "glued dilation has length " + std::to_string(t.size()) + ", expected " +
                 std::to_string(total_facets()));
    std::vector<Dilation> blocks(pieces_.size());
    for (std::size_t k = 0; k < pieces_.size(); ++k)
        blocks[k] = Dilation(t.begin() + offsets_[k], t.begin() + offsets_[k + 1]);
    return blocks;
}

namespace {

// Shared validity walk; returns an empty string when valid.
std::string glued_validity(const GluedPolytope& g, const std::vector<Dilation>& blocks) {
    const std::size_t n = g.ambient_dim();
    for (std::size_t k = 0; k < g.pieces().size(); ++k)
        if (!is_chamber_point(g.pieces()[k], blocks[k]))
            return "piece " + std::to_string(k + 1) + " is outside its chamber";
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const GlueEdge& e = g.edges()[ei];
        GlueCheck chk = check_edge(g.pieces()[e.piece_a], blocks[e.piece_a],
                                   g.pieces()[e.piece_b], blocks[e.piece_b], e.facet_a,
                                   e.facet_b, n);
        if (!chk.ok)
            return chk.reason;
        if (!(incidence(chk.shared) == g.edge_base_incidence()[ei]))
            return "shared boundary changed its combinatorial structure";
    }
    std::set<std::pair<std::size_t, std::size_t>> adjacent;
    for (const auto& e : g.edges())
        adjacent.insert({std::min(e.piece_a, e.piece_b), std::max(e.piece_a, e.piece_b)});
    for (std::size_t i = 0; i < g.pieces().size(); ++i)
        for (std::size_t j = i + 1; j < g.pieces().size(); ++j)
            if (!adjacent.count({i, j}) &&
                !pieces_disjoint(g.pieces()[i], blocks[i], g.pieces()[j], blocks[j]))
                return "non-adjacent pieces intersect";
    return {};
}

} // namespace

GluedInstance glued_dilate(const GluedPolytope& g, const Dilation& t) {
    std::vector<Dilation> blocks = g.split(t);
    std::string reason = glued_validity(g, blocks);
    if (!reason.empty())
        fail(errc::chamber_violation, "glued_dilate: " + reason);
    return GluedInstance{std::move(blocks)};
}

bool is_glued_chamber_point(const GluedPolytope& g, const Dilation& t) {
    if (t.size() != g.total_facets())
        return false;
    return glued_validity(g, g.split(t)).empty();
}

VertexSet shared_boundary_vertices(const GluedPolytope& g, const GlueEdge& e,
                                   const std::vector<Dilation>& blocks) {
    CombinedSystem sys =
        combine_pieces(g.pieces()[e.piece_a], blocks[e.piece_a], g.pieces()[e.piece_b],
                       blocks[e.piece_b]);
    VertexSet both = enumerate_vertices(sys.a, sys.t);
    return filter_shared(both, e.facet_a,
                         g.pieces()[e.piece_a].facet_count() + e.facet_b);
}

namespace {

// Dilating a glued union usually has to respect linear ties between
// coordinates of different blocks (collinear walls, and the two sides of each
// shared hyperplane). We read the ties off the base structure: rows of the
// two pieces with equal (or opposite) normal vectors that are tight at a
// common shared-boundary vertex must move together (or mirrored).
struct SignedGroups {
    std::vector<std::size_t> root; // representative coordinate
    std::vector<int> sign;         // relative to the representative
};

SignedGroups tie_groups(const GluedPolytope& g) {
    const std::size_t m = g.total_facets();
    SignedGroups sg;
    sg.root.resize(m);
    sg.sign.assign(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        sg.root[i] = i;

    auto find = [&](std::size_t x) {
        int s = 1;
        while (sg.root[x] != x) {
            s *= sg.sign[x];
            x = sg.root[x];
        }
        return std::pair<std::size_t, int>{x, s};
    };
    auto merge = [&](std::size_t a, std::size_t b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb)
            return;
        // want t_a = rel * t_b
        sg.root[ra] = rb;
        sg.sign[ra] = sa * rel * sb;
    };

    std::vector<std::size_t> offsets(1, 0);
    for (const auto& p : g.pieces())
        offsets.push_back(offsets.back() + p.facet_count());

    std::vector<Dilation> base_blocks;
    for (const auto& p : g.pieces())
        base_blocks.push_back(p.base());

    for (const auto& e : g.edges()) {
        const HRep& pa = g.pieces()[e.piece_a];
        const HRep& pb = g.pieces()[e.piece_b];
        VertexSet shared = shared_boundary_vertices(g, e, base_blocks);
        for (const auto& v : shared.vertices) {
            for (std::size_t ra : v.tight_rows) {
                if (ra >= pa.facet_count())
                    continue;
                for (std::size_t rbv : v.tight_rows) {
                    if (rbv < pa.facet_count())
                        continue;
                    std::size_t rb = rbv - pa.facet_count();
                    bool same = true, opposite = true;
                    for (std::size_t j = 0; j < g.ambient_dim(); ++j) {
                        if (pa.matrix().at(ra, j) != pb.matrix().at(rb, j))
                            same = false;
                        if (pa.matrix().at(ra, j) != -pb.matrix().at(rb, j))
                            opposite = false;
                    }
                    if (same)
                        merge(offsets[e.piece_a] + ra, offsets[e.piece_b] + rb, 1);
                    else if (opposite)
                        merge(offsets[e.piece_a] + ra, offsets[e.piece_b] + rb, -1);
                }
            }
        }
    }
    // flatten
    SignedGroups flat;
    flat.root.resize(m);
    flat.sign.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto [r, s] = find(i);
        flat.root[i] = r;
        flat.sign[i] = s;
    }
    return flat;
}

} // namespace

std::vector<Dilation> glued_chamber_samples(const GluedPolytope& g, std::size_t count,
                                            long radius, std::uint64_t seed,
                                            long perturbation) {
    if (radius < 1)
        fail(errc::invalid_argument, "glued_chamber_samples: radius must be >= 1");
    std::vector<Dilation> out;
    if (count == 0)
        return out;
    SignedGroups groups = tie_groups(g);
    const std::vector<Int> base = g.base();
    const std::size_t m = base.size();

    std::mt19937_64 rng(seed);
    std::set<Dilation> seen;
    const std::size_t budget = 400 + 200 * count;
    std::vector<long> group_e(m);
    for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
        long s = bounded_draw(rng, 1, radius);
        for (std::size_t i = 0; i < m; ++i)
            if (groups.root[i] == i)
                group_e[i] = bounded_draw(rng, -perturbation, perturbation);
        Dilation t(m);
        for (std::size_t i = 0; i < m; ++i)
            t[i] = base[i] * s + groups.sign[i] * group_e[groups.root[i]];
        if (seen.count(t))
            continue;
        if (!is_glued_chamber_point(g, t))
            continue;
        seen.insert(t);
        out.push_back(std::move(t));
    }
    if (out.size() < count)
        fail(errc::insufficient_samples,
             "glued_chamber_samples: found " + std::to_string(out.size()) + " of " +
                 std::to_string(count) + " requested chamber points");
    return out;
}

} // namespace vecdil

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vecdil/int_matrix.hpp"
#include "vecdil/linear.hpp"
#include "vecdil/rational.hpp"

namespace vecdil {

// Right-hand side of a dilated system A x <= t. Length equals the facet
// count of the polytope it dilates. Row and facet indices are 0-based in
// this API (the file format and CLI speak 1-based).
using Dilation = std::vector<Int>;

struct Vertex {
    RatVec point;
    std::vector<std::size_t> tight_rows; // sorted; every row tight at point
};

struct VertexSet {
    std::vector<Vertex> vertices; // sorted by point, pairwise distinct
    bool empty() const noexcept { return vertices.empty(); }
    std::size_t size() const noexcept { return vertices.size(); }
};

// Canonical vertex-facet incidence data: the lexicographically sorted
// sequence of tight-row sets, one per vertex. Two dilations of the same
// system are combinatorially equivalent (with the identity facet labeling)
// exactly when these compare equal.
struct IncidenceStructure {
    std::vector<std::vector<std::size_t>> canonical;
    bool operator==(const IncidenceStructure&) const = default;
};

// All vertices of {x : A x <= t}: every n-subset of rows with nonsingular
// square submatrix is solved and the solution kept iff it satisfies the whole
// system. tight_rows records all rows met with equality, not just the subset
// solved. Works on raw systems; no boundedness or chamber assumption.
VertexSet enumerate_vertices(const IntMatrix& a, const Dilation& t);

IncidenceStructure incidence(const VertexSet& vs);

// Convex rational polytope {x : A x <= b} in irredundant H-representation.
// Construction verifies that the base instance is bounded, full-dimensional,
// and that every row defines a distinct facet.
class HRep {
  public:
    HRep(IntMatrix a, std::vector<Int> b);

    const IntMatrix& matrix() const noexcept { return a_; }
    const std::vector<Int>& base() const noexcept { return b_; }
    std::size_t ambient_dim() const noexcept { return a_.cols(); }
    std::size_t facet_count() const noexcept { return a_.rows(); }

    const VertexSet& base_vertices() const noexcept { return base_vertices_; }
    const IncidenceStructure& base_incidence() const noexcept {
        return base_incidence_;
    }

    bool operator==(const HRep& other) const {
        return a_ == other.a_ && b_ == other.b_;
    }

  private:
    IntMatrix a_;
    std::vector<Int> b_;
    VertexSet base_vertices_;
    IncidenceStructure base_incidence_;
};

// The dilated instance (A, t). Carries no feasibility requirement.
struct Instance {
    const HRep* polytope;
    Dilation t;
};

Instance dilate(const HRep& p, const Dilation& t);

VertexSet enumerate_vertices(const HRep& p, const Dilation& t);

// True iff the instance at t is full-dimensional and has the same labeled
// vertex-facet incidence structure as the base instance.
bool is_chamber_point(const HRep& p, const Dilation& t);

// Facet i of P: row i as an equality, every other row as an inequality.
// boundary_rows lists the rows tight somewhere on the facet's relative
// boundary (equivalently: tight at one of its vertices but not all of them),
// read off the base vertex incidence. These are the rows made strict when
// counting the facet's relative interior.
struct Facet {
    std::size_t row;
    std::vector<std::size_t> boundary_rows;
};

Facet facet(const HRep& p, std::size_t row);

// `count` distinct dilation vectors of the form s * b + e with s in
// [1, radius] and |e_i| <= perturbation, each passing is_chamber_point.
// Deterministic for a given seed.
std::vector<Dilation> chamber_samples(const HRep& p, std::size_t count,
                                      long radius, std::uint64_t seed,
                                      long perturbation = 3);

// --- glued (non-convex) unions -------------------------------------------

// One gluing: pieces a and b share the (n-1)-dimensional boundary
// facet_a(P_a) while facet_b(P_b) carries the same hyperplane from the other
// side. The shared boundary is the intersection of the two facets; it must
// be (n-1)-dimensional and must equal P_a intersect P_b exactly.
struct GlueEdge {
    std::size_t piece_a;
    std::size_t facet_a;
    std::size_t piece_b;
    std::size_t facet_b;
};

// Union of convex pieces joined along declared shared boundaries. The glue
// graph must be a tree spanning all pieces; non-adjacent pieces must be
// disjoint. A concatenated dilation vector splits into per-piece blocks by
// facet counts.
class GluedPolytope {
  public:
    GluedPolytope(std::vector<HRep> pieces, std::vector<GlueEdge> edges);

    const std::vector<HRep>& pieces() const noexcept { return pieces_; }
    const std::vector<GlueEdge>& edges() const noexcept { return edges_; }
    std::size_t ambient_dim() const noexcept { return pieces_.front().ambient_dim(); }

    // total facet count m = m_1 + ... + m_r
    std::size_t total_facets() const noexcept { return offsets_.back(); }
    std::vector<Int> base() const;

    // Splits a concatenated vector into per-piece blocks.
    std::vector<Dilation> split(const Dilation& t) const;

    // Base incidence of each shared boundary, labeled by combined row indices
    // of the two incident pieces.
    const std::vector<IncidenceStructure>& edge_base_incidence() const noexcept {
        return edge_incidence_;
    }

  private:
    std::vector<HRep> pieces_;
    std::vector<GlueEdge> edges_;
    std::vector<std::size_t> offsets_; // prefix sums, size r+1
    std::vector<IncidenceStructure> edge_incidence_;
};

GluedPolytope glued(std::vector<HRep> pieces, std::vector<GlueEdge> edges);

// Valid dilated instance of a glued union: per-piece dilations, each in its
// piece's chamber, with every shared boundary intact. Throws
// chamber_violation otherwise.
struct GluedInstance {
    std::vector<Dilation> blocks;
};

GluedInstance glued_dilate(const GluedPolytope& g, const Dilation& t);

bool is_glued_chamber_point(const GluedPolytope& g, const Dilation& t);

std::vector<Dilation> glued_chamber_samples(const GluedPolytope& g,
                                            std::size_t count, long radius,
                                            std::uint64_t seed,
                                            long perturbation = 3);

// --- shared helpers used by the counting module ---------------------------

// Combined inequality system of two pieces (rows of a then rows of b) at the
// given per-piece dilations.
struct CombinedSystem {
    IntMatrix a;
    Dilation t;
};

CombinedSystem combine_pieces(const HRep& pa, const Dilation& ta, const HRep& pb,
                              const Dilation& tb);

// Vertices of the shared boundary of a glue edge at the given blocks:
// the vertices of the combined system that are tight on both glue facets.
VertexSet shared_boundary_vertices(const GluedPolytope& g, const GlueEdge& e,
                                   const std::vector<Dilation>& blocks);

// Affine rank of a point set (dimension of its affine hull).
std::size_t affine_rank(const std::vector<RatVec>& points);

} // namespace vecdil

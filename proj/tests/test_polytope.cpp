#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "vecdil/polytope.hpp"

using namespace vecdil;

namespace {

Dilation dil(std::initializer_list<long> v) {
    Dilation t;
    for (long x : v)
        t.emplace_back(x);
    return t;
}

// the square [-1,1]^2: x1 <= 1, -x1 <= 1, x2 <= 1, -x2 <= 1
HRep square() {
    return HRep(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, dil({1, 1, 1, 1}));
}

// unit right triangle: x >= 0, y >= 0, x + y <= 1
HRep triangle() {
    return HRep(IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, dil({0, 0, 1}));
}

// interval [-1, 1]
HRep interval() {
    return HRep(IntMatrix{{1}, {-1}}, dil({1, 1}));
}

HRep lshape_bottom() { // [0,2] x [0,1]
    return HRep(IntMatrix{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, dil({0, 2, 0, 1}));
}

HRep lshape_top() { // [0,1] x [1,2]
    return HRep(IntMatrix{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, dil({0, 1, -1, 2}));
}

GluedPolytope lshape() {
    // bottom's top wall (row 3) carries the same hyperplane as top's bottom
    // wall (row 2); the shared boundary is [0,1] x {1}
    return glued({lshape_bottom(), lshape_top()}, {GlueEdge{0, 3, 1, 2}});
}

RatVec point(std::initializer_list<long> v) {
    RatVec p;
    for (long x : v)
        p.emplace_back(x);
    return p;
}

bool has_vertex(const VertexSet& vs, const RatVec& p) {
    return std::any_of(vs.vertices.begin(), vs.vertices.end(),
                       [&](const Vertex& v) { return v.point == p; });
}

} // namespace

TEST_CASE("HRep construction validates its input") {
    CHECK_NOTHROW(square());
    CHECK_NOTHROW(triangle());
    CHECK_NOTHROW(interval());
    // unbounded: half-plane strip
    CHECK_THROWS_AS(HRep(IntMatrix{{1, 0}, {-1, 0}}, dil({1, 1})), Error);
    // empty
    CHECK_THROWS_AS(HRep(IntMatrix{{1}, {-1}}, dil({-2, 1})), Error);
    // not full-dimensional: x1 pinched to 0
    CHECK_THROWS_AS(HRep(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, dil({0, 0, 1, 1})),
                    Error);
    // redundant row: x1 <= 5 never touches the square
    CHECK_THROWS_AS(
        HRep(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 0}}, dil({1, 1, 1, 1, 5})),
        Error);
    // duplicate facet: scaled copy of row 1
    CHECK_THROWS_AS(
        HRep(IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0}}, dil({1, 1, 1, 1, 2})),
        Error);
}

TEST_CASE("dilate carries (A, t)") {
    HRep p = square();
    Instance inst = dilate(p, dil({2, 0, 1, 1}));
    CHECK(inst.t == dil({2, 0, 1, 1}));
    CHECK(inst.polytope == &p);
    // base and scaled-base dilations
    CHECK_NOTHROW(dilate(p, dil({1, 1, 1, 1})));
    CHECK_NOTHROW(dilate(p, dil({3, 3, 3, 3})));
    // no feasibility requirement at this stage
    CHECK_NOTHROW(dilate(p, dil({-5, 0, 0, 0})));
    CHECK_THROWS_AS(dilate(p, dil({1, 1, 1})), Error);
}

TEST_CASE("enumerate_vertices") {
    HRep sq = square();
    SUBCASE("square corners") {
        VertexSet vs = enumerate_vertices(sq, dil({1, 1, 1, 1}));
        REQUIRE(vs.size() == 4);
        CHECK(has_vertex(vs, point({1, 1})));
        CHECK(has_vertex(vs, point({1, -1})));
        CHECK(has_vertex(vs, point({-1, 1})));
        CHECK(has_vertex(vs, point({-1, -1})));
        for (const auto& v : vs.vertices)
            CHECK(v.tight_rows.size() == 2);
    }
    SUBCASE("triangle") {
        VertexSet vs = enumerate_vertices(triangle(), dil({0, 0, 1}));
        REQUIRE(vs.size() == 3);
        CHECK(has_vertex(vs, point({0, 0})));
        CHECK(has_vertex(vs, point({1, 0})));
        CHECK(has_vertex(vs, point({0, 1})));
    }
    SUBCASE("infeasible instance is empty") {
        VertexSet vs = enumerate_vertices(sq, dil({-2, 1, 1, 1}));
        CHECK(vs.empty());
    }
    SUBCASE("membership and tightness hold exactly") {
        VertexSet vs = enumerate_vertices(sq, dil({2, 0, 1, 1}));
        const IntMatrix& a = sq.matrix();
        Dilation t = dil({2, 0, 1, 1});
        for (const auto& v : vs.vertices) {
            for (std::size_t r = 0; r < a.rows(); ++r) {
                Rational lhs(0);
                for (std::size_t j = 0; j < a.cols(); ++j)
                    lhs += Rational(a.at(r, j)) * v.point[j];
                bool tight = std::binary_search(v.tight_rows.begin(),
                                                v.tight_rows.end(), r);
                if (tight)
                    CHECK(lhs == Rational(t[r]));
                else
                    CHECK(lhs < Rational(t[r]));
            }
        }
    }
}

TEST_CASE("incidence structures") {
    HRep sq = square();
    SUBCASE("square base pattern") {
        IncidenceStructure inc = incidence(enumerate_vertices(sq, sq.base()));
        std::vector<std::vector<std::size_t>> expect{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        CHECK(inc.canonical == expect);
    }
    SUBCASE("triangle base pattern") {
        HRep tri = triangle();
        IncidenceStructure inc = incidence(enumerate_vertices(tri, tri.base()));
        std::vector<std::vector<std::size_t>> expect{{0, 1}, {0, 2}, {1, 2}};
        CHECK(inc.canonical == expect);
    }
    SUBCASE("empty set gives empty structure") {
        IncidenceStructure inc = incidence(enumerate_vertices(sq, dil({-2, 1, 1, 1})));
        CHECK(inc.canonical.empty());
    }
    SUBCASE("invariant under vertex order") {
        VertexSet vs = enumerate_vertices(sq, sq.base());
        VertexSet reversed;
        reversed.vertices.assign(vs.vertices.rbegin(), vs.vertices.rend());
        CHECK(incidence(vs) == incidence(reversed));
    }
}

TEST_CASE("is_chamber_point") {
    HRep sq = square();
    CHECK(is_chamber_point(sq, dil({2, 0, 1, 1})));
    CHECK_FALSE(is_chamber_point(sq, dil({0, 0, 1, 1}))); // pinched flat
    CHECK_FALSE(is_chamber_point(triangle(), dil({0, 0, -1}))); // infeasible
    SUBCASE("base point is always in the chamber") {
        CHECK(is_chamber_point(sq, sq.base()));
        CHECK(is_chamber_point(triangle(), triangle().base()));
        CHECK(is_chamber_point(interval(), interval().base()));
    }
    SUBCASE("classical scaling stays in the chamber") {
        HRep tri = triangle();
        for (long s = 1; s <= 6; ++s) {
            Dilation t;
            for (const Int& b : sq.base())
                t.push_back(b * s);
            CHECK(is_chamber_point(sq, t));
            Dilation tt;
            for (const Int& b : tri.base())
                tt.push_back(b * s);
            CHECK(is_chamber_point(tri, tt));
        }
    }
}

TEST_CASE("facet descriptions") {
    SUBCASE("square edge") {
        Facet f = facet(square(), 0); // x1 = 1, -1 <= x2 <= 1
        CHECK(f.row == 0);
        CHECK(f.boundary_rows == std::vector<std::size_t>{2, 3});
    }
    SUBCASE("triangle hypotenuse") {
        Facet f = facet(triangle(), 2);
        CHECK(f.boundary_rows == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("interval endpoint has no boundary rows") {
        Facet f = facet(interval(), 0);
        CHECK(f.boundary_rows.empty());
    }
    CHECK_THROWS_AS(facet(square(), 4), Error);
}

TEST_CASE("chamber_samples") {
    SUBCASE("contract on the square") {
        auto samples = chamber_samples(square(), 3, 2, 0);
        CHECK(samples.size() == 3);
        std::set<Dilation> uniq(samples.begin(), samples.end());
        CHECK(uniq.size() == 3);
        for (const auto& t : samples)
            CHECK(is_chamber_point(square(), t));
    }
    SUBCASE("interval samples satisfy the chamber condition t1 + t2 > 0") {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto samples = chamber_samples(interval(), 20, 5, seed);
            for (const auto& t : samples)
                CHECK(t[0] + t[1] > 0);
        }
    }
    SUBCASE("count zero yields empty") {
        CHECK(chamber_samples(square(), 0, 2, 0).empty());
    }
    SUBCASE("deterministic for a given seed") {
        auto a = chamber_samples(square(), 10, 4, 42);
        auto b = chamber_samples(square(), 10, 4, 42);
        CHECK(a == b);
        auto c = chamber_samples(square(), 10, 4, 43);
        CHECK(a != c);
    }
}

TEST_CASE("glued polytopes") {
    SUBCASE("L-shape construction") {
        GluedPolytope g = lshape();
        CHECK(g.pieces().size() == 2);
        CHECK(g.edges().size() == 1);
        CHECK(g.total_facets() == 8);
    }
    SUBCASE("base dilation splits into blocks") {
        GluedPolytope g = lshape();
        auto blocks = g.split(g.base());
        REQUIRE(blocks.size() == 2);
        CHECK(blocks[0] == dil({0, 2, 0, 1}));
        CHECK(blocks[1] == dil({0, 1, -1, 2}));
    }
    SUBCASE("scaled base is valid and doubles the pieces") {
        GluedPolytope g = lshape();
        Dilation t;
        for (const Int& b : g.base())
            t.push_back(b * 2);
        GluedInstance inst = glued_dilate(g, t);
        CHECK(inst.blocks[0] == dil({0, 4, 0, 2}));
        CHECK(inst.blocks[1] == dil({0, 2, -2, 4}));
    }
    SUBCASE("moving one wall off the shared hyperplane is a chamber violation") {
        GluedPolytope g = lshape();
        Dilation t = g.base();
        t[7] = 3;  // raise the top piece's ceiling: fine
        CHECK(is_glued_chamber_point(g, t));
        Dilation bad = g.base();
        bad[6] = -2; // top piece now starts at y >= 2, off the bottom's wall
        CHECK_FALSE(is_glued_chamber_point(g, bad));
        CHECK_THROWS_AS(glued_dilate(g, bad), Error);
    }
    SUBCASE("shared boundary points match from both sides") {
        GluedPolytope g = lshape();
        for (long s = 1; s <= 3; ++s) {
            Dilation t;
            for (const Int& b : g.base())
                t.push_back(b * s);
            auto blocks = g.split(t);
            VertexSet shared = shared_boundary_vertices(g, g.edges()[0], blocks);
            REQUIRE(shared.size() == 2);
            // every shared vertex satisfies both pieces' systems with the
            // glue rows tight
            for (const auto& v : shared.vertices) {
                Rational y = v.point[1];
                CHECK(y == Rational(Int(s)));
            }
        }
    }
    SUBCASE("wrong gluing is rejected at construction") {
        // claim the shared wall is bottom's RIGHT facet: hyperplanes differ
        CHECK_THROWS_AS(glued({lshape_bottom(), lshape_top()}, {GlueEdge{0, 1, 1, 2}}),
                        Error);
        // cycle / wrong edge count
        CHECK_THROWS_AS(glued({lshape_bottom(), lshape_top()}, {}), Error);
    }
    SUBCASE("single piece glued polytope") {
        GluedPolytope g = glued({square()}, {});
        CHECK(g.total_facets() == 4);
        CHECK(is_glued_chamber_point(g, dil({1, 1, 1, 1})));
    }
    SUBCASE("glued chamber samples are valid and deterministic") {
        GluedPolytope g = lshape();
        auto a = glued_chamber_samples(g, 8, 3, 5);
        CHECK(a.size() == 8);
        for (const auto& t : a)
            CHECK(is_glued_chamber_point(g, t));
        auto b = glued_chamber_samples(g, 8, 3, 5);
        CHECK(a == b);
    }
}

#pragma once

#include <cstddef>
#include <vector>

#include "vecdil/polytope.hpp"

namespace vecdil {

enum class CountMethod { brute_force, recursive };

struct CountResult {
    Int closed;   // j: lattice points of the closure
    Int interior; // i: lattice points of the strict-inequality interior
    Dilation dilation;
    CountMethod method;
};

// Oracle counter: scans the integer bounding box obtained from the exact
// vertex coordinates. Requires t in the chamber of P.
CountResult count_brute(const HRep& p, const Dilation& t);

// Descent counter: unimodular column reduction isolates x_1 in row 1, the
// closed count sums slice counts for integer x_1 up to floor(t_1 / a_11) and
// the interior count up to floor((t_1 - 1) / a_11); each slice recurses on
// the remaining (n-1)-variable system. Must agree with count_brute.
CountResult count_recursive(const HRep& p, const Dilation& t);

// Lattice points of facet `row` at dilation t: the closed facet, and its
// relative interior (rows tight somewhere on the facet's relative boundary
// made strict). Requires t in the chamber.
Int count_facet_closed(const HRep& p, std::size_t row, const Dilation& t);
Int count_facet_relint(const HRep& p, std::size_t row, const Dilation& t);

// Facet-removal counts: j_T drops the closed facet counts of T from the
// closed count, i_T adds their relative-interior counts to the interior
// count.
struct RemovedCount {
    Int closed_removed;   // j_T
    Int interior_removed; // i_T
};

RemovedCount count_removed(const HRep& p, const std::vector<std::size_t>& removed,
                           const Dilation& t);

// Additive counts of a glued union: closed = sum of piece closures minus the
// shared boundaries, interior = sum of piece interiors plus the shared
// boundaries' relative interiors.
CountResult count_glued(const GluedPolytope& g, const Dilation& t,
                        CountMethod per_piece = CountMethod::brute_force);

// Closed / relative-interior counts of the shared boundary of one glue edge.
Int glue_boundary_closed(const GluedPolytope& g, const GlueEdge& e,
                         const std::vector<Dilation>& blocks);
Int glue_boundary_relint(const GluedPolytope& g, const GlueEdge& e,
                         const std::vector<Dilation>& blocks);

} // namespace vecdil

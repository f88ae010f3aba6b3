#pragma once

#include <vector>

#include "pog/cell_graph.hpp"

namespace pog {

// Book-keeping for the recursive identification algorithm. The boundary strip
// between adjacent top-level copies is described once, for copies (0,1); the
// other seven gaps follow by rotating the first address digit.
//
// A GapHole is the inner boundary of one pseudo-cell in the strip. Its cells
// are listed for the left (copy-0) side only, walking the hole boundary; each
// cell's arc runs from parent-octagon vertex v_in down to v_out (indices mod
// 8, descending), so it covers (v_in - v_out) mod 8 sides of the hole. The
// right side is the mirror image and the antipodal partner of the i-th left
// cell is the mirror of the (last-i)-th.
struct GapArc {
    std::vector<std::uint8_t> tail;  // address digits within copy 0
    int v_in = 0;
    int v_out = 0;

    int strength() const { return mod8(v_in - v_out); }
};

struct GapItem {
    bool is_pair = false;             // coincident side pair (1 edge) vs pseudo-cell hole
    std::vector<std::uint8_t> tail;   // pair: left cell
    int side = 0;                     // pair: octagon side index carrying the coincidence
    std::vector<GapArc> cells;        // hole: left-side cells in boundary order
};

using GapGuide = std::vector<GapItem>;

GapGuide initial_gap_guide();                 // level 1: the bare shared side
GapGuide refine_gap_guide(const GapGuide&);   // level m -> m+1

// Strengths of the strip's oldest pseudo-cell (the central hole of the gap)
// at a given level; defined for level >= 3 where it first has a 2,2,2,2 run.
StrengthSequence central_strengths(const GapGuide& g);

}  // namespace pog

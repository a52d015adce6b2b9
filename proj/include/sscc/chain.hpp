#pragma once

#include <utility>
#include <vector>

#include "sscc/board.hpp"
#include "sscc/filtering.hpp"
#include "sscc/labeling.hpp"
#include "sscc/trace.hpp"
#include "sscc/verdict.hpp"

namespace sscc {

// Distinct nonzero labels among the up-to-eight king-move neighbors of
// index, ascending. Board edges are simply skipped, no wraparound.
std::vector<int> adjacent_classes(const ClassGrid& grid, int index);

// The verdict core. grid must be the corrected (final) class grid for
// board. Returns found == true iff two paths of occupied squares exist that
// start at distinct king-move neighbors of start, each stop at a square
// 8-adjacent to the same surviving class, and share no square. The start
// square belongs to neither path.
//
// Sequential search order is normative: branches expand in
// config.neighbor_order, the first ring (start's neighbors) can only ever be
// a path's first square, a path is recorded at the first square it reaches
// that touches a class (once per touched class, ascending) and is never
// extended past it, and each recording is checked against the previously
// recorded paths of that class in order, returning on the first disjoint
// pair. With config.parallel_branches the first-ring branches run
// concurrently: same boolean, possibly a different witness pair.
//
// Throws StartSquareEmpty when start is unoccupied, InvalidSquare when out
// of range.
ChainVerdict two_disjoint_paths_exist(const BoardGrid& board, const ClassGrid& grid,
                                      int start, const DetectorConfig& config);

// Full detection: runs the EA pipeline, then the path search unless no area
// survived. The returned trace carries every stage snapshot plus the
// verdict.
std::pair<ChainVerdict, StageTrace> detect_chain(const BoardGrid& board, int last_move,
                                                 const DetectorConfig& config);

} // namespace sscc

#pragma once

#include <vector>

#include "sscc/board.hpp"

namespace sscc {

// Per-square class labels, same layout as BoardGrid.cells. 0 means "not part
// of any empty-square component" (occupied, or filtered out later); nonzero
// labels partition the empty squares into 8-connected components.
struct ClassGrid {
    DetectorConfig config;
    std::vector<int> labels;

    int width() const { return config.width; }
    int height() const { return config.height; }
    int size() const { return config.width * config.height; }
    int label(int index) const { return labels[static_cast<std::size_t>(index)]; }
};

// 8-connected component labeling over the board's empty squares, classic
// two-pass with an equivalence table. Components are numbered 1..K by the
// row-major position of their first square, which pins the output exactly
// for golden tests.
ClassGrid label_empty_components(const BoardGrid& board);

// Renumbers the surviving nonzero labels to 1..K' by row-major first
// occurrence without touching memberships. Pure renumbering: it does not
// regroup squares, so feed it grids whose classes are still connected.
ClassGrid compact_labels(const ClassGrid& grid);

} // namespace sscc

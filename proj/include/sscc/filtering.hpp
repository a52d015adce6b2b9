#pragma once

#include <vector>

#include "sscc/labeling.hpp"
#include "sscc/trace.hpp"

namespace sscc {

// One surviving enclosed area: a maximal 8-connected group of empty squares,
// off the rim, not 4-connected through empties to any rim empty, of size >=
// min_ea_size. members is sorted ascending (row-major order).
struct EnclosedArea {
    int class_id = 0;
    std::vector<int> members;
};

struct FilterReport {
    // Squares whose label was zeroed by perimeter filtering, ascending.
    std::vector<int> removed_by_perimeter;
    // Class ids fully removed by the minimum-size rule, ascending.
    std::vector<int> removed_classes_by_size;
    std::vector<EnclosedArea> surviving_areas;
};

// Zeroes the label of every empty square that sits on the board rim or can
// reach a rim square by a horizontal/vertical walk over empty squares.
// Diagonal-only contact with the rim does not remove anything. If `removed`
// is non-null it receives the squares that lost a nonzero label, ascending.
ClassGrid perimeter_filter(const ClassGrid& grid, const BoardGrid& board,
                           std::vector<int>* removed = nullptr);

// Zeroes every class whose total member count is below min_size and reports
// the removed class ids, ascending. min_size <= 1 is a no-op; min_size
// beyond half the board area is a ConfigError.
ClassGrid eliminate_small_classes(const ClassGrid& grid, int min_size,
                                  std::vector<int>* removed_class_ids = nullptr);

struct EaResult {
    std::vector<EnclosedArea> areas;
    FilterReport report;
    StageTrace trace;
};

// The full EA pipeline: label empty components, drop rim-connected squares,
// drop undersized classes, then build the corrected final grid. The
// corrected stage regroups the survivors into maximal 8-connected areas,
// re-applies the size minimum (perimeter filtering can split one class into
// islands, leaving an undersized fragment inside a big-enough class), and
// numbers the areas 1..K by row-major first occurrence. An empty area list
// is a normal result. trace.verdict is left default; detect_chain fills it.
EaResult detect_enclosed_areas(const BoardGrid& board);

} // namespace sscc

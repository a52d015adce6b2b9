#pragma once

#include "sscc/board.hpp"
#include "sscc/labeling.hpp"
#include "sscc/verdict.hpp"

namespace sscc {

// Immutable snapshots of every pipeline stage, in execution order, plus the
// final verdict. This is everything the CLI needs to print a stage
// transcript.
struct StageTrace {
    BoardGrid board_snapshot;
    ClassGrid after_cca;
    ClassGrid after_perimeter;
    ClassGrid after_size_filter;
    ClassGrid after_compaction;
    ChainVerdict verdict;
    // False when the pipeline found no enclosed areas and the path search
    // never ran.
    bool search_ran = false;
};

} // namespace sscc

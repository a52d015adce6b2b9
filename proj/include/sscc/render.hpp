#pragma once

#include <string>

#include <sscc/board.hpp>
#include <sscc/labeling.hpp>
#include <sscc/trace.hpp>
#include <sscc/verdict.hpp>

namespace sscc {

// Piece grid: one row per rank from the top rank down to rank 1, width tokens per row
// separated by single tabs, "-" for empty squares and the piece letter otherwise.
std::string render_board(const BoardGrid& board);

// Class grid in the same shape: "-" for label 0, the decimal label otherwise.
std::string render_class_grid(const ClassGrid& grid);

// Full stage transcript: the board section plus the four class-grid stages, each under its
// header and followed by a blank line, then exactly one verdict line. Byte-stable.
std::string render_transcript(const StageTrace& trace);

// Machine-readable single line, trailing newline included:
// "verdict=<found|not-found> ea_class=<n|-> witness1=<sq,sq,...|-> witness2=<...|->".
std::string render_quiet_line(const ChainVerdict& verdict, const DetectorConfig& config);

}  // namespace sscc

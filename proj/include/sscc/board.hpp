#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sscc/config.hpp"
#include "sscc/errors.hpp"

namespace sscc {

// Occupancy grid in row-major order, rank `height` first (index 0 is the
// top-left square as White sees it, e.g. a8 on a standard board). A cell
// holds 0 when empty, otherwise the FEN piece letter (uppercase White,
// lowercase Black). Detection only ever looks at occupancy; the letters are
// kept so the CLI can print the position.
struct BoardGrid {
    DetectorConfig config;
    std::vector<char> cells;

    int width() const { return config.width; }
    int height() const { return config.height; }
    int size() const { return config.width * config.height; }
    bool occupied(int index) const { return cells[static_cast<std::size_t>(index)] != 0; }
    char piece(int index) const { return cells[static_cast<std::size_t>(index)]; }
};

// Parses the placement field of a FEN record onto a width x height board.
// Only the first whitespace-delimited field is consumed; any further FEN
// fields (side to move, castling, ...) are ignored, and their absence is
// also fine. Digit runs are read as one number so boards wider than 9 work
// ("12" means twelve empties); a run starting with '0' is malformed.
// Throws InvalidFen on wrong rank count, a rank not summing to the width,
// unknown piece letters, or stray characters.
BoardGrid parse_fen(std::string_view text, const DetectorConfig& config = {});

// "d6" -> 19 on the default board: row-major index with rank `height` on
// top. Throws InvalidSquare on malformed text or out-of-range file/rank.
int square_to_index(std::string_view notation, const DetectorConfig& config = {});

// Inverse of square_to_index. The index must be in range (asserted, not
// thrown): this is for indices the library itself produced.
std::string index_to_square(int index, const DetectorConfig& config = {});

} // namespace sscc

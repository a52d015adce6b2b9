#pragma once

#include <array>

namespace sscc {

// King-move directions. "Top" is the rank printed first (rank = height), so
// on the row-major grid TopLeft means row - 1, column - 1.
enum class Dir : int {
    TopLeft = 0,
    TopCenter,
    TopRight,
    Left,
    Right,
    BottomLeft,
    BottomCenter,
    BottomRight,
};

constexpr int dir_row_delta(Dir d) {
    constexpr int deltas[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    return deltas[static_cast<int>(d)];
}

constexpr int dir_col_delta(Dir d) {
    constexpr int deltas[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    return deltas[static_cast<int>(d)];
}

struct DetectorConfig {
    int width = 8;
    int height = 8;
    // Minimum square count for a surviving enclosed area. 2 is the game rule.
    int min_ea_size = 2;
    // Expansion order of the path search; the default is the order the
    // detector was tuned and documented with. Must be a permutation of all
    // eight directions.
    std::array<Dir, 8> neighbor_order = {
        Dir::TopLeft,  Dir::TopCenter,    Dir::TopRight, Dir::Left,
        Dir::Right,    Dir::BottomLeft,   Dir::BottomCenter, Dir::BottomRight,
    };
    // Explore the first-ring branches of the path search concurrently.
    // The boolean verdict is identical to sequential mode; the witness pair
    // may differ.
    bool parallel_branches = false;

    int area() const { return width * height; }
};

// Throws ConfigError if any field is out of range:
// width/height >= 3, width <= 26 (squares are named with one file letter),
// 1 <= min_ea_size <= area/2, neighbor_order a permutation of all 8 dirs.
void validate_config(const DetectorConfig& config);

} // namespace sscc

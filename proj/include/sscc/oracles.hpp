#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <sscc/board.hpp>
#include <sscc/filtering.hpp>
#include <sscc/labeling.hpp>

namespace sscc {

// Maximum number of vertex-disjoint paths of occupied squares from start to squares
// 8-adjacent to class_id, computed as max flow on a unit-capacity network: every occupied
// square except start splits into an in/out node pair (capacity 1 through the square), every
// 8-adjacency between occupied squares yields capacity-1 arcs both ways, and a virtual sink
// is fed by each occupied square 8-adjacent to the class. Start stays unsplit, encoding that
// the paths share only the start. Stops augmenting once flow_cap is reached; the true value
// never exceeds 8 (the first ring is a cut).
int oracle_class_flow(const BoardGrid& board, const ClassGrid& grid, int start, int class_id,
                      int flow_cap = 8);

// True iff some class present in grid admits flow >= 2 from start.
// Throws InvalidSquare for an out-of-range start, StartSquareEmpty for an unoccupied one.
bool oracle_disjoint_paths(const BoardGrid& board, const ClassGrid& grid, int start);

// Brute-force check: enumerates every simple path of occupied squares that begins at a
// king-move neighbor of start and stops at its first square 8-adjacent to a surviving class
// (no first-ring reservation, no ordering heuristics), records the path under each class it
// touches, then tests all pairs per class for disjointness. A path whose terminal touches
// two classes contributes one record per class; recorded (when non-null) receives the total
// record count. Throws EnumerationOverflow once the records exceed path_cap or the
// exploration step budget derived from path_cap runs out, signaling the caller to fall back
// to the flow oracle. Intended for boards with at most ~20 occupied squares.
bool oracle_enumerate_paths(const BoardGrid& board, const ClassGrid& grid, int start,
                            std::size_t path_cap, std::size_t* recorded = nullptr);

// Declarative enclosed-area oracle: flood-fills 4-adjacency through empty squares from every
// empty rim square, keeps the unreached empties, groups them by 8-connectivity, drops groups
// smaller than min_size and numbers the rest by row-major first occurrence.
std::vector<EnclosedArea> oracle_ea_floodfill(const BoardGrid& board, int min_size);

// Geometric discrepancy probe, not a verdict oracle: true iff some simple cycle of occupied
// squares through start (consecutive squares 8-adjacent) strictly contains every member of
// area under the even-odd rule applied to the polygon of square centers. All-integer
// arithmetic; a member center can never lie on a polygon edge because edges join centers of
// adjacent occupied squares. Throws EnumerationOverflow for boards with more than 16
// occupied squares or when the cycle search exhausts its step budget.
bool oracle_enclosing_cycle(const BoardGrid& board, int start, const EnclosedArea& area);

struct PositionSample {
    std::uint64_t seed = 0;
    double density = 0.0;
    BoardGrid board;
};

// Deterministic random position. The algorithm is pinned because fixtures freeze its exact
// output: std::mt19937_64 seeded with seed; one draw per cell in row-major order decides
// occupancy (draw >> 11 compared against density * 2^53) and each occupied cell consumes one
// further draw for its piece letter (KQRBNPkqrbnp, draw modulo 12). An all-empty board
// places a single piece at an rng-chosen cell, so every sample has at least one occupied
// square. Densities outside [0,1] behave as their nearest bound.
PositionSample random_position(std::uint64_t seed, double density,
                               const DetectorConfig& config = {});

}  // namespace sscc

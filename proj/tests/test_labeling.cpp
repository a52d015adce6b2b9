#include "doctest.h"

#include <algorithm>
#include <deque>
#include <vector>

#include <sscc/board.hpp>
#include <sscc/labeling.hpp>
#include <sscc/oracles.hpp>

#include "support.hpp"

using namespace sscc;
using namespace testsupport;

namespace {

// Independent single-pass BFS grouping, kept deliberately different from the
// two-pass union-find under test.
std::vector<std::vector<int>> bfs_partition(const BoardGrid& board) {
    const int w = board.width();
    const int h = board.height();
    std::vector<char> visited(static_cast<std::size_t>(board.size()), 0);
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < board.size(); ++i) {
        if (board.occupied(i) || visited[static_cast<std::size_t>(i)]) continue;
        std::vector<int> members;
        std::deque<int> frontier{i};
        visited[static_cast<std::size_t>(i)] = 1;
        while (!frontier.empty()) {
            const int x = frontier.front();
            frontier.pop_front();
            members.push_back(x);
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (!dr && !dc) continue;
                    const int rr = x / w + dr;
                    const int cc = x % w + dc;
                    if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                    const int j = rr * w + cc;
                    if (!board.occupied(j) && !visited[static_cast<std::size_t>(j)]) {
                        visited[static_cast<std::size_t>(j)] = 1;
                        frontier.push_back(j);
                    }
                }
            }
        }
        std::sort(members.begin(), members.end());
        groups.push_back(std::move(members));
    }
    return groups;
}

} // namespace

TEST_SUITE("labeling") {

TEST_CASE("an empty board is one class, a full board is none") {
    const ClassGrid empty = label_empty_components(parse_fen("8/8/8/8/8/8/8/8"));
    for (int i = 0; i < empty.size(); ++i) CHECK(empty.label(i) == 1);

    const ClassGrid full = label_empty_components(
        parse_fen("PPPPPPPP/PPPPPPPP/PPPPPPPP/PPPPPPPP/PPPPPPPP/PPPPPPPP/PPPPPPPP/PPPPPPPP"));
    for (int i = 0; i < full.size(); ++i) CHECK(full.label(i) == 0);
}

TEST_CASE("diagonal touch joins two empties into one class") {
    std::string fen = "pppppppp/pppppppp/pppppppp/ppp1pppp/pppp1ppp/pppppppp/pppppppp/pppppppp";
    const ClassGrid grid = label_empty_components(parse_fen(fen));
    CHECK(grid.label(sq("d5")) == 1);
    CHECK(grid.label(sq("e4")) == 1);
    for (int i = 0; i < grid.size(); ++i) CHECK(grid.label(i) <= 1);
}

TEST_CASE("a crowded middlegame position labels into the expected five classes") {
    const ClassGrid grid = label_empty_components(parse_fen(kPackedBoardFen));
    const auto partition = partition_of(grid);
    REQUIRE(partition.size() == 5);

    auto members = [&](std::vector<const char*> names) {
        std::vector<int> out;
        for (const char* n : names) out.push_back(sq(n));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(partition[0] == members({"a8"}));
    CHECK(partition[1] == members({"c8"}));
    CHECK(partition[2] == members({"e8", "f8", "g8", "h8"}));
    CHECK(partition[3] == members({"a6", "b6", "c6", "a5", "b5", "a4"}));
    CHECK(partition[4] == members({"f6", "g6", "e5", "f5", "g5", "g4", "c3", "d3", "e3", "f3",
                                   "a2", "d2", "e2", "g2", "b1", "c1", "d1", "e1", "g1", "h1"}));
}

TEST_CASE("labels are 1..K in row-major first-occurrence order") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const BoardGrid board = random_position(seed, 0.5).board;
        const ClassGrid grid = label_empty_components(board);
        int max_label = 0;
        for (int i = 0; i < grid.size(); ++i) max_label = std::max(max_label, grid.label(i));
        int expected_next = 1;
        for (int i = 0; i < grid.size(); ++i) {
            const int l = grid.label(i);
            if (l == 0) continue;
            // A label may only debut in ascending order.
            if (l >= expected_next) {
                CHECK(l == expected_next);
                ++expected_next;
            }
        }
        CHECK(expected_next == max_label + 1);
    }
}

TEST_CASE("label partition matches an independent BFS flood fill") {
    for (std::uint64_t seed = 300; seed < 600; ++seed) {
        const double density = 0.2 + 0.15 * static_cast<double>(seed % 5);
        const BoardGrid board = random_position(seed, density).board;
        CHECK(partition_of(label_empty_components(board)) == bfs_partition(board));
    }
}

TEST_CASE("compact_labels renumbers by first occurrence and nothing else") {
    DetectorConfig config;
    config.width = 4;
    config.height = 4;
    config.min_ea_size = 2;
    ClassGrid grid{config, {0, 7, 0, 3,
                            7, 0, 3, 0,
                            0, 0, 0, 0,
                            5, 0, 0, 5}};
    const ClassGrid compacted = compact_labels(grid);
    const std::vector<int> expected = {0, 1, 0, 2,
                                       1, 0, 2, 0,
                                       0, 0, 0, 0,
                                       3, 0, 0, 3};
    CHECK(compacted.labels == expected);
    CHECK(compact_labels(compacted).labels == expected);
}

}

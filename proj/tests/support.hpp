#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <sscc/board.hpp>
#include <sscc/filtering.hpp>
#include <sscc/labeling.hpp>
#include <sscc/verdict.hpp>

namespace testsupport {

// Rank-8-first placement strings shared across suites.
inline constexpr const char* kQueensidePocketFen = "1b4rk/n1p3pr/p1np3p/1p1pp3/3pP3/P1NPPQ2/N1PRK3/1B6";
inline constexpr const char* kDenseMidgameFen =
    "1n1k1b2/rpp1pp2/2b1pn2/rq2pp2/1Q4PB/PPPNP1PB/3P1R1P/3K1RN1";
inline constexpr const char* kPackedBoardFen = "1k1r4/bpPQnRNR/3qR2b/2nP3p/1PPBpB1p/rP4pB/1pQ2N1n/K4r2";
inline constexpr const char* kSpiralFen =
    "PPPPPPPP/P6P/P1PPPP1P/P1P2P1P/P1P1PP1P/P1P4P/P1PPPPPP/P1PPPPPP";
inline constexpr const char* kDiamondFen = "8/8/8/3B4/2N1P3/3P1Q2/4R3/8";
inline constexpr const char* kTwoEaFen = "1P4P1/P1P2P1P/P1P2P1P/PP4P1/1P3P2/2P1P3/3P4/8";

inline int sq(const char* name, const sscc::DetectorConfig& config = {}) {
    return sscc::square_to_index(name, config);
}

inline sscc::BoardGrid rotate180(const sscc::BoardGrid& board) {
    sscc::BoardGrid out = board;
    const int n = board.size();
    for (int i = 0; i < n; ++i) out.cells[static_cast<std::size_t>(n - 1 - i)] = board.cells[static_cast<std::size_t>(i)];
    return out;
}

inline int rotate180_index(int index, const sscc::BoardGrid& board) {
    return board.size() - 1 - index;
}

inline sscc::BoardGrid mirror_files(const sscc::BoardGrid& board) {
    sscc::BoardGrid out = board;
    const int w = board.width();
    for (int r = 0; r < board.height(); ++r) {
        for (int c = 0; c < w; ++c)
            out.cells[static_cast<std::size_t>(r * w + (w - 1 - c))] =
                board.cells[static_cast<std::size_t>(r * w + c)];
    }
    return out;
}

inline int mirror_index(int index, const sscc::BoardGrid& board) {
    const int w = board.width();
    return (index / w) * w + (w - 1 - (index % w));
}

// Class memberships in class-id order; the shape both pipelines must agree on.
inline std::vector<std::vector<int>> partition_of(const sscc::ClassGrid& grid) {
    int max_label = 0;
    for (int s = 0; s < grid.size(); ++s) max_label = std::max(max_label, grid.label(s));
    std::vector<std::vector<int>> out(static_cast<std::size_t>(max_label));
    for (int s = 0; s < grid.size(); ++s) {
        if (grid.label(s) > 0) out[static_cast<std::size_t>(grid.label(s) - 1)].push_back(s);
    }
    return out;
}

inline std::vector<std::vector<int>> partition_of(const std::vector<sscc::EnclosedArea>& areas) {
    std::vector<std::vector<int>> out;
    out.reserve(areas.size());
    for (const auto& area : areas) out.push_back(area.members);
    return out;
}

inline bool king_adjacent(int a, int b, int width) {
    const int dr = a / width - b / width;
    const int dc = a % width - b % width;
    return (dr || dc) && dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1;
}

// Structural validity of a found-verdict's witnesses against the truncating-path rules.
inline bool witness_valid(const sscc::BoardGrid& board, const sscc::ClassGrid& grid, int start,
                          const sscc::ChainVerdict& verdict, std::string* why = nullptr) {
    const int w = board.width();
    auto fail = [&](const std::string& message) {
        if (why) *why = message;
        return false;
    };
    if (!verdict.found) return fail("verdict not found");
    if (verdict.ea_class <= 0) return fail("missing ea_class");
    std::vector<char> used(static_cast<std::size_t>(board.size()), 0);
    for (const sscc::PathWitness* witness : {&verdict.witness1, &verdict.witness2}) {
        if (witness->squares.empty()) return fail("empty witness");
        if (witness->target_class != verdict.ea_class) return fail("witness class mismatch");
        if (!king_adjacent(witness->squares.front(), start, w))
            return fail("path does not start at a king-move neighbor");
        for (std::size_t i = 0; i < witness->squares.size(); ++i) {
            const int s = witness->squares[i];
            if (s == start) return fail("path contains the start square");
            if (!board.occupied(s)) return fail("path square not occupied");
            if (used[static_cast<std::size_t>(s)]) return fail("witnesses share a square");
            used[static_cast<std::size_t>(s)] = 1;
            if (i > 0 && !king_adjacent(witness->squares[i - 1], s, w))
                return fail("path squares not adjacent");
            bool touches = false;
            for (int t = 0; t < grid.size() && !touches; ++t)
                touches = grid.label(t) == verdict.ea_class && king_adjacent(s, t, w);
            const bool terminal = i + 1 == witness->squares.size();
            if (terminal && !touches) return fail("terminal square not adjacent to the class");
            if (!terminal) {
                // Truncation: interior squares touch no surviving class at all.
                for (int t = 0; t < grid.size(); ++t) {
                    if (grid.label(t) > 0 && king_adjacent(s, t, w))
                        return fail("interior square adjacent to a surviving class");
                }
            }
        }
    }
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

#ifdef SSCC_CLI_PATH
struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Shell out to the built CLI, capturing both streams. Arguments are trusted test literals.
inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "/tmp/sscc_cli_" + std::to_string(getpid()) + "_" +
                             std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string command =
        std::string(SSCC_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int raw = std::system(command.c_str());
    CliResult result;
    if (raw != -1 && WIFEXITED(raw)) result.exit_code = WEXITSTATUS(raw);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}
#endif

}  // namespace testsupport

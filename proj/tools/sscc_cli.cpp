#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <sscc/board.hpp>
#include <sscc/chain.hpp>
#include <sscc/errors.hpp>
#include <sscc/filtering.hpp>
#include <sscc/oracles.hpp>
#include <sscc/render.hpp>

namespace {

struct Options {
    std::string fen;
    std::string last_move;
    int min_ea_size = 2;
    int width = 8;
    int height = 8;
    bool trace = true;
    bool oracle = false;
    int fuzz_count = -1;
    std::uint64_t seed = 1;
    std::vector<double> densities = {0.2, 0.35, 0.5, 0.65, 0.8};
    bool parallel = false;
    bool quiet = false;
};

sscc::DetectorConfig make_config(const Options& opt) {
    sscc::DetectorConfig config;
    config.width = opt.width;
    config.height = opt.height;
    config.min_ea_size = opt.min_ea_size;
    config.parallel_branches = opt.parallel;
    return config;
}

int run_detect(const Options& opt) {
    const sscc::DetectorConfig config = make_config(opt);
    sscc::validate_config(config);
    const sscc::BoardGrid board = sscc::parse_fen(opt.fen, config);
    const int start = sscc::square_to_index(opt.last_move, config);
    const auto [verdict, trace] = sscc::detect_chain(board, start, config);
    if (opt.quiet) {
        std::cout << sscc::render_quiet_line(verdict, config);
    } else if (opt.trace && !opt.parallel) {
        std::cout << sscc::render_transcript(trace);
    } else {
        std::cout << (verdict.found ? "A VALID CHAIN WAS FOUND\n"
                                    : "A VALID CHAIN WAS ***NOT*** FOUND\n");
    }
    if (opt.oracle) {
        const bool oracle_found =
            board.occupied(start) &&
            sscc::oracle_disjoint_paths(board, trace.after_compaction, start);
        std::cout << "oracle=" << (oracle_found ? "found" : "not-found")
                  << " agree=" << (oracle_found == verdict.found ? "yes" : "no") << '\n';
    }
    return verdict.found ? 0 : 1;
}

int run_fuzz(const Options& opt) {
    const sscc::DetectorConfig config = make_config(opt);
    sscc::validate_config(config);
    if (opt.densities.empty()) throw sscc::ConfigError("density list must not be empty");
    for (double d : opt.densities) {
        if (d < 0.0 || d > 1.0)
            throw sscc::ConfigError("density " + std::to_string(d) + " outside [0, 1]");
    }
    std::uint64_t disagreements = 0;
    for (int k = 0; k < opt.fuzz_count; ++k) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(k);
        const double density = opt.densities[static_cast<std::size_t>(k) % opt.densities.size()];
        const sscc::PositionSample sample = sscc::random_position(seed, density, config);
        const sscc::EaResult ea = sscc::detect_enclosed_areas(sample.board);
        const auto oracle_areas = sscc::oracle_ea_floodfill(sample.board, config.min_ea_size);
        bool partition_ok = ea.areas.size() == oracle_areas.size();
        for (std::size_t i = 0; partition_ok && i < ea.areas.size(); ++i) {
            partition_ok = ea.areas[i].class_id == oracle_areas[i].class_id &&
                           ea.areas[i].members == oracle_areas[i].members;
        }
        if (!partition_ok) {
            ++disagreements;
            std::cout << "seed=" << seed << " density=" << density
                      << " start=- main=partition-mismatch oracle=partition-mismatch\n";
        }
        int occupied = 0;
        for (int s = 0; s < sample.board.size(); ++s) occupied += sample.board.occupied(s) ? 1 : 0;
        for (int s = 0; s < sample.board.size(); ++s) {
            if (!sample.board.occupied(s)) continue;
            const sscc::ChainVerdict verdict = sscc::two_disjoint_paths_exist(
                sample.board, ea.trace.after_compaction, s, config);
            const bool flow =
                sscc::oracle_disjoint_paths(sample.board, ea.trace.after_compaction, s);
            if (verdict.found != flow) {
                ++disagreements;
                std::cout << "seed=" << seed << " density=" << density
                          << " start=" << sscc::index_to_square(s, config)
                          << " main=" << (verdict.found ? "true" : "false")
                          << " oracle=" << (flow ? "true" : "false") << '\n';
            }
            if (occupied <= 20) {
                try {
                    const bool enumerated = sscc::oracle_enumerate_paths(
                        sample.board, ea.trace.after_compaction, s, 200000);
                    if (verdict.found != enumerated) {
                        ++disagreements;
                        std::cout << "seed=" << seed << " density=" << density
                                  << " start=" << sscc::index_to_square(s, config)
                                  << " main=" << (verdict.found ? "true" : "false")
                                  << " oracle=" << (enumerated ? "true" : "false") << '\n';
                    }
                } catch (const sscc::EnumerationOverflow&) {
                    // Enumeration is only consulted where it completes.
                }
            }
        }
    }
    std::cout << "samples=" << opt.fuzz_count << " disagreements=" << disagreements << '\n';
    return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Chain detector for Switch-Side Chain-Chess positions"};
    app.add_option("--fen", opt.fen, "Board position as a FEN placement string");
    app.add_option("--last-move", opt.last_move, "Square of the last-moved piece, e.g. f3");
    app.add_option("--min-ea-size", opt.min_ea_size,
                   "Smallest enclosed-area size that counts, default 2");
    app.add_option("--width", opt.width, "Board width, default 8");
    app.add_option("--height", opt.height, "Board height, default 8");
    app.add_flag("--trace,!--no-trace", opt.trace, "Print the stage transcript (default on)");
    app.add_flag("--oracle", opt.oracle, "Also run the max-flow oracle and report agreement");
    app.add_option("--fuzz", opt.fuzz_count,
                   "Run this many random positions against the oracles instead of detecting");
    app.add_option("--seed", opt.seed, "Base seed for --fuzz, default 1");
    app.add_option("--densities", opt.densities,
                   "Comma-separated occupancy densities cycled across --fuzz samples")
        ->delimiter(',');
    app.add_flag("--parallel", opt.parallel, "Branch-parallel search; disables the trace");
    app.add_flag("--quiet", opt.quiet, "Print one machine-readable verdict line only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (opt.fuzz_count >= 0) return run_fuzz(opt);
        if (opt.fen.empty() || opt.last_move.empty()) {
            std::cerr << "error: invalid usage, --fen and --last-move are required\n";
            return 2;
        }
        return run_detect(opt);
    } catch (const sscc::SsccError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

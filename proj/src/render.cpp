#include <sscc/render.hpp>

#include <string>

namespace sscc {

std::string render_board(const BoardGrid& board) {
    std::string out;
    for (int r = 0; r < board.height(); ++r) {
        for (int c = 0; c < board.width(); ++c) {
            if (c > 0) out += '\t';
            const int index = r * board.width() + c;
            out += board.occupied(index) ? board.piece(index) : '-';
        }
        out += '\n';
    }
    return out;
}

std::string render_class_grid(const ClassGrid& grid) {
    std::string out;
    for (int r = 0; r < grid.height(); ++r) {
        for (int c = 0; c < grid.width(); ++c) {
            if (c > 0) out += '\t';
            const int label = grid.label(r * grid.width() + c);
            out += label == 0 ? std::string("-") : std::to_string(label);
        }
        out += '\n';
    }
    return out;
}

std::string render_transcript(const StageTrace& trace) {
    std::string out;
    out += "Board Position From FEN String:\n";
    out += render_board(trace.board_snapshot);
    out += '\n';
    out += "Classes After CCA:\n";
    out += render_class_grid(trace.after_cca);
    out += '\n';
    out += "Classes After CCA and Perimeter Filtering:\n";
    out += render_class_grid(trace.after_perimeter);
    out += '\n';
    out += "Classes After CCA And Filtering:\n";
    out += render_class_grid(trace.after_size_filter);
    out += '\n';
    out += "Classes After CCA And Filtering -- Corrected:\n";
    out += render_class_grid(trace.after_compaction);
    out += '\n';
    out += trace.verdict.found ? "A VALID CHAIN WAS FOUND\n" : "A VALID CHAIN WAS ***NOT*** FOUND\n";
    return out;
}

namespace {

std::string witness_squares(const PathWitness& witness, const DetectorConfig& config) {
    if (witness.squares.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < witness.squares.size(); ++i) {
        if (i > 0) out += ',';
        out += index_to_square(witness.squares[i], config);
    }
    return out;
}

}  // namespace

std::string render_quiet_line(const ChainVerdict& verdict, const DetectorConfig& config) {
    std::string out = "verdict=";
    out += verdict.found ? "found" : "not-found";
    out += " ea_class=";
    out += verdict.found ? std::to_string(verdict.ea_class) : std::string("-");
    out += " witness1=" + witness_squares(verdict.witness1, config);
    out += " witness2=" + witness_squares(verdict.witness2, config);
    out += '\n';
    return out;
}

}  // namespace sscc

#include "sscc/board.hpp"

#include <cassert>
#include <cctype>

namespace sscc {

namespace {

bool is_piece_letter(char c) {
    switch (c) {
        case 'K': case 'Q': case 'R': case 'B': case 'N': case 'P':
        case 'k': case 'q': case 'r': case 'b': case 'n': case 'p':
            return true;
        default:
            return false;
    }
}

} // namespace

BoardGrid parse_fen(std::string_view text, const DetectorConfig& config) {
    validate_config(config);
    if (text.empty()) {
        throw InvalidFen("invalid FEN: empty string");
    }
    // Only the placement field matters; stop at the first whitespace.
    std::string_view placement = text.substr(0, text.find_first_of(" \t"));
    if (placement.empty()) {
        throw InvalidFen("invalid FEN: placement field is empty");
    }

    const int w = config.width;
    const int h = config.height;
    BoardGrid board{config, std::vector<char>(static_cast<std::size_t>(w) * h, 0)};

    int row = 0;
    int col = 0;
    std::size_t i = 0;
    while (i < placement.size()) {
        char c = placement[i];
        if (c == '/') {
            if (col != w) {
                throw InvalidFen("invalid FEN: rank " + std::to_string(h - row) + " covers " +
                                 std::to_string(col) + " squares, expected " + std::to_string(w));
            }
            ++row;
            if (row >= h) {
                throw InvalidFen("invalid FEN: more than " + std::to_string(h) + " ranks");
            }
            col = 0;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '0') {
                throw InvalidFen("invalid FEN: empty-square count starts with 0");
            }
            int run = 0;
            while (i < placement.size() && std::isdigit(static_cast<unsigned char>(placement[i]))) {
                run = run * 10 + (placement[i] - '0');
                if (run > w) {
                    throw InvalidFen("invalid FEN: rank " + std::to_string(h - row) +
                                     " overflows the board width");
                }
                ++i;
            }
            col += run;
            if (col > w) {
                throw InvalidFen("invalid FEN: rank " + std::to_string(h - row) +
                                 " overflows the board width");
            }
        } else if (is_piece_letter(c)) {
            if (col >= w) {
                throw InvalidFen("invalid FEN: rank " + std::to_string(h - row) +
                                 " overflows the board width");
            }
            board.cells[static_cast<std::size_t>(row) * w + col] = c;
            ++col;
            ++i;
        } else {
            throw InvalidFen(std::string("invalid FEN: unexpected character '") + c +
                             "' in placement field");
        }
    }
    if (row != h - 1) {
        throw InvalidFen("invalid FEN: got " + std::to_string(row + 1) + " ranks, expected " +
                         std::to_string(h));
    }
    if (col != w) {
        throw InvalidFen("invalid FEN: rank 1 covers " + std::to_string(col) +
                         " squares, expected " + std::to_string(w));
    }
    return board;
}

int square_to_index(std::string_view notation, const DetectorConfig& config) {
    validate_config(config);
    if (notation.size() < 2) {
        throw InvalidSquare("invalid square \"" + std::string(notation) + "\"");
    }
    char fc = notation[0];
    if (fc < 'a' || fc >= 'a' + config.width) {
        throw InvalidSquare("invalid square \"" + std::string(notation) +
                            "\": file out of range");
    }
    int rank = 0;
    for (std::size_t i = 1; i < notation.size(); ++i) {
        char c = notation[i];
        if (!std::isdigit(static_cast<unsigned char>(c)) || (i == 1 && c == '0')) {
            throw InvalidSquare("invalid square \"" + std::string(notation) + "\"");
        }
        rank = rank * 10 + (c - '0');
        if (rank > config.height) {
            throw InvalidSquare("invalid square \"" + std::string(notation) +
                                "\": rank out of range");
        }
    }
    if (rank < 1) {
        throw InvalidSquare("invalid square \"" + std::string(notation) + "\"");
    }
    return (config.height - rank) * config.width + (fc - 'a');
}

std::string index_to_square(int index, const DetectorConfig& config) {
    assert(index >= 0 && index < config.area());
    int row = index / config.width;
    int col = index % config.width;
    return std::string(1, static_cast<char>('a' + col)) + std::to_string(config.height - row);
}

} // namespace sscc

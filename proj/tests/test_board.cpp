#include "doctest.h"

#include <sscc/board.hpp>

#include "support.hpp"

using namespace sscc;
using namespace testsupport;

TEST_SUITE("board") {

TEST_CASE("square names map row-major with the top rank first") {
    CHECK(square_to_index("a8") == 0);
    CHECK(square_to_index("h8") == 7);
    CHECK(square_to_index("d6") == 19);
    CHECK(square_to_index("e4") == 36);
    CHECK(square_to_index("a1") == 56);
    CHECK(square_to_index("h1") == 63);
}

TEST_CASE("square names round-trip through indices for the whole board") {
    const DetectorConfig config;
    for (int i = 0; i < config.area(); ++i) {
        const std::string name = index_to_square(i, config);
        CHECK(square_to_index(name, config) == i);
    }
}

TEST_CASE("square parsing rejects malformed or out-of-range names") {
    CHECK_THROWS_AS(square_to_index(""), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("e"), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("e0"), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("e9"), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("i1"), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("4e"), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("e4x"), InvalidSquare);
    CHECK_THROWS_AS(square_to_index("e10"), InvalidSquare);
}

TEST_CASE("two-digit ranks work on taller boards") {
    DetectorConfig config;
    config.height = 12;
    CHECK(square_to_index("a12", config) == 0);
    CHECK(square_to_index("h1", config) == 8 * 12 - 1);
    CHECK(square_to_index("c10", config) == 2 * 8 + 2);
    CHECK(index_to_square(0, config) == "a12");
}

TEST_CASE("FEN placement lands pieces on the right squares") {
    const BoardGrid board = parse_fen(kQueensidePocketFen);
    CHECK(board.piece(sq("b8")) == 'b');
    CHECK(board.piece(sq("g8")) == 'r');
    CHECK(board.piece(sq("h8")) == 'k');
    CHECK(board.piece(sq("a7")) == 'n');
    CHECK(board.piece(sq("e4")) == 'P');
    CHECK(board.piece(sq("d4")) == 'p');
    CHECK(board.piece(sq("b1")) == 'B');
    CHECK_FALSE(board.occupied(sq("b7")));
    CHECK_FALSE(board.occupied(sq("b6")));
    CHECK_FALSE(board.occupied(sq("a8")));
}

TEST_CASE("FEN fields after the placement are ignored") {
    const BoardGrid board = parse_fen("8/8/8/8/8/8/8/8 w KQkq - 0 1");
    for (int i = 0; i < board.size(); ++i) CHECK_FALSE(board.occupied(i));
}

TEST_CASE("digit runs are one number, so wide boards parse") {
    DetectorConfig config;
    config.width = 12;
    config.height = 4;
    const BoardGrid board = parse_fen("12/3P8/12/11Q", config);
    CHECK(board.piece(sq("d3", config)) == 'P');
    CHECK(board.piece(sq("l1", config)) == 'Q');
    int occupied = 0;
    for (int i = 0; i < board.size(); ++i) occupied += board.occupied(i);
    CHECK(occupied == 2);
}

TEST_CASE("FEN parsing rejects malformed placements") {
    CHECK_THROWS_AS(parse_fen(""), InvalidFen);
    CHECK_THROWS_AS(parse_fen("8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("8/8/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("9/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("PPPPPPPPP/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("7/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("x7/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("08/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("4P03/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("8/8/8/8/8/8/8/8$"), InvalidFen);
}

TEST_CASE("FEN errors start with a stable prefix") {
    try {
        parse_fen("9/8/8/8/8/8/8/8");
        FAIL("expected InvalidFen");
    } catch (const InvalidFen& e) {
        CHECK(std::string(e.what()).rfind("invalid FEN:", 0) == 0);
    }
}

TEST_CASE("only FEN piece letters are accepted") {
    const std::string letters = "KQRBNPkqrbnp";
    for (char c : letters) {
        const std::string fen = std::string(1, c) + "7/8/8/8/8/8/8/8";
        const BoardGrid board = parse_fen(fen);
        CHECK(board.piece(0) == c);
    }
    CHECK_THROWS_AS(parse_fen("A7/8/8/8/8/8/8/8"), InvalidFen);
    CHECK_THROWS_AS(parse_fen("w7/8/8/8/8/8/8/8"), InvalidFen);
}

TEST_CASE("config validation guards the documented ranges") {
    DetectorConfig config;
    CHECK_NOTHROW(validate_config(config));
    config.width = 2;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config.width = 27;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config.width = 26;
    CHECK_NOTHROW(validate_config(config));
    config = DetectorConfig{};
    config.height = 2;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config = DetectorConfig{};
    config.min_ea_size = 0;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config.min_ea_size = 33;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config.min_ea_size = 32;
    CHECK_NOTHROW(validate_config(config));
    config = DetectorConfig{};
    config.neighbor_order[0] = config.neighbor_order[1];
    CHECK_THROWS_AS(validate_config(config), ConfigError);
}

}

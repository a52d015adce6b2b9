#include "sscc/config.hpp"

#include <string>

#include "sscc/errors.hpp"

namespace sscc {

void validate_config(const DetectorConfig& config) {
    if (config.width < 3 || config.height < 3) {
        throw ConfigError("board must be at least 3x3, got " + std::to_string(config.width) +
                          "x" + std::to_string(config.height));
    }
    if (config.width > 26) {
        throw ConfigError("board width capped at 26 (squares are named a..z), got " +
                          std::to_string(config.width));
    }
    if (config.min_ea_size < 1 || config.min_ea_size > config.area() / 2) {
        throw ConfigError("min_ea_size must be in [1, " + std::to_string(config.area() / 2) +
                          "], got " + std::to_string(config.min_ea_size));
    }
    bool seen[8] = {};
    for (Dir d : config.neighbor_order) {
        int i = static_cast<int>(d);
        if (i < 0 || i >= 8 || seen[i]) {
            throw ConfigError("neighbor_order must be a permutation of the eight directions");
        }
        seen[i] = true;
    }
}

} // namespace sscc

#pragma once

#include <vector>

namespace sscc {

// One recorded path of the search: occupied squares from a king-move
// neighbor of the start square to a square touching the target class. The
// start square itself is never part of the path.
struct PathWitness {
    std::vector<int> squares;
    int target_class = 0;
};

// found == true iff witness1/witness2 hold two paths to the same class that
// share no square; ea_class is that class, 0 when not found.
struct ChainVerdict {
    bool found = false;
    int ea_class = 0;
    PathWitness witness1;
    PathWitness witness2;
};

} // namespace sscc

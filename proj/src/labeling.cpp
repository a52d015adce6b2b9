#include "sscc/labeling.hpp"

#include <algorithm>

namespace sscc {

namespace {

// Union-find over provisional labels; path halving keeps it near-constant.
// Merging always keeps the smaller root so resolution tends toward the
// earliest provisional label, though the final numbering below does not
// depend on that.
struct Equivalence {
    std::vector<int> parent;

    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

} // namespace

ClassGrid label_empty_components(const BoardGrid& board) {
    const int w = board.width();
    const int h = board.height();
    ClassGrid grid{board.config, std::vector<int>(static_cast<std::size_t>(w) * h, 0)};

    // Pass 1: provisional labels from the already-scanned neighbors
    // (previous row's three cells plus the left cell).
    Equivalence eq;
    std::vector<int> prov(grid.labels.size(), -1);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            int i = r * w + c;
            if (board.occupied(i)) continue;
            int best = -1;
            const int prior[4][2] = {{r - 1, c - 1}, {r - 1, c}, {r - 1, c + 1}, {r, c - 1}};
            for (auto [rr, cc] : prior) {
                if (rr < 0 || cc < 0 || cc >= w) continue;
                int p = prov[rr * w + cc];
                if (p < 0) continue;
                if (best < 0) {
                    best = p;
                } else {
                    eq.merge(best, p);
                }
            }
            prov[i] = best >= 0 ? best : eq.make();
        }
    }

    // Pass 2: resolve equivalences, then number roots 1..K in the order
    // their first member appears in the scan.
    std::vector<int> final_label(eq.parent.size(), 0);
    int next = 1;
    for (std::size_t i = 0; i < prov.size(); ++i) {
        if (prov[i] < 0) continue;
        int root = eq.find(prov[i]);
        if (final_label[root] == 0) final_label[root] = next++;
        grid.labels[i] = final_label[root];
    }
    return grid;
}

ClassGrid compact_labels(const ClassGrid& grid) {
    ClassGrid out = grid;
    std::vector<int> remap;
    int next = 1;
    for (auto& l : out.labels) {
        if (l == 0) continue;
        if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(l + 1, 0);
        if (remap[l] == 0) remap[l] = next++;
        l = remap[l];
    }
    return out;
}

} // namespace sscc

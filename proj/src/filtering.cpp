#include "sscc/filtering.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace sscc {

ClassGrid perimeter_filter(const ClassGrid& grid, const BoardGrid& board,
                           std::vector<int>* removed) {
    const int w = grid.width();
    const int h = grid.height();
    ClassGrid out = grid;

    // BFS over 4-adjacency from every empty rim square marks everything the
    // rim can drain through horizontal/vertical empty walks.
    std::vector<char> reach(out.labels.size(), 0);
    std::deque<int> frontier;
    auto seed = [&](int i) {
        if (!board.occupied(i) && !reach[i]) {
            reach[i] = 1;
            frontier.push_back(i);
        }
    };
    for (int c = 0; c < w; ++c) {
        seed(c);
        seed((h - 1) * w + c);
    }
    for (int r = 1; r + 1 < h; ++r) {
        seed(r * w);
        seed(r * w + w - 1);
    }
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop_front();
        int r = i / w, c = i % w;
        const int next[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
        for (auto [rr, cc] : next) {
            if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
            seed(rr * w + cc);
        }
    }

    for (int i = 0; i < out.size(); ++i) {
        int r = i / w, c = i % w;
        bool rim = r == 0 || r == h - 1 || c == 0 || c == w - 1;
        if ((rim || reach[i]) && out.labels[i] != 0) {
            out.labels[i] = 0;
            if (removed) removed->push_back(i);
        }
    }
    return out;
}

ClassGrid eliminate_small_classes(const ClassGrid& grid, int min_size,
                                  std::vector<int>* removed_class_ids) {
    if (min_size <= 1) return grid;
    if (min_size > grid.config.area() / 2) {
        throw ConfigError("minimum class size " + std::to_string(min_size) +
                          " exceeds half the board area");
    }
    std::vector<int> count;
    for (int l : grid.labels) {
        if (l == 0) continue;
        if (static_cast<std::size_t>(l) >= count.size()) count.resize(l + 1, 0);
        ++count[l];
    }
    ClassGrid out = grid;
    for (auto& l : out.labels) {
        if (l != 0 && count[l] < min_size) l = 0;
    }
    if (removed_class_ids) {
        for (std::size_t id = 1; id < count.size(); ++id) {
            if (count[id] > 0 && count[id] < min_size) {
                removed_class_ids->push_back(static_cast<int>(id));
            }
        }
    }
    return out;
}

EaResult detect_enclosed_areas(const BoardGrid& board) {
    validate_config(board.config);
    EaResult result;
    StageTrace& trace = result.trace;
    trace.board_snapshot = board;
    trace.after_cca = label_empty_components(board);
    trace.after_perimeter =
        perimeter_filter(trace.after_cca, board, &result.report.removed_by_perimeter);
    trace.after_size_filter = eliminate_small_classes(
        trace.after_perimeter, board.config.min_ea_size, &result.report.removed_classes_by_size);

    // Corrected stage: regroup survivors into maximal 8-connected areas
    // (perimeter filtering may have split a class into islands), drop areas
    // that fell under the minimum, and number the rest by first occurrence.
    const int w = board.width();
    const int h = board.height();
    const ClassGrid& sized = trace.after_size_filter;
    ClassGrid corrected{board.config, std::vector<int>(sized.labels.size(), 0)};
    std::vector<char> visited(sized.labels.size(), 0);
    int next_id = 1;
    for (int i = 0; i < sized.size(); ++i) {
        if (sized.labels[i] == 0 || visited[i]) continue;
        std::vector<int> members;
        std::deque<int> frontier{i};
        visited[i] = 1;
        while (!frontier.empty()) {
            int x = frontier.front();
            frontier.pop_front();
            members.push_back(x);
            int r = x / w, c = x % w;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    int rr = r + dr, cc = c + dc;
                    if (rr < 0 || rr >= h || cc < 0 || cc >= w) continue;
                    int j = rr * w + cc;
                    if (sized.labels[j] != 0 && !visited[j]) {
                        visited[j] = 1;
                        frontier.push_back(j);
                    }
                }
            }
        }
        if (static_cast<int>(members.size()) < board.config.min_ea_size) continue;
        std::sort(members.begin(), members.end());
        for (int m : members) corrected.labels[m] = next_id;
        result.areas.push_back({next_id, std::move(members)});
        ++next_id;
    }
    trace.after_compaction = std::move(corrected);
    result.report.surviving_areas = result.areas;
    return result;
}

} // namespace sscc

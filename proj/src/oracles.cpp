#include <sscc/oracles.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <string>

#include <sscc/errors.hpp>

namespace sscc {

namespace {

constexpr int kRowDelta[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kColDelta[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

std::vector<int> king_neighbors(int square, int width, int height) {
    std::vector<int> out;
    const int r = square / width;
    const int c = square % width;
    for (int d = 0; d < 8; ++d) {
        const int nr = r + kRowDelta[d];
        const int nc = c + kColDelta[d];
        if (nr >= 0 && nr < height && nc >= 0 && nc < width) out.push_back(nr * width + nc);
    }
    return out;
}

// Classes whose squares are 8-adjacent to the given square, ascending, deduplicated.
std::vector<int> touched_classes(const ClassGrid& grid, int square) {
    std::vector<int> out;
    for (int n : king_neighbors(square, grid.width(), grid.height())) {
        const int label = grid.label(n);
        if (label > 0 && std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_start(const BoardGrid& board, int start) {
    if (start < 0 || start >= board.size())
        throw InvalidSquare("start index " + std::to_string(start) + " out of range");
    if (!board.occupied(start))
        throw StartSquareEmpty("start square " + index_to_square(start, board.config) +
                               " is empty");
}

struct FlowEdge {
    int to;
    int cap;
    int rev;
};

struct FlowGraph {
    std::vector<std::vector<FlowEdge>> adj;

    explicit FlowGraph(int nodes) : adj(nodes) {}

    void add_edge(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    // Edmonds-Karp, one unit per augmentation, stopping once flow_cap is reached.
    int max_flow(int source, int sink, int flow_cap) {
        int flow = 0;
        std::vector<int> prev_node(adj.size());
        std::vector<int> prev_edge(adj.size());
        while (flow < flow_cap) {
            std::vector<char> seen(adj.size(), 0);
            std::deque<int> queue{source};
            seen[source] = 1;
            bool reached = false;
            while (!queue.empty() && !reached) {
                const int u = queue.front();
                queue.pop_front();
                for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                    const FlowEdge& e = adj[u][i];
                    if (e.cap <= 0 || seen[e.to]) continue;
                    seen[e.to] = 1;
                    prev_node[e.to] = u;
                    prev_edge[e.to] = i;
                    if (e.to == sink) {
                        reached = true;
                        break;
                    }
                    queue.push_back(e.to);
                }
            }
            if (!reached) break;
            for (int v = sink; v != source; v = prev_node[v]) {
                FlowEdge& e = adj[prev_node[v]][prev_edge[v]];
                e.cap -= 1;
                adj[v][e.rev].cap += 1;
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int oracle_class_flow(const BoardGrid& board, const ClassGrid& grid, int start, int class_id,
                      int flow_cap) {
    check_start(board, start);
    const int n = board.size();
    // Node ids: square s has in-node 2s and out-node 2s+1; start uses only its out-node.
    const int sink = 2 * n;
    FlowGraph graph(2 * n + 1);
    const int source = 2 * start + 1;
    for (int s = 0; s < n; ++s) {
        if (!board.occupied(s)) continue;
        if (s != start) graph.add_edge(2 * s, 2 * s + 1, 1);
        for (int t : king_neighbors(s, board.width(), board.height())) {
            if (t != start && board.occupied(t)) graph.add_edge(2 * s + 1, 2 * t, 1);
        }
        if (s != start) {
            const auto classes = touched_classes(grid, s);
            if (std::find(classes.begin(), classes.end(), class_id) != classes.end())
                graph.add_edge(2 * s + 1, sink, 1);
        }
    }
    return graph.max_flow(source, sink, flow_cap);
}

bool oracle_disjoint_paths(const BoardGrid& board, const ClassGrid& grid, int start) {
    check_start(board, start);
    int max_label = 0;
    for (int s = 0; s < grid.size(); ++s) max_label = std::max(max_label, grid.label(s));
    for (int c = 1; c <= max_label; ++c) {
        if (oracle_class_flow(board, grid, start, c, 2) >= 2) return true;
    }
    return false;
}

namespace {

// Square-set bitmask sized for one board.
struct SquareMask {
    std::vector<std::uint64_t> words;

    explicit SquareMask(int squares) : words((squares + 63) / 64, 0) {}

    void set(int s) { words[s >> 6] |= std::uint64_t{1} << (s & 63); }

    bool intersects(const SquareMask& other) const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i] & other.words[i]) return true;
        return false;
    }
};

struct EnumContext {
    const BoardGrid& board;
    const ClassGrid& grid;
    int start;
    std::size_t path_cap;
    std::size_t step_cap;
    std::size_t records = 0;
    std::size_t steps = 0;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<std::vector<SquareMask>> by_class;  // index = class id - 1
};

void enumerate_from(EnumContext& ctx, int square) {
    if (++ctx.steps > ctx.step_cap)
        throw EnumerationOverflow("path enumeration exceeded its step budget");
    ctx.path.push_back(square);
    ctx.on_path[square] = 1;
    const auto classes = touched_classes(ctx.grid, square);
    if (!classes.empty()) {
        // Terminal: record under each touched class and never extend past it.
        SquareMask mask(ctx.board.size());
        for (int s : ctx.path) mask.set(s);
        for (int c : classes) {
            if (++ctx.records > ctx.path_cap)
                throw EnumerationOverflow("more than " + std::to_string(ctx.path_cap) +
                                          " recorded paths");
            ctx.by_class[c - 1].push_back(mask);
        }
    } else {
        for (int n : king_neighbors(square, ctx.board.width(), ctx.board.height())) {
            if (n == ctx.start || ctx.on_path[n] || !ctx.board.occupied(n)) continue;
            enumerate_from(ctx, n);
        }
    }
    ctx.on_path[square] = 0;
    ctx.path.pop_back();
}

}  // namespace

bool oracle_enumerate_paths(const BoardGrid& board, const ClassGrid& grid, int start,
                            std::size_t path_cap, std::size_t* recorded) {
    check_start(board, start);
    if (recorded) *recorded = 0;
    int max_label = 0;
    for (int s = 0; s < grid.size(); ++s) max_label = std::max(max_label, grid.label(s));
    if (max_label == 0) return false;
    EnumContext ctx{board,
                    grid,
                    start,
                    path_cap,
                    std::max<std::size_t>(path_cap * 64, std::size_t{1} << 22),
                    0,
                    0,
                    std::vector<char>(board.size(), 0),
                    {},
                    std::vector<std::vector<SquareMask>>(max_label)};
    ctx.on_path[start] = 1;
    for (int n : king_neighbors(start, board.width(), board.height())) {
        if (board.occupied(n)) enumerate_from(ctx, n);
    }
    if (recorded) *recorded = ctx.records;
    for (const auto& paths : ctx.by_class) {
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (std::size_t j = i + 1; j < paths.size(); ++j) {
                if (!paths[i].intersects(paths[j])) return true;
            }
        }
    }
    return false;
}

std::vector<EnclosedArea> oracle_ea_floodfill(const BoardGrid& board, int min_size) {
    const int w = board.width();
    const int h = board.height();
    const int n = board.size();
    std::vector<char> reached(n, 0);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        const int r = s / w;
        const int c = s % w;
        const bool rim = r == 0 || r == h - 1 || c == 0 || c == w - 1;
        if (rim && !board.occupied(s)) {
            reached[s] = 1;
            queue.push_back(s);
        }
    }
    constexpr int kOrthRow[4] = {-1, 0, 0, 1};
    constexpr int kOrthCol[4] = {0, -1, 1, 0};
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        const int r = s / w;
        const int c = s % w;
        for (int d = 0; d < 4; ++d) {
            const int nr = r + kOrthRow[d];
            const int nc = c + kOrthCol[d];
            if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
            const int t = nr * w + nc;
            if (!reached[t] && !board.occupied(t)) {
                reached[t] = 1;
                queue.push_back(t);
            }
        }
    }
    std::vector<char> grouped(n, 0);
    std::vector<EnclosedArea> areas;
    for (int s = 0; s < n; ++s) {
        if (board.occupied(s) || reached[s] || grouped[s]) continue;
        std::vector<int> members{s};
        grouped[s] = 1;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (int t : king_neighbors(members[head], w, h)) {
                if (!board.occupied(t) && !reached[t] && !grouped[t]) {
                    grouped[t] = 1;
                    members.push_back(t);
                }
            }
        }
        if (static_cast<int>(members.size()) < min_size) continue;
        std::sort(members.begin(), members.end());
        EnclosedArea area;
        area.class_id = static_cast<int>(areas.size()) + 1;
        area.members = std::move(members);
        areas.push_back(std::move(area));
    }
    return areas;
}

namespace {

// Even-odd ray cast with exact integers. Polygon edges join centers of 8-adjacent squares,
// so each edge spans at most one row and an interior lattice point on an edge is impossible.
bool strictly_inside(const std::vector<int>& cycle, int point, int width) {
    const int px = point % width;
    const int py = point / width;
    int crossings = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int a = cycle[i];
        const int b = cycle[(i + 1) % cycle.size()];
        const int y1 = a / width;
        const int y2 = b / width;
        if ((y1 <= py) == (y2 <= py)) continue;
        const int x_at = (y1 == py) ? a % width : b % width;
        if (px < x_at) ++crossings;
    }
    return (crossings & 1) != 0;
}

struct CycleContext {
    const BoardGrid& board;
    const EnclosedArea& area;
    int start;
    std::size_t steps = 0;
    std::vector<char> on_path;
    std::vector<int> path;
};

bool cycles_from(CycleContext& ctx, int square) {
    if (++ctx.steps > 20'000'000)
        throw EnumerationOverflow("cycle search exceeded its step budget");
    ctx.path.push_back(square);
    ctx.on_path[square] = 1;
    bool found = false;
    for (int n : king_neighbors(square, ctx.board.width(), ctx.board.height())) {
        if (!ctx.board.occupied(n)) continue;
        if (n == ctx.start && ctx.path.size() >= 3) {
            bool all_inside = true;
            for (int member : ctx.area.members) {
                if (!strictly_inside(ctx.path, member, ctx.board.width())) {
                    all_inside = false;
                    break;
                }
            }
            if (all_inside) {
                found = true;
                break;
            }
        } else if (n != ctx.start && !ctx.on_path[n]) {
            if (cycles_from(ctx, n)) {
                found = true;
                break;
            }
        }
    }
    ctx.on_path[square] = 0;
    ctx.path.pop_back();
    return found;
}

}  // namespace

bool oracle_enclosing_cycle(const BoardGrid& board, int start, const EnclosedArea& area) {
    check_start(board, start);
    int occupied = 0;
    for (int s = 0; s < board.size(); ++s) occupied += board.occupied(s) ? 1 : 0;
    if (occupied > 16)
        throw EnumerationOverflow("cycle probe supports at most 16 occupied squares, got " +
                                  std::to_string(occupied));
    CycleContext ctx{board, area, start, 0, std::vector<char>(board.size(), 0), {}};
    // The path holds the cycle minus the closing edge back to start.
    return cycles_from(ctx, start);
}

PositionSample random_position(std::uint64_t seed, double density, const DetectorConfig& config) {
    validate_config(config);
    std::mt19937_64 rng(seed);
    constexpr std::uint64_t kOne = std::uint64_t{1} << 53;
    std::uint64_t threshold = 0;
    if (density >= 1.0) {
        threshold = kOne;
    } else if (density > 0.0) {
        threshold = static_cast<std::uint64_t>(density * 9007199254740992.0);
    }
    static constexpr char kLetters[] = "KQRBNPkqrbnp";
    PositionSample sample;
    sample.seed = seed;
    sample.density = density;
    sample.board.config = config;
    sample.board.cells.assign(static_cast<std::size_t>(config.area()), 0);
    bool any = false;
    for (int s = 0; s < config.area(); ++s) {
        if ((rng() >> 11) < threshold) {
            sample.board.cells[s] = kLetters[rng() % 12];
            any = true;
        }
    }
    if (!any) {
        const int s = static_cast<int>(rng() % static_cast<std::uint64_t>(config.area()));
        sample.board.cells[s] = kLetters[rng() % 12];
    }
    return sample;
}

}  // namespace sscc

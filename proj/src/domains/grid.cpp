#include "mgs/domains/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgs {

namespace {

// Flood-fill size of the passable component containing `from`.
std::size_t component_size(const GridWorld& g, std::size_t from, std::vector<std::size_t>& stack,
                           std::vector<std::uint8_t>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    stack.push_back(from);
    seen[from] = 1;
    std::size_t n = 0;
    while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        ++n;
        int x = static_cast<int>(c % static_cast<std::size_t>(g.width));
        int y = static_cast<int>(c / static_cast<std::size_t>(g.width));
        const int dx[4] = {0, 0, -1, 1};
        const int dy[4] = {-1, 1, 0, 0};
        for (int k = 0; k < 4; ++k) {
            int nx = x + dx[k], ny = y + dy[k];
            if (!g.passable(nx, ny)) continue;
            std::size_t nc = g.cell(nx, ny);
            if (!seen[nc]) {
                seen[nc] = 1;
                stack.push_back(nc);
            }
        }
    }
    return n;
}

} // namespace

std::size_t GridWorld::passable_count() const {
    std::size_t n = 0;
    for (std::uint8_t w : wall) n += (w == 0);
    return n;
}

std::vector<StateId> GridWorld::passable_cells() const {
    std::vector<StateId> out;
    out.reserve(passable_count());
    for (std::size_t c = 0; c < wall.size(); ++c)
        if (!wall[c]) out.push_back(static_cast<StateId>(c));
    return out;
}

bool GridWorld::is_goal_cell(StateId s) const {
    return std::find(goals.begin(), goals.end(), s) != goals.end();
}

GridWorld generate_grid(int width, int height, double density, int max_wall_length,
                        std::uint64_t seed) {
    if (width < 2 || height < 2)
        throw std::invalid_argument("grid: need at least 2x2");
    if (density < 0.0 || density >= 1.0)
        throw std::invalid_argument("grid: wall density must be in [0,1)");
    if (max_wall_length < 1)
        throw std::invalid_argument("grid: max wall length must be >= 1");

    GridWorld g;
    g.width = width;
    g.height = height;
    g.wall.assign(static_cast<std::size_t>(width) * height, 0);

    std::size_t target = static_cast<std::size_t>(density * width * height);
    if (target == 0) return g;
    // Leave at least one passable cell no matter what density asks for.
    target = std::min(target, g.wall.size() - 1);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_x(0, width - 1), pick_y(0, height - 1);
    std::uniform_int_distribution<int> pick_len(1, max_wall_length);
    std::uniform_int_distribution<int> pick_dir(0, 1);

    std::vector<std::size_t> stack;
    std::vector<std::uint8_t> seen(g.wall.size());
    std::vector<std::size_t> segment;

    std::size_t placed = 0;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 10 * target;
    while (placed < target) {
        if (++attempts > max_attempts)
            throw std::runtime_error("grid: could not reach requested wall density while "
                                     "keeping the map connected");

        int x = pick_x(rng), y = pick_y(rng);
        int len = pick_len(rng);
        int horizontal = pick_dir(rng);

        segment.clear();
        for (int i = 0; i < len; ++i) {
            int cx = horizontal ? x + i : x;
            int cy = horizontal ? y : y + i;
            if (!g.in_bounds(cx, cy)) break;
            std::size_t c = g.cell(cx, cy);
            if (!g.wall[c]) segment.push_back(c);
        }
        if (segment.empty()) continue;

        for (std::size_t c : segment) g.wall[c] = 1;

        // A wall segment is kept only if the remaining passable region is one
        // component. Any passable cell works as the flood-fill origin.
        std::size_t pass = g.wall.size() - placed - segment.size();
        std::size_t origin = g.wall.size();
        for (std::size_t c = 0; c < g.wall.size(); ++c)
            if (!g.wall[c]) { origin = c; break; }
        if (pass == 0 || origin == g.wall.size() ||
            component_size(g, origin, stack, seen) != pass) {
            for (std::size_t c : segment) g.wall[c] = 0; // reject, redraw
            continue;
        }
        placed += segment.size();
    }
    return g;
}

void place_goals(GridWorld& grid, std::size_t count, const GoalPlacement& placement,
                 std::uint64_t seed) {
    std::vector<StateId> cells = grid.passable_cells();
    if (count > cells.size())
        throw std::invalid_argument("grid: more goals requested than passable cells");

    std::mt19937_64 rng(seed);
    grid.goals.clear();
    std::vector<std::uint8_t> used(grid.wall.size(), 0);

    auto take = [&](StateId c) {
        used[c] = 1;
        grid.goals.push_back(c);
    };
    auto draw_uniform = [&]() {
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        for (;;) {
            StateId c = cells[pick(rng)];
            if (!used[c]) return c;
        }
    };

    if (placement.mode == GoalPlacement::Mode::kScattered) {
        for (std::size_t i = 0; i < count; ++i) take(draw_uniform());
        return;
    }

    if (placement.clusters < 1) throw std::invalid_argument("grid: need at least one cluster");

    // One in ten goals is background noise, scattered like the uniform mode.
    std::size_t scattered = count / 10;
    std::size_t clustered = count - scattered;
    for (std::size_t i = 0; i < scattered; ++i) take(draw_uniform());

    std::uniform_int_distribution<std::size_t> pick_center(0, cells.size() - 1);
    std::vector<StateId> centers;
    for (int k = 0; k < placement.clusters; ++k) centers.push_back(cells[pick_center(rng)]);

    for (std::size_t i = 0; i < clustered; ++i) {
        StateId center = centers[i % centers.size()];
        int cx = grid.cell_x(center), cy = grid.cell_y(center);
        // Degenerate spreads (or a saturated vicinity) would redraw forever;
        // widen the spread after each batch of misses so placement always
        // terminates while staying as tight as the map allows.
        double sigma = std::max(placement.spread, 1e-3);
        for (int tries = 1;; ++tries) {
            std::normal_distribution<double> offset(0.0, sigma);
            int gx = cx + static_cast<int>(std::lround(offset(rng)));
            int gy = cy + static_cast<int>(std::lround(offset(rng)));
            if (grid.passable(gx, gy) && !used[grid.cell(gx, gy)]) {
                take(static_cast<StateId>(grid.cell(gx, gy)));
                break;
            }
            if (tries % 64 == 0) sigma *= 2.0;
        }
    }
}

std::vector<StateId> GridSpace::successors(StateId s) {
    int x = grid_.cell_x(s), y = grid_.cell_y(s);
    std::vector<StateId> out;
    out.reserve(4);
    const int dx[4] = {0, 0, -1, 1};
    const int dy[4] = {-1, 1, 0, 0};
    for (int k = 0; k < 4; ++k) {
        int nx = x + dx[k], ny = y + dy[k];
        if (grid_.passable(nx, ny)) out.push_back(static_cast<StateId>(grid_.cell(nx, ny)));
    }
    return out;
}

ExplicitGraph grid_to_graph(const GridWorld& grid) {
    std::vector<StateId> cells = grid.passable_cells();
    std::vector<std::uint32_t> id_of(grid.wall.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) id_of[cells[i]] = static_cast<std::uint32_t>(i);

    GridSpace space(grid);
    ExplicitGraph g;
    g.feature_dim = 2;
    g.succs.resize(cells.size());
    g.feats.resize(cells.size());
    g.goal.assign(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        g.feats[i] = space.features(cells[i]);
        g.goal[i] = space.is_goal(cells[i]) ? 1 : 0;
        for (StateId t : space.successors(cells[i])) g.succs[i].push_back(id_of[t]);
    }
    return g;
}

} // namespace mgs

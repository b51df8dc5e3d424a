#ifndef MGS_DOMAINS_GRID_HPP
#define MGS_DOMAINS_GRID_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mgs/domains/graph_file.hpp"
#include "mgs/goal_list.hpp"
#include "mgs/state_space.hpp"

namespace mgs {

/**
 * Rectangular 4-connected map with straight wall segments. The passable
 * region is guaranteed connected: the generator rejects any wall that would
 * split it. States are cell ids (y * width + x) over passable cells.
 */
struct GridWorld {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> wall;   // width*height, row-major
    std::vector<StateId> goals;       // passable cells, placement order

    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    bool passable(int x, int y) const { return in_bounds(x, y) && !wall[cell(x, y)]; }
    std::size_t cell(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(x);
    }
    int cell_x(StateId s) const { return static_cast<int>(s % static_cast<StateId>(width)); }
    int cell_y(StateId s) const { return static_cast<int>(s / static_cast<StateId>(width)); }

    std::size_t passable_count() const;
    std::vector<StateId> passable_cells() const; // ascending cell id
    bool is_goal_cell(StateId s) const;
};

/**
 * Random walls: straight segments with uniform orientation, length uniform in
 * [1, max_wall_length], redrawn whenever they would disconnect the passable
 * region, until `density` * width * height cells are walled. Gives up (throws
 * runtime_error) after 10x the targeted wall-cell count of attempts.
 */
GridWorld generate_grid(int width, int height, double density, int max_wall_length,
                        std::uint64_t seed);

struct GoalPlacement {
    enum class Mode { kScattered, kClustered } mode = Mode::kScattered;
    int clusters = 3;        // K centers (clustered mode)
    double spread = 3.0;     // normal-offset sigma around a center, in cells
};

/**
 * Draws `count` distinct goal cells. Scattered: uniform over passable cells.
 * Clustered: one tenth placed uniformly, the rest at normally distributed
 * offsets around K uniformly drawn centers (redrawn until passable and
 * unused).
 */
void place_goals(GridWorld& grid, std::size_t count, const GoalPlacement& placement,
                 std::uint64_t seed);

/** 4-connected moves in fixed up/down/left/right order; features are (x, y). */
class GridSpace : public StateSpace {
public:
    explicit GridSpace(const GridWorld& grid) : grid_(grid) {
        goal_set_.assign(static_cast<std::size_t>(grid.width) * grid.height, 0);
        for (StateId g : grid.goals) goal_set_[g] = 1;
    }

    std::vector<StateId> successors(StateId s) override;
    bool is_goal(StateId s) override { return goal_set_[s] != 0; }
    bool has_features() const override { return true; }
    std::vector<double> features(StateId s) override {
        return {static_cast<double>(grid_.cell_x(s)), static_cast<double>(grid_.cell_y(s))};
    }
    std::string encode(StateId s) override {
        return std::to_string(grid_.cell_x(s)) + "," + std::to_string(grid_.cell_y(s));
    }

    const GridWorld& grid() const { return grid_; }

private:
    const GridWorld& grid_;
    std::vector<std::uint8_t> goal_set_;
};

/** Manhattan distance between cell ids; a lower bound on true path length. */
class ManhattanEstimator : public DistanceEstimator {
public:
    explicit ManhattanEstimator(const GridWorld& grid) : grid_(grid) {}
    double distance(StateId a, StateId b) const override {
        int dx = grid_.cell_x(a) - grid_.cell_x(b);
        int dy = grid_.cell_y(a) - grid_.cell_y(b);
        return std::abs(dx) + std::abs(dy);
    }

private:
    const GridWorld& grid_;
};

ExplicitGraph grid_to_graph(const GridWorld& grid);

} // namespace mgs

#endif

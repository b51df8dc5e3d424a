#include "mgs/domains/robots.hpp"

#include <random>
#include <stdexcept>

#include "mgs/best_first.hpp"

namespace mgs {

MultiRobotResult run_multi_robot(const GridWorld& grid, const MultiRobotParams& params,
                                 const RobotScorerFactory& make_scorer, std::uint64_t seed) {
    if (params.robots < 1) throw std::invalid_argument("robots: need at least one robot");
    if (params.resource_limit < 1)
        throw std::invalid_argument("robots: resource limit must be >= 1");

    // Objects are scattered goals on a private copy of the map.
    GridWorld map = grid;
    place_goals(map, params.objects, GoalPlacement{}, seed);
    GridSpace space(map);
    GoalList objects(map.goals);
    ManhattanEstimator manhattan(map);

    std::mt19937_64 rng(seed ^ 0x726f626f74ull);
    std::vector<StateId> cells = map.passable_cells();
    std::uniform_int_distribution<std::size_t> pick_cell(0, cells.size() - 1);

    MultiRobotResult result;

    struct Robot {
        std::unique_ptr<NodeScorer> scorer;
        std::unique_ptr<BestFirstEngine> engine;
        bool done = false;
    };
    std::vector<Robot> robots(static_cast<std::size_t>(params.robots));

    auto total_generated = [&]() {
        std::uint64_t t = 0;
        for (const Robot& r : robots)
            if (r.engine) t += r.engine->graph().meter().generated;
        return t;
    };
    auto swept = [&]() { return objects.size() - objects.unvisited_count(); };
    auto note_progress = [&]() {
        std::uint64_t g = total_generated();
        std::uint64_t goals = swept();
        auto& cps = result.trace.checkpoints;
        if (!cps.empty() && cps.back().goals == goals) return;
        if (!cps.empty() && cps.back().generated == g)
            cps.back().goals = goals;
        else
            cps.push_back({g, goals});
    };

    for (std::size_t r = 0; r < robots.size(); ++r) {
        StateId start = cells[pick_cell(rng)];
        result.starts.push_back(start);

        SearchProblem problem;
        problem.space = &space;
        problem.initial_states = {start};
        // Real limits are reimposed before every step; this only needs to
        // admit the whole shared budget.
        problem.resource_limit = params.resource_limit;

        EngineHooks hooks;
        hooks.on_goal_collected = [&objects, &note_progress](StateId s, NodeIdx) {
            if (objects.contains(s)) objects.mark_visited(s); // idempotent across robots
            note_progress();
        };

        robots[r].scorer = make_scorer(static_cast<int>(r), objects, manhattan);
        robots[r].engine = std::make_unique<BestFirstEngine>(problem, *robots[r].scorer,
                                                             params.engine, hooks);
    }

    // Round-robin: before a robot moves, its private meter is re-limited to
    // its own spend plus whatever remains of the shared budget. A robot whose
    // step() fails with budget left has exhausted its open list for good.
    for (;;) {
        bool moved = false;
        for (Robot& r : robots) {
            if (r.done) continue;
            std::uint64_t used = total_generated();
            if (used >= params.resource_limit) break;
            ResourceMeter& meter = r.engine->graph().meter();
            meter.limit = meter.generated + (params.resource_limit - used);
            if (r.engine->step())
                moved = true;
            else
                r.done = true;
        }
        if (!moved || total_generated() >= params.resource_limit) break;
    }

    result.generated = total_generated();
    result.objects_swept = swept();
    result.trace.final_generated = result.generated;
    return result;
}

} // namespace mgs

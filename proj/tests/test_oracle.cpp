#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "mgs/best_first.hpp"
#include "mgs/domains/graph_file.hpp"
#include "mgs/domains/grid.hpp"
#include "mgs/domains/queens.hpp"
#include "mgs/oracle.hpp"

#include "support/csp_ref.hpp"
#include "support/random_graph.hpp"

using namespace mgs;

namespace {

ExplicitGraph chain_with_goals(std::size_t n, const std::vector<std::uint32_t>& goals) {
    ExplicitGraph g;
    g.succs.assign(n, {});
    g.feats.assign(n, {});
    g.goal.assign(n, 0);
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.succs[i].push_back(i + 1);
    for (auto v : goals) g.goal[v] = 1;
    return g;
}

} // namespace

TEST_CASE("a zero-size forest collects nothing") {
    auto eg = chain_with_goals(4, {1, 2, 3});
    FileGraphSpace space(std::move(eg));
    ForestInstance inst{&space, {0}, {}, {}, 0};
    CHECK(optimal_forest_goal_count(inst) == 0);
}

TEST_CASE("the best forest grows under the richer subtree") {
    // Two open nodes: one shades a barren pair of leaves, the other a chain of
    // two goals. With two growth steps the goal chain wins outright.
    ExplicitGraph eg;
    eg.succs.assign(6, {});
    eg.feats.assign(6, {});
    eg.goal.assign(6, 0);
    eg.succs[0] = {2, 3};
    eg.succs[1] = {4};
    eg.succs[4] = {5};
    eg.goal[4] = 1;
    eg.goal[5] = 1;
    FileGraphSpace space(std::move(eg));

    ForestInstance inst{&space, {0, 1}, {}, {}, 2};
    CHECK(optimal_forest_goal_count(inst) == 2);
    CHECK(opt_membership(inst) == std::vector<StateId>{1});
}

TEST_CASE("a chain of goals is swallowed whole when the budget allows") {
    auto eg = chain_with_goals(4, {1, 2, 3});
    FileGraphSpace space(std::move(eg));
    CHECK(optimal_forest_goal_count({&space, {0}, {}, {}, 3}) == 3);
    CHECK(optimal_forest_goal_count({&space, {0}, {}, {}, 1}) == 1);

    // More budget never hurts.
    std::uint64_t prev = 0;
    for (std::uint64_t r = 0; r <= 3; ++r) {
        std::uint64_t c = optimal_forest_goal_count({&space, {0}, {}, {}, r});
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("membership degenerates gracefully") {
    auto eg = chain_with_goals(5, {2});
    FileGraphSpace space(std::move(eg));

    // A single open node with something to gain is the sole member.
    CHECK(opt_membership({&space, {0}, {}, {}, 3}) == std::vector<StateId>{0});

    // When no forest collects anything, every open node ties.
    auto barren = chain_with_goals(4, {});
    FileGraphSpace barren_space(std::move(barren));
    auto all = opt_membership({&barren_space, {0, 2}, {}, {}, 2});
    CHECK(all == std::vector<StateId>{0, 2});
}

TEST_CASE("generated and collected states are off the table") {
    // 0 -> {1, 2}, both goals, but 1 was already generated and its goal value
    // consumed: the forest can only pick up 2.
    ExplicitGraph eg;
    eg.succs.assign(3, {});
    eg.feats.assign(3, {});
    eg.goal.assign(3, 0);
    eg.succs[0] = {1, 2};
    eg.goal[1] = 1;
    eg.goal[2] = 1;
    FileGraphSpace space(std::move(eg));

    ForestInstance inst{&space, {0}, {1}, {1}, 2};
    CHECK(optimal_forest_goal_count(inst) == 1);

    // Collected-only (still ungenerated elsewhere) just mutes the goal.
    ExplicitGraph eg2;
    eg2.succs.assign(2, {});
    eg2.feats.assign(2, {});
    eg2.goal.assign(2, 0);
    eg2.succs[0] = {1};
    eg2.goal[1] = 1;
    FileGraphSpace space2(std::move(eg2));
    ForestInstance muted{&space2, {0}, {}, {1}, 1};
    CHECK(optimal_forest_goal_count(muted) == 0);
    CHECK(opt_membership(muted) == std::vector<StateId>{0}); // vacuous tie
}

TEST_CASE("with enough budget every open node joins the one maximal forest") {
    ExplicitGraph eg;
    eg.succs.assign(6, {});
    eg.feats.assign(6, {});
    eg.goal.assign(6, 0);
    eg.succs[0] = {2, 3};
    eg.succs[1] = {4, 5};
    eg.goal[2] = 1;
    eg.goal[4] = 1;
    FileGraphSpace space(std::move(eg));

    ForestInstance inst{&space, {0, 1}, {}, {}, 4};
    CHECK(optimal_forest_goal_count(inst) == 2);
    CHECK(opt_membership(inst) == std::vector<StateId>{0, 1});
}

TEST_CASE("oversized instances are rejected, not truncated") {
    GridWorld gw;
    gw.width = 20;
    gw.height = 20;
    gw.wall.assign(400, 0);
    GridSpace space(gw);

    CHECK_THROWS_AS(optimal_forest_goal_count({&space, {gw.cell(10, 10)}, {}, {}, 13}),
                    std::runtime_error);
    CHECK_THROWS_AS(optimal_forest_goal_count({&space, {gw.cell(10, 10)}, {}, {}, 12}),
                    std::runtime_error);
    CHECK_THROWS_AS(optimal_forest_goal_count({nullptr, {0}, {}, {}, 1}), std::invalid_argument);
}

TEST_CASE("an engine steered by the forest oracle only expands approved nodes") {
    // The oracle snapshots open/closed/collected each round; the selected node
    // must always be one of the nodes it blessed.
    class OracularScorer : public NodeScorer {
    public:
        std::set<StateId> members;
        void begin_round(std::span<const NodeIdx> open, ScoreContext& ctx) override {
            ForestInstance inst;
            inst.space = &ctx.space;
            for (NodeIdx n : open) inst.open.push_back(ctx.graph.node(n).state);
            for (NodeIdx n : ctx.graph.alive_nodes())
                if (!ctx.graph.node(n).in_open) inst.closed.push_back(ctx.graph.node(n).state);
            for (const auto& rec : ctx.graph.collected()) inst.collected.insert(rec.state);
            inst.r = std::min<std::uint64_t>(3, ctx.graph.meter().remaining());
            members.clear();
            if (inst.r > 0)
                for (StateId s : opt_membership(inst)) members.insert(s);
            else
                for (StateId s : inst.open) members.insert(s);
        }
        Score score(NodeIdx n, ScoreContext& ctx) override {
            return members.count(ctx.graph.node(n).state) ? 0.0 : 1.0;
        }
    };

    std::mt19937_64 rng(3);
    auto eg = testref::random_graph(rng, 14, 2, 3, 0.3);
    FileGraphSpace space(std::move(eg));
    OracularScorer oracle;
    BestFirstEngine* eng = nullptr;
    EngineHooks hooks;
    hooks.on_expanded = [&](NodeIdx n) {
        CHECK(oracle.members.count(eng->graph().node(n).state) == 1);
    };
    BestFirstEngine engine({&space, {0}, 10}, oracle, {}, hooks);
    eng = &engine;
    SearchOutcome out = engine.run();
    CHECK(out.generated <= 10);
}

TEST_CASE("full sweeps agree with the independent board counts") {
    for (int n : {1, 4, 5}) {
        NQueensSpace space(n);
        GoalSweep sweep = exhaustive_goals(space, {space.root()}, true);
        testref::TreeCount ref = testref::count_queens(n);
        CHECK(sweep.count == ref.goals);
        CHECK(sweep.states_visited == ref.states);
        REQUIRE(sweep.encoded.size() == ref.goals);
        for (const auto& text : sweep.encoded) {
            std::istringstream is(text);
            std::vector<int> cols;
            int c;
            while (is >> c) cols.push_back(c);
            CHECK(testref::is_legal_queen_board(n, cols));
        }
    }
}

TEST_CASE("graph sweeps visit every cell once") {
    GridWorld gw;
    gw.width = 3;
    gw.height = 3;
    gw.wall.assign(9, 0);
    gw.goals = {gw.cell(1, 1)};
    GridSpace space(gw);

    GoalSweep sweep = exhaustive_goals(space, {gw.cell(0, 0)});
    CHECK(sweep.count == 1);
    CHECK(sweep.states_visited == 9);
    CHECK(sweep.states == std::vector<StateId>{gw.cell(1, 1)});
}

TEST_CASE("exact path costs match hand geometry") {
    GridWorld gw;
    gw.width = 3;
    gw.height = 3;
    gw.wall.assign(9, 0);
    // Wall off the far corner completely.
    gw.wall[gw.cell(2, 1)] = 1;
    gw.wall[gw.cell(1, 2)] = 1;
    GridSpace space(gw);

    auto dist = exact_shortest_paths(space, {gw.cell(0, 0)});
    CHECK(dist.at(gw.cell(0, 0)) == doctest::Approx(0.0));
    CHECK(dist.at(gw.cell(1, 1)) == doctest::Approx(2.0));
    CHECK(dist.at(gw.cell(2, 0)) == doctest::Approx(2.0));
    CHECK(dist.count(gw.cell(2, 2)) == 0); // unreachable
    CHECK(dist.count(gw.cell(2, 1)) == 0); // a wall is not a state
}

TEST_CASE("path costs obey the triangle rule on random graphs") {
    std::mt19937_64 rng(9);
    auto eg = testref::random_graph(rng, 50, 3, 4, 0.2);
    FileGraphSpace space(eg);
    auto dist = exact_shortest_paths(space, {0});

    // Every edge is relaxed: d(v) <= d(u) + 1.
    for (std::uint32_t u = 0; u < eg.size(); ++u) {
        auto du = dist.find(u);
        if (du == dist.end()) continue;
        for (std::uint32_t v : eg.succs[u]) {
            REQUIRE(dist.count(v) == 1);
            CHECK(dist.at(v) <= du->second + 1.0 + 1e-9);
        }
    }
}

#include "mgs/engine_common.hpp"

#include "mgs/clustering.hpp"

namespace mgs {
namespace detail {

std::uint64_t planning_budget(const SearchGraph& g, const EngineParams& params) {
    if (params.budget_mode == BudgetMode::kContractResources) {
        std::uint64_t rem = g.meter().remaining();
        return rem > 0 ? rem : 1;
    }
    std::uint64_t assumed = params.assumed_budget ? params.assumed_budget : g.meter().limit;
    return assumed > 0 ? assumed : 1;
}

void collect_goal(SearchGraph& g, StateSpace& space, NodeIdx n, const EngineParams& params,
                  const EngineHooks& hooks) {
    std::vector<std::string> path;
    if (params.record_paths) {
        for (StateId s : g.path_states(n)) path.push_back(space.encode(s));
    }
    g.record_collection(n, space.encode(g.node(n).state), std::move(path));
    if (hooks.on_goal_collected) hooks.on_goal_collected(g.node(n).state, n);
}

ExpandResult expand_node(SearchGraph& g, StateSpace& space, NodeIdx n,
                         const EngineParams& params, const EngineHooks& hooks,
                         bool collect_on_generation) {
    ExpandResult res;
    g.node(n).expanded = true;
    StateId state = g.node(n).state;
    std::vector<StateId> succ = space.successors(state);
    for (StateId s : succ) {
        if (g.find(s) == kNoNode) {
            if (!g.can_generate()) {
                res.truncated = true;
                break;
            }
            bool goal = space.is_goal(s);
            auto r = g.add_child(n, s, goal, space.edge_cost(state, s));
            res.fresh.push_back(r.idx);
            if (goal && collect_on_generation) {
                collect_goal(g, space, r.idx, params, hooks);
                res.goals_collected.push_back(r.idx);
            }
        } else {
            g.add_child(n, s, false /*ignored for known states*/, space.edge_cost(state, s));
        }
    }

    if (params.cluster_siblings && res.fresh.size() >= 2 && space.has_features()) {
        std::vector<std::vector<double>> feats;
        feats.reserve(res.fresh.size());
        for (NodeIdx c : res.fresh) feats.push_back(space.features(g.node(c).state));
        auto groups = cluster_siblings(feats, params.cluster_tau);
        for (const auto& grp : groups) {
            if (grp.size() < 2) continue;
            std::vector<NodeIdx> members;
            members.reserve(grp.size());
            for (std::size_t gi : grp) members.push_back(res.fresh[gi]);
            g.splice_cluster(n, members, feature_centroid(feats, grp));
        }
    }

    if (hooks.on_expanded) hooks.on_expanded(n);
    return res;
}

} // namespace detail
} // namespace mgs

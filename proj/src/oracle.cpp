#include "mgs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace mgs {

namespace {

struct Universe {
    std::vector<StateId> states;                 // bit index -> state
    std::vector<std::uint64_t> succ_mask;        // per bit: successor bits
    std::uint64_t root_mask = 0;                 // new children of the open set
    std::uint64_t goal_mask = 0;                 // countable goals
    std::vector<std::uint64_t> open_child_mask;  // per open node
};

constexpr std::size_t kMaxMasks = 1u << 22; // enumeration safety valve

Universe build_universe(const ForestInstance& inst) {
    if (inst.space == nullptr) throw std::invalid_argument("forest oracle: null space");
    if (inst.r > 12)
        throw std::runtime_error("forest oracle: instance too large (r > 12)");

    std::unordered_set<StateId> blocked(inst.open.begin(), inst.open.end());
    blocked.insert(inst.closed.begin(), inst.closed.end());

    Universe u;
    std::unordered_map<StateId, int> bit_of;
    auto admit = [&](StateId s) {
        if (blocked.count(s) || bit_of.count(s)) return;
        if (u.states.size() >= 63)
            throw std::runtime_error("forest oracle: instance too large (> 63 future states)");
        bit_of.emplace(s, static_cast<int>(u.states.size()));
        u.states.push_back(s);
    };

    // New states within r growth steps of the open set.
    std::vector<StateId> layer = inst.open;
    std::size_t discovered = 0;
    for (std::uint64_t depth = 0; depth < inst.r && !layer.empty(); ++depth) {
        for (StateId s : layer)
            for (StateId t : inst.space->successors(s)) admit(t);
        layer.assign(u.states.begin() + static_cast<std::ptrdiff_t>(discovered), u.states.end());
        discovered = u.states.size();
    }

    u.succ_mask.assign(u.states.size(), 0);
    for (std::size_t b = 0; b < u.states.size(); ++b)
        for (StateId t : inst.space->successors(u.states[b])) {
            auto it = bit_of.find(t);
            if (it != bit_of.end()) u.succ_mask[b] |= std::uint64_t{1} << it->second;
        }

    u.open_child_mask.assign(inst.open.size(), 0);
    for (std::size_t i = 0; i < inst.open.size(); ++i) {
        for (StateId t : inst.space->successors(inst.open[i])) {
            auto it = bit_of.find(t);
            if (it != bit_of.end()) u.open_child_mask[i] |= std::uint64_t{1} << it->second;
        }
        u.root_mask |= u.open_child_mask[i];
    }

    for (std::size_t b = 0; b < u.states.size(); ++b)
        if (inst.space->is_goal(u.states[b]) && !inst.collected.count(u.states[b]))
            u.goal_mask |= std::uint64_t{1} << b;
    return u;
}

// Every forest as a bitmask: grow set by set, deduplicating, keeping masks
// that reached size r or ran out of candidates.
std::vector<std::uint64_t> enumerate_forests(const ForestInstance& inst, const Universe& u) {
    std::vector<std::uint64_t> finals;
    std::unordered_set<std::uint64_t> level{0};
    std::size_t processed = 0;

    for (std::uint64_t size = 0; size < inst.r && !level.empty(); ++size) {
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t mask : level) {
            if (++processed > kMaxMasks)
                throw std::runtime_error("forest oracle: instance too large (enumeration blow-up)");
            std::uint64_t cand = u.root_mask;
            std::uint64_t m = mask;
            while (m) {
                int b = std::countr_zero(m);
                m &= m - 1;
                cand |= u.succ_mask[static_cast<std::size_t>(b)];
            }
            cand &= ~mask;
            if (cand == 0) {
                finals.push_back(mask); // stuck: the reachable remainder is spent
                continue;
            }
            while (cand) {
                int b = std::countr_zero(cand);
                cand &= cand - 1;
                next.insert(mask | (std::uint64_t{1} << b));
            }
        }
        level = std::move(next);
    }
    finals.insert(finals.end(), level.begin(), level.end());
    return finals;
}

std::uint64_t best_goals(const std::vector<std::uint64_t>& finals, std::uint64_t goal_mask) {
    std::uint64_t best = 0;
    for (std::uint64_t mask : finals)
        best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::popcount(mask & goal_mask)));
    return best;
}

} // namespace

std::uint64_t optimal_forest_goal_count(const ForestInstance& inst) {
    Universe u = build_universe(inst);
    return best_goals(enumerate_forests(inst, u), u.goal_mask);
}

std::vector<StateId> opt_membership(const ForestInstance& inst) {
    Universe u = build_universe(inst);
    std::vector<std::uint64_t> finals = enumerate_forests(inst, u);
    std::uint64_t best = best_goals(finals, u.goal_mask);
    if (best == 0) return inst.open; // nothing gains anything: all ties

    std::vector<StateId> members;
    for (std::size_t i = 0; i < inst.open.size(); ++i) {
        for (std::uint64_t mask : finals) {
            if (std::popcount(mask & u.goal_mask) != static_cast<int>(best)) continue;
            if (mask & u.open_child_mask[i]) {
                members.push_back(inst.open[i]);
                break;
            }
        }
    }
    return members;
}

GoalSweep exhaustive_goals(StateSpace& space, const std::vector<StateId>& roots,
                           bool keep_encoded) {
    GoalSweep out;

    if (space.is_tree()) {
        // Iterative post-order so finished subtrees can be released.
        struct Frame {
            StateId s;
            std::vector<StateId> kids;
            std::size_t next = 0;
            bool is_root;
        };
        std::vector<Frame> stack;
        for (StateId root : roots) {
            stack.push_back({root, space.successors(root), 0, true});
            ++out.states_visited;
            if (space.is_goal(root)) {
                ++out.count;
                if (keep_encoded) out.encoded.push_back(space.encode(root));
            }
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.next < f.kids.size()) {
                    StateId child = f.kids[f.next++];
                    ++out.states_visited;
                    if (space.is_goal(child)) {
                        ++out.count;
                        if (keep_encoded) out.encoded.push_back(space.encode(child));
                    }
                    stack.push_back({child, space.successors(child), 0, false});
                } else {
                    if (!f.is_root) space.release(f.s);
                    stack.pop_back();
                }
            }
        }
        return out;
    }

    std::unordered_set<StateId> seen(roots.begin(), roots.end());
    std::vector<StateId> todo(roots.begin(), roots.end());
    while (!todo.empty()) {
        StateId s = todo.back();
        todo.pop_back();
        ++out.states_visited;
        if (space.is_goal(s)) {
            ++out.count;
            out.states.push_back(s);
            if (keep_encoded) out.encoded.push_back(space.encode(s));
        }
        for (StateId t : space.successors(s))
            if (seen.insert(t).second) todo.push_back(t);
    }
    std::sort(out.states.begin(), out.states.end());
    return out;
}

std::unordered_map<StateId, double> exact_shortest_paths(StateSpace& space,
                                                         const std::vector<StateId>& sources) {
    std::unordered_map<StateId, double> dist;
    using Entry = std::pair<double, StateId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (StateId s : sources) {
        dist[s] = 0.0;
        heap.push({0.0, s});
    }
    while (!heap.empty()) {
        auto [d, s] = heap.top();
        heap.pop();
        auto it = dist.find(s);
        if (it == dist.end() || d > it->second) continue;
        for (StateId t : space.successors(s)) {
            double c = space.edge_cost(s, t);
            if (c < 0.0) throw std::invalid_argument("shortest paths: negative edge cost");
            double nd = d + c;
            auto [jt, fresh] = dist.emplace(t, nd);
            if (!fresh && jt->second <= nd) continue;
            jt->second = nd;
            heap.push({nd, t});
        }
    }
    return dist;
}

} // namespace mgs

#ifndef TESTS_SUPPORT_COUNTER_REF_HPP
#define TESTS_SUPPORT_COUNTER_REF_HPP

// Independent recount of the descendant counters: plain BFS over the child
// edges, no incremental tricks, so it can cross-check the engine's online
// maintenance. Intentionally shares no code with SearchGraph internals.

#include <array>
#include <vector>

#include "mgs/search_graph.hpp"

namespace testref {

struct CounterRecount {
    std::array<std::uint32_t, mgs::kMaxCounterDepth> cn{};
    std::array<std::uint32_t, mgs::kMaxCounterDepth> cg{};
};

// For every alive node u: BFS down the child edges, take each reachable alive
// node v at its shortest hop distance l, and credit it to u's level-l..D
// counters (goals also to cg). Virtual cluster nodes lengthen paths like any
// other hop but are themselves never credited.
inline std::vector<CounterRecount> recount_counters(const mgs::SearchGraph& g) {
    const int D = g.counter_depth();
    std::size_t pool = g.pool_size();
    std::vector<CounterRecount> out(pool);
    std::vector<int> dist(pool);
    std::vector<mgs::NodeIdx> queue;
    for (mgs::NodeIdx u = 0; u < pool; ++u) {
        if (!g.node(u).alive) continue;
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, u);
        dist[u] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            mgs::NodeIdx v = queue[head];
            if (dist[v] >= D) continue;
            for (mgs::NodeIdx c : g.node(v).children) {
                if (dist[c] >= 0) continue;
                dist[c] = dist[v] + 1;
                queue.push_back(c);
            }
        }
        for (mgs::NodeIdx v = 0; v < pool; ++v) {
            if (v == u || dist[v] <= 0) continue;
            const mgs::Node& node = g.node(v);
            if (!node.alive || node.virt) continue;
            for (int d = dist[v]; d <= D; ++d) {
                out[u].cn[static_cast<std::size_t>(d) - 1] += 1;
                if (node.goal) out[u].cg[static_cast<std::size_t>(d) - 1] += 1;
            }
        }
    }
    return out;
}

// True when every alive node's stored counters equal the recount.
inline bool counters_match(const mgs::SearchGraph& g, std::string* why = nullptr) {
    auto ref = recount_counters(g);
    const int D = g.counter_depth();
    for (mgs::NodeIdx u = 0; u < g.pool_size(); ++u) {
        const mgs::Node& n = g.node(u);
        if (!n.alive) continue;
        for (int d = 1; d <= D; ++d) {
            if (n.cn[d - 1] != ref[u].cn[d - 1] || n.cg[d - 1] != ref[u].cg[d - 1]) {
                if (why)
                    *why = "node " + std::to_string(u) + " depth " + std::to_string(d) +
                           ": stored N=" + std::to_string(n.cn[d - 1]) +
                           " G=" + std::to_string(n.cg[d - 1]) +
                           ", recount N=" + std::to_string(ref[u].cn[d - 1]) +
                           " G=" + std::to_string(ref[u].cg[d - 1]);
                return false;
            }
        }
    }
    return true;
}

} // namespace testref

#endif

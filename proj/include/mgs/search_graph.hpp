#ifndef MGS_SEARCH_GRAPH_HPP
#define MGS_SEARCH_GRAPH_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "mgs/outcome.hpp"
#include "mgs/types.hpp"

namespace mgs {

/** Generation budget. One unit per novel state materialized; duplicates are free. */
struct ResourceMeter {
    std::uint64_t generated = 0;
    std::uint64_t limit = 0;

    bool exhausted() const { return generated >= limit; }
    std::uint64_t remaining() const { return limit > generated ? limit - generated : 0; }
};

struct Node {
    StateId state = 0;
    std::uint64_t seq = 0;       // insertion order, FIFO tie-break key
    double g = 0.0;              // cheapest known path cost from a root
    std::uint32_t depth = 0;     // shortest known edge count from a root
    NodeIdx best_parent = kNoNode;

    bool goal = false;           // goal predicate held at materialization
    bool expanded = false;
    bool in_open = false;
    bool virt = false;           // virtual cluster node (not a state)
    bool alive = true;

    std::vector<NodeIdx> parents;  // bookkeeping graph, discovery order
    std::vector<NodeIdx> children;

    // Descendant counters: cn[i] (cg[i]) = visited (goal) nodes strictly below
    // this node within bookkeeping distance i+1, shortest path only.
    std::array<std::uint32_t, kMaxCounterDepth> cn{};
    std::array<std::uint32_t, kMaxCounterDepth> cg{};
};

/**
 * Shared bookkeeping for every engine: the explored graph, the generation
 * meter, descendant counters and the goal-collection record.
 *
 * Counters are maintained incrementally: a fresh node bumps every ancestor
 * within distance D at its shortest bookkeeping distance; an edge that shortens
 * existing distances shifts the affected contributions down (increments only).
 * Virtual cluster nodes participate as ordinary hops but are never counted.
 */
class SearchGraph {
public:
    SearchGraph(int counter_depth, std::uint32_t support_threshold, std::uint64_t resource_limit);

    int counter_depth() const { return depth_bound_; }
    std::uint32_t support_threshold() const { return sigma_; }

    ResourceMeter& meter() { return meter_; }
    const ResourceMeter& meter() const { return meter_; }

    // --- construction -------------------------------------------------------

    NodeIdx add_root(StateId s, bool goal);

    struct AddResult {
        NodeIdx idx = kNoNode;
        bool fresh = false; // consumed one budget unit
    };

    // Materialize (or re-reach) a successor of `parent`. Budget must be
    // available when the state is novel; callers check can_generate() first.
    AddResult add_child(NodeIdx parent, StateId s, bool goal, double edge_cost);

    bool can_generate() const { return !meter_.exhausted(); }

    // Splice a virtual node between `parent` and `members` (fresh children of
    // `parent`, each with that single parent). Returns the virtual node.
    NodeIdx splice_cluster(NodeIdx parent, const std::vector<NodeIdx>& members,
                           std::vector<double> centroid);

    // Reclaim a childless node (backtracking engines). Counters of ancestors
    // keep the visit history; only storage goes away.
    void remove_leaf(NodeIdx n);

    // --- queries ------------------------------------------------------------

    std::size_t pool_size() const { return nodes_.size(); }
    Node& node(NodeIdx i) { return nodes_[i]; }
    const Node& node(NodeIdx i) const { return nodes_[i]; }

    NodeIdx find(StateId s) const {
        auto it = index_.find(s);
        return it == index_.end() ? kNoNode : it->second;
    }

    bool supported(NodeIdx n, int d) const {
        return nodes_[n].cn[static_cast<std::size_t>(d) - 1] >= sigma_;
    }

    // All alive non-virtual nodes, in insertion order.
    std::vector<NodeIdx> alive_nodes() const;

    const std::vector<double>& centroid(NodeIdx virt) const;

    // --- goal collection ----------------------------------------------------

    void record_collection(NodeIdx n, std::string encoded, std::vector<std::string> path = {});
    std::uint64_t collected_count() const { return collected_.size(); }
    const std::vector<DiscoveryRecord>& collected() const { return collected_; }

    // Root..n states following best-known parents, virtual hops skipped.
    std::vector<StateId> path_states(NodeIdx n) const;

    SearchOutcome finish(Termination t, double wall_seconds) const;

    // Fired when an edge improves the g of an existing node (A*eps re-opening).
    std::function<void(NodeIdx)> on_g_improved;
    // Fired after a node's counters changed at levels [low..D]; used to re-tag
    // induction examples.
    std::function<void(NodeIdx, int)> on_counters_bumped;

private:
    NodeIdx new_slot();
    void bump_ancestors(NodeIdx fresh, bool goal);
    void repair_shortened(NodeIdx x, NodeIdx new_parent);

    // Backward BFS over parent edges up to maxd; visit(node, dist) for dist>=1.
    // The single edge child->skip_parent is ignored when exclude is true.
    template <typename F>
    void backward_bfs(NodeIdx start, int maxd, bool exclude, NodeIdx skip_child,
                      NodeIdx skip_parent, F&& visit) const;
    template <typename F>
    void forward_bfs(NodeIdx start, int maxd, F&& visit) const;

    int depth_bound_;
    std::uint32_t sigma_;
    ResourceMeter meter_;
    std::uint64_t next_seq_ = 0;

    std::vector<Node> nodes_;
    std::vector<NodeIdx> free_slots_;
    std::unordered_map<StateId, NodeIdx> index_;
    std::unordered_map<NodeIdx, std::vector<double>> centroids_;

    std::vector<DiscoveryRecord> collected_;
    std::vector<TraceCheckpoint> trace_;

    // BFS scratch (stamped to avoid clearing)
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::vector<std::uint8_t> dist_;
    mutable std::uint32_t cur_stamp_ = 0;
    mutable std::vector<NodeIdx> queue_;
    void ensure_scratch() const;
};

} // namespace mgs

#endif

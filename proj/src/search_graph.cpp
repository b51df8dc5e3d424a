#include "mgs/search_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mgs {

SearchGraph::SearchGraph(int counter_depth, std::uint32_t support_threshold,
                         std::uint64_t resource_limit)
    : depth_bound_(counter_depth), sigma_(support_threshold) {
    if (counter_depth < 1 || counter_depth > kMaxCounterDepth)
        throw std::invalid_argument("counter depth out of range");
    meter_.limit = resource_limit;
}

void SearchGraph::ensure_scratch() const {
    if (stamp_.size() < nodes_.size()) {
        stamp_.resize(nodes_.size(), 0);
        dist_.resize(nodes_.size(), 0);
    }
}

NodeIdx SearchGraph::new_slot() {
    if (!free_slots_.empty()) {
        NodeIdx i = free_slots_.back();
        free_slots_.pop_back();
        nodes_[i] = Node{};
        return i;
    }
    nodes_.emplace_back();
    return static_cast<NodeIdx>(nodes_.size() - 1);
}

NodeIdx SearchGraph::add_root(StateId s, bool goal) {
    if (index_.count(s)) throw std::invalid_argument("duplicate root state");
    NodeIdx i = new_slot();
    Node& n = nodes_[i];
    n.state = s;
    n.seq = next_seq_++;
    n.goal = goal;
    n.depth = 0;
    n.g = 0.0;
    index_.emplace(s, i);
    return i;
}

template <typename F>
void SearchGraph::backward_bfs(NodeIdx start, int maxd, bool exclude, NodeIdx skip_child,
                               NodeIdx skip_parent, F&& visit) const {
    ensure_scratch();
    ++cur_stamp_;
    queue_.clear();
    queue_.push_back(start);
    stamp_[start] = cur_stamp_;
    dist_[start] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        NodeIdx u = queue_[head];
        int du = dist_[u];
        if (du >= maxd) continue;
        for (NodeIdx p : nodes_[u].parents) {
            if (exclude && u == skip_child && p == skip_parent) continue;
            if (stamp_[p] == cur_stamp_) continue;
            stamp_[p] = cur_stamp_;
            dist_[p] = static_cast<std::uint8_t>(du + 1);
            queue_.push_back(p);
            visit(p, du + 1);
        }
    }
}

template <typename F>
void SearchGraph::forward_bfs(NodeIdx start, int maxd, F&& visit) const {
    ensure_scratch();
    ++cur_stamp_;
    queue_.clear();
    queue_.push_back(start);
    stamp_[start] = cur_stamp_;
    dist_[start] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        NodeIdx u = queue_[head];
        int du = dist_[u];
        if (du >= maxd) continue;
        for (NodeIdx c : nodes_[u].children) {
            if (stamp_[c] == cur_stamp_) continue;
            stamp_[c] = cur_stamp_;
            dist_[c] = static_cast<std::uint8_t>(du + 1);
            queue_.push_back(c);
            visit(c, du + 1);
        }
    }
}

void SearchGraph::bump_ancestors(NodeIdx fresh, bool goal) {
    const int D = depth_bound_;
    backward_bfs(fresh, D, false, kNoNode, kNoNode, [&](NodeIdx q, int l) {
        Node& a = nodes_[q];
        for (int j = l; j <= D; ++j) {
            a.cn[j - 1] += 1;
            if (goal) a.cg[j - 1] += 1;
        }
        if (on_counters_bumped && !a.virt) on_counters_bumped(q, l);
    });
}

SearchGraph::AddResult SearchGraph::add_child(NodeIdx parent, StateId s, bool goal,
                                              double edge_cost) {
    Node& p = nodes_[parent];
    auto it = index_.find(s);
    if (it != index_.end()) {
        NodeIdx x = it->second;
        if (x == parent) return {x, false}; // self loop, no information
        Node& c = nodes_[x];
        bool known = std::find(c.parents.begin(), c.parents.end(), parent) != c.parents.end();
        if (!known) {
            c.parents.push_back(parent);
            p.children.push_back(x);
            if (p.depth + 1 < c.depth) c.depth = p.depth + 1;
            repair_shortened(x, parent);
        }
        double via = p.g + edge_cost;
        if (via + 1e-12 < c.g) {
            c.g = via;
            c.best_parent = parent;
            if (on_g_improved) on_g_improved(x);
        }
        return {x, false};
    }

    if (meter_.exhausted()) throw std::logic_error("add_child without budget");
    meter_.generated += 1;

    NodeIdx i = new_slot();
    Node& n = nodes_[i];
    n.state = s;
    n.seq = next_seq_++;
    n.goal = goal;
    n.depth = nodes_[parent].depth + 1;
    n.g = nodes_[parent].g + edge_cost;
    n.best_parent = parent;
    n.parents.push_back(parent);
    nodes_[parent].children.push_back(i);
    index_.emplace(s, i);
    bump_ancestors(i, goal);
    return {i, true};
}

// A new edge parent->x between existing nodes can shorten bookkeeping
// distances between ancestors of parent and descendants of x. Compare old and
// new backward distances (old = new graph minus that one edge) and shift the
// counter contribution of each affected pair down to its new level.
void SearchGraph::repair_shortened(NodeIdx x, NodeIdx new_parent) {
    const int D = depth_bound_;

    // Cheap exactness filter: if no ancestor got closer to x itself, the
    // triangle inequality rules out changes for deeper descendants too.
    std::vector<std::pair<NodeIdx, int>> old_from_x;
    backward_bfs(x, D, true, x, new_parent,
                 [&](NodeIdx q, int l) { old_from_x.emplace_back(q, l); });

    auto shift_levels = [&](NodeIdx q, int lnew, int lold, bool goal) {
        Node& a = nodes_[q];
        int hi = std::min(lold - 1, D);
        for (int j = lnew; j <= hi; ++j) {
            a.cn[j - 1] += 1;
            if (goal) a.cg[j - 1] += 1;
        }
        if (on_counters_bumped && !a.virt && lnew <= D) on_counters_bumped(q, lnew);
    };

    auto repair_for = [&](NodeIdx y, const std::vector<std::pair<NodeIdx, int>>& old_map) {
        // old_map entries are distances without the new edge; absent => > D.
        std::unordered_map<NodeIdx, int> old_dist;
        old_dist.reserve(old_map.size() * 2);
        for (auto& [q, l] : old_map) old_dist.emplace(q, l);
        bool goal = nodes_[y].goal && !nodes_[y].virt;
        bool any = false;
        backward_bfs(y, D, false, kNoNode, kNoNode, [&](NodeIdx q, int lnew) {
            auto it = old_dist.find(q);
            int lold = it == old_dist.end() ? D + 1 : it->second;
            if (lnew < lold) {
                shift_levels(q, lnew, lold, goal);
                any = true;
            }
        });
        return any;
    };

    if (!repair_for(x, old_from_x)) return;

    // Distances from x changed, so descendants within D-1 may be affected.
    // Virtual cluster nodes still act as hops for their members' distances,
    // but carry no counter contribution of their own to shift.
    std::vector<NodeIdx> descendants;
    forward_bfs(x, D - 1, [&](NodeIdx y, int) { descendants.push_back(y); });
    for (NodeIdx y : descendants) {
        if (nodes_[y].virt) continue;
        std::vector<std::pair<NodeIdx, int>> old_map;
        backward_bfs(y, D, true, x, new_parent,
                     [&](NodeIdx q, int l) { old_map.emplace_back(q, l); });
        repair_for(y, old_map);
    }
}

NodeIdx SearchGraph::splice_cluster(NodeIdx parent, const std::vector<NodeIdx>& members,
                                    std::vector<double> centroid) {
    if (members.size() < 2) throw std::invalid_argument("cluster needs >= 2 members");
    const int D = depth_bound_;

    NodeIdx vi = new_slot();
    {
        Node& v = nodes_[vi];
        v.state = 0;
        v.virt = true;
        v.seq = next_seq_++;
        v.depth = nodes_[parent].depth + 1;
        v.g = nodes_[parent].g;
        v.best_parent = parent;
        v.parents.push_back(parent);
        v.children = members;
        std::uint32_t ng = 0;
        for (NodeIdx m : members)
            if (nodes_[m].goal) ++ng;
        for (int j = 0; j < D; ++j) {
            v.cn[j] = static_cast<std::uint32_t>(members.size());
            v.cg[j] = ng;
        }
    }
    centroids_[vi] = std::move(centroid);

    // Rewire: members hang off the virtual node; the virtual node takes the
    // position of the first member in the parent's child list.
    Node& p = nodes_[parent];
    bool placed = false;
    std::vector<NodeIdx> kept;
    kept.reserve(p.children.size());
    for (NodeIdx c : p.children) {
        if (std::find(members.begin(), members.end(), c) != members.end()) {
            if (!placed) {
                kept.push_back(vi);
                placed = true;
            }
            continue;
        }
        kept.push_back(c);
    }
    p.children = std::move(kept);
    for (NodeIdx m : members) {
        Node& c = nodes_[m];
        assert(c.parents.size() == 1 && c.parents[0] == parent && c.children.empty());
        c.parents.assign(1, vi);
        c.depth = nodes_[vi].depth + 1;
    }

    // Members moved one level further from every ancestor of the parent:
    // their level-(b+1) contribution is the only one that goes away.
    std::uint32_t cnt = static_cast<std::uint32_t>(members.size());
    std::uint32_t ng = nodes_[vi].cg[0];
    auto drop = [&](NodeIdx q, int level) {
        if (level > D) return;
        Node& a = nodes_[q];
        a.cn[level - 1] -= cnt;
        a.cg[level - 1] -= ng;
    };
    drop(parent, 1);
    backward_bfs(parent, D - 1, false, kNoNode, kNoNode,
                 [&](NodeIdx q, int b) { drop(q, b + 1); });
    return vi;
}

void SearchGraph::remove_leaf(NodeIdx n) {
    Node& c = nodes_[n];
    assert(c.alive && c.children.empty());
    for (NodeIdx pi : c.parents) {
        auto& ch = nodes_[pi].children;
        ch.erase(std::remove(ch.begin(), ch.end(), n), ch.end());
    }
    if (!c.virt) index_.erase(c.state);
    else centroids_.erase(n);
    c.alive = false;
    c.parents.clear();
    free_slots_.push_back(n);
}

std::vector<NodeIdx> SearchGraph::alive_nodes() const {
    std::vector<NodeIdx> out;
    out.reserve(nodes_.size());
    for (NodeIdx i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].alive && !nodes_[i].virt) out.push_back(i);
    std::sort(out.begin(), out.end(), [&](NodeIdx a, NodeIdx b) {
        return nodes_[a].seq < nodes_[b].seq;
    });
    return out;
}

const std::vector<double>& SearchGraph::centroid(NodeIdx virt) const {
    return centroids_.at(virt);
}

void SearchGraph::record_collection(NodeIdx n, std::string encoded,
                                    std::vector<std::string> path) {
    DiscoveryRecord rec;
    rec.state = nodes_[n].state;
    rec.generated_at = meter_.generated;
    rec.encoded = std::move(encoded);
    rec.path = std::move(path);
    collected_.push_back(std::move(rec));
    if (!trace_.empty() && trace_.back().generated == meter_.generated)
        trace_.back().goals = collected_.size();
    else
        trace_.push_back({meter_.generated, collected_.size()});
}

std::vector<StateId> SearchGraph::path_states(NodeIdx n) const {
    std::vector<StateId> rev;
    NodeIdx cur = n;
    while (cur != kNoNode) {
        if (!nodes_[cur].virt) rev.push_back(nodes_[cur].state);
        cur = nodes_[cur].best_parent;
    }
    return {rev.rbegin(), rev.rend()};
}

SearchOutcome SearchGraph::finish(Termination t, double wall_seconds) const {
    SearchOutcome out;
    out.collected = collected_;
    out.generated = meter_.generated;
    out.termination = t;
    out.trace.checkpoints = trace_;
    out.trace.final_generated = meter_.generated;
    out.trace.wall_seconds = wall_seconds;
    return out;
}

} // namespace mgs

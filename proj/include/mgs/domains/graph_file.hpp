#ifndef MGS_DOMAINS_GRAPH_FILE_HPP
#define MGS_DOMAINS_GRAPH_FILE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mgs/state_space.hpp"

namespace mgs {

/**
 * A fully materialized directed graph with optional per-node features and a
 * goal label per node. This is the interchange form: generators can lower any
 * domain into it, and the text format below round-trips it byte-for-byte.
 *
 * Text format, line oriented:
 *   MGSG v1 <n-nodes> <feature-dim>
 *   <id> <goal:0|1> <f1,...,fk> <succ;succ;...>
 * ids are consecutive from 0 and each line must carry its own id. Empty
 * feature vectors (dim 0) and empty successor lists are written as "-".
 */
struct ExplicitGraph {
    std::size_t feature_dim = 0;
    std::vector<std::vector<std::uint32_t>> succs;
    std::vector<std::vector<double>> feats; // empty when feature_dim == 0
    std::vector<std::uint8_t> goal;

    std::size_t size() const { return succs.size(); }

    // Structural checks shared by loaders and generators: parallel array
    // lengths, feature dimensions, successor ids in range.
    void validate() const;

    std::vector<StateId> goal_states() const;
};

ExplicitGraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const ExplicitGraph& g);

/** StateSpace view over an ExplicitGraph; states are node ids. */
class FileGraphSpace : public StateSpace {
public:
    explicit FileGraphSpace(ExplicitGraph g) : g_(std::move(g)) { g_.validate(); }

    std::vector<StateId> successors(StateId s) override {
        std::vector<StateId> out;
        out.reserve(g_.succs[at(s)].size());
        for (std::uint32_t t : g_.succs[at(s)]) out.push_back(t);
        return out;
    }
    bool is_goal(StateId s) override { return g_.goal[at(s)] != 0; }
    bool has_features() const override { return g_.feature_dim > 0; }
    std::vector<double> features(StateId s) override {
        return g_.feature_dim > 0 ? g_.feats[at(s)] : std::vector<double>{};
    }

    const ExplicitGraph& graph() const { return g_; }

private:
    std::size_t at(StateId s) const {
        if (s >= g_.size()) throw std::out_of_range("graph space: state id out of range");
        return static_cast<std::size_t>(s);
    }
    ExplicitGraph g_;
};

} // namespace mgs

#endif

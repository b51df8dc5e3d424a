#include "mgs/domains/msa.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mgs {

namespace {
constexpr std::uint32_t kNoParent = 0xffffffffu;
}

AlignmentSpace::AlignmentSpace(std::vector<std::string> sequences)
    : seqs_(std::move(sequences)), k_(seqs_.size()) {
    if (k_ < 2 || k_ > 3)
        throw std::invalid_argument("alignment: need 2 or 3 sequences");
    for (const std::string& s : seqs_)
        if (s.empty() || s.size() > 8)
            throw std::invalid_argument("alignment: sequence lengths must be in [1, 8]");
}

StateId AlignmentSpace::intern(std::uint32_t parent, unsigned mask,
                               const std::array<std::uint8_t, 3>& pos) {
    std::uint32_t slot;
    if (!free_.empty()) {
        slot = free_.back();
        free_.pop_back();
    } else {
        slot = static_cast<std::uint32_t>(slab_.size());
        slab_.emplace_back();
    }
    ColNode& c = slab_[slot];
    c.pos = pos;
    c.parent = parent;
    c.move = static_cast<std::uint8_t>(mask);
    c.expanded = false;
    c.alive = true;
    c.kids.clear();
    return slot;
}

StateId AlignmentSpace::root() {
    if (!have_root_) {
        root_ = intern(kNoParent, 0, {});
        have_root_ = true;
    }
    return root_;
}

double AlignmentSpace::column_cost(const std::array<std::uint8_t, 3>& parent_pos,
                                   unsigned mask) const {
    double cost = 0.0;
    for (std::size_t i = 0; i < k_; ++i) {
        for (std::size_t j = i + 1; j < k_; ++j) {
            bool ai = mask & (1u << i), aj = mask & (1u << j);
            if (ai && aj)
                cost += seqs_[i][parent_pos[i]] != seqs_[j][parent_pos[j]] ? 1.0 : 0.0;
            else if (ai != aj)
                cost += 1.0;
        }
    }
    return cost;
}

std::vector<StateId> AlignmentSpace::successors(StateId s) {
    ColNode& c = slab_.at(static_cast<std::size_t>(s));
    if (!c.alive) throw std::logic_error("alignment: successors of a released state");
    if (c.expanded) return {c.kids.begin(), c.kids.end()};

    std::array<std::uint8_t, 3> pos = c.pos;
    std::vector<std::uint32_t> kids;
    for (unsigned mask = 1; mask < (1u << k_); ++mask) {
        bool ok = true;
        std::array<std::uint8_t, 3> next = pos;
        for (std::size_t i = 0; i < k_ && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            if (pos[i] >= seqs_[i].size())
                ok = false;
            else
                next[i] = static_cast<std::uint8_t>(pos[i] + 1);
        }
        if (ok)
            kids.push_back(static_cast<std::uint32_t>(intern(static_cast<std::uint32_t>(s), mask, next)));
    }
    ColNode& c2 = slab_[static_cast<std::size_t>(s)]; // intern may reallocate
    c2.expanded = true;
    c2.kids = std::move(kids);
    return {c2.kids.begin(), c2.kids.end()};
}

bool AlignmentSpace::is_goal(StateId s) {
    const ColNode& c = slab_.at(static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < k_; ++i)
        if (c.pos[i] != seqs_[i].size()) return false;
    return true;
}

double AlignmentSpace::edge_cost(StateId from, StateId to) {
    const ColNode& child = slab_.at(static_cast<std::size_t>(to));
    if (child.parent != static_cast<std::uint32_t>(from))
        throw std::logic_error("alignment: edge_cost for a non-edge");
    return column_cost(slab_.at(child.parent).pos, child.move);
}

double AlignmentSpace::admissible_h(StateId s) const {
    const ColNode& c = slab_.at(static_cast<std::size_t>(s));
    double h = 0.0;
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = i + 1; j < k_; ++j) {
            int ri = static_cast<int>(seqs_[i].size()) - c.pos[i];
            int rj = static_cast<int>(seqs_[j].size()) - c.pos[j];
            h += std::abs(ri - rj);
        }
    return h;
}

double AlignmentSpace::path_cost(StateId s) const {
    double cost = 0.0;
    std::uint32_t cur = static_cast<std::uint32_t>(s);
    while (cur != kNoParent) {
        const ColNode& c = slab_.at(cur);
        if (c.parent != kNoParent) cost += column_cost(slab_.at(c.parent).pos, c.move);
        cur = c.parent;
    }
    return cost;
}

std::string AlignmentSpace::encode(StateId s) {
    // Reconstruct the move list root -> s, then print one aligned row per
    // sequence, rows joined by '/'.
    std::vector<std::uint8_t> moves;
    std::uint32_t cur = static_cast<std::uint32_t>(s);
    while (cur != kNoParent) {
        const ColNode& c = slab_.at(cur);
        if (c.parent != kNoParent) moves.push_back(c.move);
        cur = c.parent;
    }
    std::reverse(moves.begin(), moves.end());

    std::string out;
    for (std::size_t i = 0; i < k_; ++i) {
        if (i) out += '/';
        std::size_t p = 0;
        for (std::uint8_t m : moves)
            out += (m & (1u << i)) ? seqs_[i][p++] : '-';
    }
    return out;
}

void AlignmentSpace::release(StateId s) {
    ColNode& c = slab_.at(static_cast<std::size_t>(s));
    if (!c.alive) return;
    // Keep the parent's successor memo honest: a released child forces the
    // parent to re-intern on its next expansion.
    if (c.parent != kNoParent) {
        ColNode& par = slab_[c.parent];
        if (par.alive && par.expanded) {
            par.expanded = false;
            par.kids.clear();
        }
    }
    c.alive = false;
    c.kids.clear();
    c.kids.shrink_to_fit();
    free_.push_back(static_cast<std::uint32_t>(s));
}

AlignmentProblem alignment_space(std::vector<std::string> sequences, double epsilon,
                                 std::uint64_t resource_limit) {
    if (epsilon < 0.0) throw std::invalid_argument("alignment: epsilon must be >= 0");
    AlignmentProblem out;
    out.space = std::make_unique<AlignmentSpace>(std::move(sequences));
    out.epsilon = epsilon;
    out.problem.space = out.space.get();
    out.problem.initial_states = {out.space->root()};
    out.problem.resource_limit = resource_limit;
    return out;
}

} // namespace mgs

#ifndef MGS_DOMAINS_MSA_HPP
#define MGS_DOMAINS_MSA_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mgs/state_space.hpp"

namespace mgs {

/**
 * Alignment of 2-3 short sequences, built column by column. A state is the
 * ordered column history (so distinct complete alignments are distinct goal
 * states); a move is the nonempty subset of sequences consuming a character
 * in the next column, everything else taking a gap.
 *
 * Costs are sum-of-pairs with unit charges: 1 per mismatching consumed pair,
 * 1 per consumed-vs-gap pair, 0 for gap-gap and matches. States intern into
 * a slab like the other path spaces; successors() memoizes per state.
 */
class AlignmentSpace : public StateSpace {
public:
    explicit AlignmentSpace(std::vector<std::string> sequences);

    StateId root();

    std::vector<StateId> successors(StateId s) override;
    bool is_goal(StateId s) override;
    double edge_cost(StateId from, StateId to) override;
    bool is_tree() const override { return true; }
    std::string encode(StateId s) override;
    void release(StateId s) override;

    // Sum over pairs of |remaining_i - remaining_j|: every length mismatch
    // forces at least that many gap charges, so this never overestimates.
    double admissible_h(StateId s) const;

    double path_cost(StateId s) const; // root -> s, summed column costs

    const std::vector<std::string>& sequences() const { return seqs_; }

private:
    struct ColNode {
        std::array<std::uint8_t, 3> pos{};
        std::uint32_t parent = 0;
        std::uint8_t move = 0; // advancing-subset mask producing this column
        bool expanded = false;
        bool alive = false;
        std::vector<std::uint32_t> kids;
    };

    double column_cost(const std::array<std::uint8_t, 3>& parent_pos, unsigned mask) const;
    StateId intern(std::uint32_t parent, unsigned mask, const std::array<std::uint8_t, 3>& pos);

    std::vector<std::string> seqs_;
    std::size_t k_;
    std::vector<ColNode> slab_;
    std::vector<std::uint32_t> free_;
    StateId root_ = 0;
    bool have_root_ = false;
};

/** Owns the space; `problem` points into it. */
struct AlignmentProblem {
    std::unique_ptr<AlignmentSpace> space;
    SearchProblem problem;
    double epsilon = 0.0;
};

AlignmentProblem alignment_space(std::vector<std::string> sequences, double epsilon,
                                 std::uint64_t resource_limit = 2'000'000);

} // namespace mgs

#endif

#ifndef MGS_DOMAINS_KNIGHT_HPP
#define MGS_DOMAINS_KNIGHT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "mgs/state_space.hpp"

namespace mgs {

/**
 * Open knight tours on an n x n board (3 <= n <= 8). A state is a partial
 * path: the ordered sequence of visited squares. Two different move orders
 * over the same squares are different states, so every complete tour is its
 * own goal state and goal counting counts tours.
 *
 * Path states live in an interned slab (StateId = slot index); release()
 * frees a slot, which is how backtracking keeps only the spine in memory.
 * successors() memoizes per state so repeated calls return identical ids.
 */
class KnightTourSpace : public StateSpace {
public:
    explicit KnightTourSpace(int n);
    KnightTourSpace(int n, std::array<int, 8> move_order);

    // One single-square path per board square, square order.
    std::vector<StateId> roots();

    std::vector<StateId> successors(StateId s) override;
    bool is_goal(StateId s) override;
    bool is_tree() const override { return true; }
    std::string encode(StateId s) override;
    void release(StateId s) override;

    int board() const { return n_; }
    std::size_t live_states() const { return slab_.size() - free_.size(); }

    // The path as square indices (y * n + x), start first.
    std::vector<int> path_squares(StateId s) const;

private:
    struct PathNode {
        std::uint64_t visited = 0; // board bitmap (n*n <= 64 bits)
        std::uint32_t parent = 0;
        std::uint8_t square = 0;
        std::uint8_t path_len = 0;
        bool expanded = false;
        bool alive = false;
        std::vector<std::uint32_t> kids;
    };

    StateId intern(std::uint32_t parent, int square, std::uint64_t visited, int len);

    int n_;
    std::array<int, 8> order_;
    std::vector<PathNode> slab_;
    std::vector<std::uint32_t> free_;
    std::vector<StateId> roots_;
};

} // namespace mgs

#endif

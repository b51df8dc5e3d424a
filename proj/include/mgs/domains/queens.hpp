#ifndef MGS_DOMAINS_QUEENS_HPP
#define MGS_DOMAINS_QUEENS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "mgs/state_space.hpp"

namespace mgs {

/**
 * n-queens as row-by-row placement: a state is a consistent partial placement
 * of queens in rows 0..r-1, goals are full boards. Successors put the next
 * row's queen on every non-attacked column, tried in `column_order` (identity
 * by default; shuffling it varies value ordering between trials without
 * touching the state identity).
 *
 * States pack as base-(n+1) digit strings (digit = column + 1, row-indexed),
 * which caps the board at n <= 15 to stay inside 64 bits.
 */
class NQueensSpace : public StateSpace {
public:
    explicit NQueensSpace(int n);
    NQueensSpace(int n, std::vector<int> column_order);

    std::vector<StateId> successors(StateId s) override;
    bool is_goal(StateId s) override { return decode(s).size() == static_cast<std::size_t>(n_); }
    bool is_tree() const override { return true; }
    std::string encode(StateId s) override;

    int board() const { return n_; }
    StateId root() const { return 0; }

    // columns placed so far, row order
    std::vector<int> decode(StateId s) const;

private:
    int n_;
    std::vector<int> order_;
};

} // namespace mgs

#endif

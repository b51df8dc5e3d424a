#include "mgs/domains/knight.hpp"

#include <numeric>
#include <stdexcept>

namespace mgs {

namespace {
constexpr int kDx[8] = {1, 2, 2, 1, -1, -2, -2, -1};
constexpr int kDy[8] = {2, 1, -1, -2, -2, -1, 1, 2};

constexpr std::uint32_t kNoParent = 0xffffffffu;
} // namespace

KnightTourSpace::KnightTourSpace(int n)
    : KnightTourSpace(n, {0, 1, 2, 3, 4, 5, 6, 7}) {}

KnightTourSpace::KnightTourSpace(int n, std::array<int, 8> move_order)
    : n_(n), order_(move_order) {
    if (n < 3 || n > 8)
        throw std::invalid_argument("knight tour: board size must be in [3, 8]");
    std::array<int, 8> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 8; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i)
            throw std::invalid_argument("knight tour: move order must permute 0..7");
}

StateId KnightTourSpace::intern(std::uint32_t parent, int square, std::uint64_t visited, int len) {
    std::uint32_t slot;
    if (!free_.empty()) {
        slot = free_.back();
        free_.pop_back();
    } else {
        slot = static_cast<std::uint32_t>(slab_.size());
        slab_.emplace_back();
    }
    PathNode& p = slab_[slot];
    p.visited = visited;
    p.parent = parent;
    p.square = static_cast<std::uint8_t>(square);
    p.path_len = static_cast<std::uint8_t>(len);
    p.expanded = false;
    p.alive = true;
    p.kids.clear();
    return slot;
}

std::vector<StateId> KnightTourSpace::roots() {
    if (roots_.empty()) {
        for (int sq = 0; sq < n_ * n_; ++sq)
            roots_.push_back(intern(kNoParent, sq, std::uint64_t{1} << sq, 1));
    }
    return roots_;
}

std::vector<StateId> KnightTourSpace::successors(StateId s) {
    PathNode& p = slab_.at(static_cast<std::size_t>(s));
    if (!p.alive) throw std::logic_error("knight tour: successors of a released state");
    if (p.expanded) return {p.kids.begin(), p.kids.end()};

    std::vector<std::uint32_t> kids;
    int x = p.square % n_, y = p.square / n_;
    std::uint64_t visited = p.visited;
    int len = p.path_len;
    for (int k : order_) {
        int nx = x + kDx[k], ny = y + kDy[k];
        if (nx < 0 || nx >= n_ || ny < 0 || ny >= n_) continue;
        int sq = ny * n_ + nx;
        if (visited & (std::uint64_t{1} << sq)) continue;
        kids.push_back(static_cast<std::uint32_t>(
            intern(static_cast<std::uint32_t>(s), sq, visited | (std::uint64_t{1} << sq), len + 1)));
    }
    // intern() may grow the slab and invalidate p; re-resolve before writing.
    PathNode& q = slab_[static_cast<std::size_t>(s)];
    q.expanded = true;
    q.kids = std::move(kids);
    return {q.kids.begin(), q.kids.end()};
}

bool KnightTourSpace::is_goal(StateId s) {
    return slab_.at(static_cast<std::size_t>(s)).path_len == n_ * n_;
}

std::vector<int> KnightTourSpace::path_squares(StateId s) const {
    std::vector<int> squares;
    std::uint32_t cur = static_cast<std::uint32_t>(s);
    while (cur != kNoParent) {
        const PathNode& p = slab_.at(cur);
        squares.push_back(p.square);
        cur = p.parent;
    }
    std::reverse(squares.begin(), squares.end());
    return squares;
}

std::string KnightTourSpace::encode(StateId s) {
    std::string out;
    for (int sq : path_squares(s)) {
        if (!out.empty()) out += '-';
        out += std::to_string(sq % n_) + "," + std::to_string(sq / n_);
    }
    return out;
}

void KnightTourSpace::release(StateId s) {
    PathNode& p = slab_.at(static_cast<std::size_t>(s));
    if (!p.alive) return;
    // The parent's memoized child list would now dangle; drop it so a later
    // successors() call re-interns a fresh, fully live set.
    if (p.parent != kNoParent) {
        PathNode& par = slab_[p.parent];
        if (par.alive && par.expanded) {
            par.expanded = false;
            par.kids.clear();
        }
    }
    p.alive = false;
    p.kids.clear();
    p.kids.shrink_to_fit();
    free_.push_back(static_cast<std::uint32_t>(s));
}

} // namespace mgs

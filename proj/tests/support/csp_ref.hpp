#ifndef TESTS_SUPPORT_CSP_REF_HPP
#define TESTS_SUPPORT_CSP_REF_HPP

// Self-contained enumerators for the combinatorial domains. They use raw
// bitboards and recursion — nothing from the library — so a disagreement
// means the domain model is wrong, not the helper.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace testref {

struct TreeCount {
    std::uint64_t goals = 0;
    std::uint64_t states = 0; // every partial state, roots included
};

namespace detail {

inline void queens_rec(int n, int row, std::uint32_t cols, std::uint32_t d1, std::uint32_t d2,
                       TreeCount& out) {
    out.states += 1;
    if (row == n) {
        out.goals += 1;
        return;
    }
    for (int c = 0; c < n; ++c) {
        std::uint32_t cb = 1u << c;
        std::uint32_t b1 = 1u << (row + c);
        std::uint32_t b2 = 1u << (row - c + n - 1);
        if ((cols & cb) || (d1 & b1) || (d2 & b2)) continue;
        queens_rec(n, row + 1, cols | cb, d1 | b1, d2 | b2, out);
    }
}

inline void knight_rec(int n, int sq, std::uint64_t visited, int len, TreeCount& out) {
    out.states += 1;
    if (len == n * n) {
        out.goals += 1;
        return;
    }
    static const int dx[8] = {1, 2, 2, 1, -1, -2, -2, -1};
    static const int dy[8] = {2, 1, -1, -2, -2, -1, 1, 2};
    int x = sq % n, y = sq / n;
    for (int m = 0; m < 8; ++m) {
        int nx = x + dx[m], ny = y + dy[m];
        if (nx < 0 || nx >= n || ny < 0 || ny >= n) continue;
        int nsq = ny * n + nx;
        if (visited & (1ull << nsq)) continue;
        knight_rec(n, nsq, visited | (1ull << nsq), len + 1, out);
    }
}

} // namespace detail

// Row-by-row queen placements: every consistent partial board is a state,
// complete boards are goals.
inline TreeCount count_queens(int n) {
    TreeCount out;
    detail::queens_rec(n, 0, 0, 0, 0, out);
    return out;
}

// Simple knight paths from every start square; complete tours are goals.
inline TreeCount count_knight_paths(int n) {
    TreeCount out;
    for (int sq = 0; sq < n * n; ++sq)
        detail::knight_rec(n, sq, 1ull << sq, 1, out);
    return out;
}

// Legality replay for a reported tour ("x,y-x,y-..." squares).
inline bool is_legal_knight_tour(int n, const std::vector<int>& squares) {
    if (static_cast<int>(squares.size()) != n * n) return false;
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        int sq = squares[i];
        if (sq < 0 || sq >= n * n || (seen & (1ull << sq))) return false;
        seen |= 1ull << sq;
        if (i > 0) {
            int dx = std::abs(sq % n - squares[i - 1] % n);
            int dy = std::abs(sq / n - squares[i - 1] / n);
            if (!((dx == 1 && dy == 2) || (dx == 2 && dy == 1))) return false;
        }
    }
    return true;
}

// Full-board consistency check for a queen placement (columns, row order
// implied by index).
inline bool is_legal_queen_board(int n, const std::vector<int>& cols) {
    if (static_cast<int>(cols.size()) != n) return false;
    for (int r1 = 0; r1 < n; ++r1) {
        if (cols[r1] < 0 || cols[r1] >= n) return false;
        for (int r2 = r1 + 1; r2 < n; ++r2) {
            if (cols[r1] == cols[r2]) return false;
            if (std::abs(cols[r1] - cols[r2]) == r2 - r1) return false;
        }
    }
    return true;
}

} // namespace testref

#endif

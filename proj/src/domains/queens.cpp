#include "mgs/domains/queens.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mgs {

NQueensSpace::NQueensSpace(int n) : NQueensSpace(n, {}) {}

NQueensSpace::NQueensSpace(int n, std::vector<int> column_order) : n_(n), order_(std::move(column_order)) {
    if (n < 1 || n > 15)
        throw std::invalid_argument("n-queens: board size must be in [1, 15]");
    if (order_.empty()) {
        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
    } else {
        std::vector<int> sorted = order_;
        std::sort(sorted.begin(), sorted.end());
        for (int c = 0; c < n; ++c)
            if (sorted[static_cast<std::size_t>(c)] != c)
                throw std::invalid_argument("n-queens: column order must permute 0..n-1");
    }
}

std::vector<int> NQueensSpace::decode(StateId s) const {
    std::vector<int> cols;
    StateId base = static_cast<StateId>(n_) + 1;
    while (s != 0) {
        cols.push_back(static_cast<int>(s % base) - 1);
        s /= base;
    }
    return cols;
}

std::vector<StateId> NQueensSpace::successors(StateId s) {
    std::vector<int> cols = decode(s);
    int row = static_cast<int>(cols.size());
    if (row == n_) return {};

    StateId base = static_cast<StateId>(n_) + 1;
    StateId digit_scale = 1;
    for (int i = 0; i < row; ++i) digit_scale *= base;

    std::vector<StateId> out;
    for (int c : order_) {
        bool attacked = false;
        for (int r = 0; r < row && !attacked; ++r)
            attacked = cols[static_cast<std::size_t>(r)] == c ||
                       std::abs(cols[static_cast<std::size_t>(r)] - c) == row - r;
        if (!attacked)
            out.push_back(s + digit_scale * static_cast<StateId>(c + 1));
    }
    return out;
}

std::string NQueensSpace::encode(StateId s) {
    std::vector<int> cols = decode(s);
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cols[i]);
    }
    return out.empty() ? "<empty>" : out;
}

} // namespace mgs

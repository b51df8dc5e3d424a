#ifndef MGS_TYPES_HPP
#define MGS_TYPES_HPP

#include <cstdint>
#include <limits>

namespace mgs {

// Opaque state handle. Each state space decides how ids map to states
// (packed encodings for small combinatorial states, slab indices otherwise).
using StateId = std::uint64_t;

// Index into a SearchGraph node pool.
using NodeIdx = std::uint32_t;
constexpr NodeIdx kNoNode = static_cast<NodeIdx>(-1);

// Heuristic scores: lower is better everywhere.
using Score = double;
constexpr Score kInfScore = std::numeric_limits<double>::infinity();

// Hard cap on the counter horizon D; runtime D must be 1..kMaxCounterDepth.
constexpr int kMaxCounterDepth = 8;

} // namespace mgs

#endif

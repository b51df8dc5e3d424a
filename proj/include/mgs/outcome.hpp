#ifndef MGS_OUTCOME_HPP
#define MGS_OUTCOME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mgs/types.hpp"

namespace mgs {

/** One collected goal: when it was found and what it was. */
struct DiscoveryRecord {
    StateId state = 0;
    std::uint64_t generated_at = 0;     // meter reading at collection time
    std::string encoded;                // canonical state form (survives reclamation)
    std::vector<std::string> path;      // root..goal, only if path recording is on
};

struct TraceCheckpoint {
    std::uint64_t generated = 0;
    std::uint64_t goals = 0;
};

/** Goals-vs-resources profile of a single run. */
struct AnytimeTrace {
    std::vector<TraceCheckpoint> checkpoints; // strictly increasing in `generated`
    std::uint64_t final_generated = 0;
    double wall_seconds = 0.0; // informational; never serialized into reports

    // Goals collected by the time `generated` nodes had been generated.
    std::uint64_t goals_at(std::uint64_t generated) const {
        std::uint64_t g = 0;
        for (const auto& c : checkpoints) {
            if (c.generated > generated) break;
            g = c.goals;
        }
        return g;
    }
};

enum class Termination { kResourcesExhausted, kOpenExhausted, kCutoff, kStopped };

struct SearchOutcome {
    std::vector<DiscoveryRecord> collected;
    AnytimeTrace trace;
    std::uint64_t generated = 0;
    Termination termination = Termination::kResourcesExhausted;

    std::uint64_t goal_count() const { return collected.size(); }
};

} // namespace mgs

#endif

#ifndef MGS_BENCH_HPP
#define MGS_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgs/domains/webgraph.hpp"
#include "mgs/outcome.hpp"

namespace mgs {

/**
 * Declarative experiment setup, loadable from JSON (same field names). One
 * config describes: which domain (and whether it is rebuilt per trial), which
 * engine and frontier heuristic, the budget and its mode, and how results are
 * sampled. See README for the full key reference.
 */
struct DomainConfig {
    std::string kind = "grid"; // grid | web | queens | knight | msa | file
    // 0 = rebuild the domain from each trial's seed; nonzero = one fixed
    // domain shared by all trials (only starts/noise vary per trial).
    std::uint64_t seed = 0;

    // grid
    int width = 50;
    int height = 50;
    double wall_density = 0.25;
    int max_wall_length = 10;
    std::size_t goal_count = 20;
    std::string goal_placement = "scattered"; // scattered | clustered
    int clusters = 3;
    double cluster_spread = 3.0;

    // web
    WebGraphParams web;
    double est_noise = 0.25;

    // queens / knight
    int board = 8;

    // msa
    std::vector<std::string> sequences;

    // file
    std::string path;
};

struct ExperimentConfig {
    DomainConfig domain;

    std::string algorithm = "greedy"; // greedy | astar_eps | backtracking | hill
    // bfs | min_dist | min_dist_dis | sum_dist | sum_dist_dis | progress |
    // mu | combined | lex   (_dis = cross collected goals off the list)
    std::string heuristic = "bfs";
    double alpha = 0.3;        // combined blend weight
    double epsilon = 0.1;      // astar_eps bound
    std::size_t walk_length = 5; // hill-climbing escape walk

    bool clustering = false;
    double cluster_tau = 0.5;
    bool diversify = false;
    int counter_depth = 4;
    std::uint32_t sigma = 8;

    std::string mode = "anytime"; // anytime | contract_resources | contract_quality
    double quality_target = 0.0;  // goal fraction q, contract_quality only
    std::uint64_t resources = 0;  // absolute R; 0 = use resources_pct
    double resources_pct = 20.0;  // percent of the domain size estimate
    std::uint64_t assumed_budget = 0; // anytime planning budget; 0 = domain size

    int trials = 1;
    std::uint64_t seed = 1;             // trial i runs with seed + i ...
    std::vector<std::uint64_t> seeds;   // ... unless listed here explicitly
    double checkpoint_pct = 1.0;
    bool record_paths = false;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

/** Per-checkpoint aggregate over trials, plus the raw per-trial traces. */
struct ProfileReport {
    std::vector<double> checkpoint_pct;
    std::vector<std::uint64_t> checkpoint_gen;
    std::vector<double> goals_mean;
    std::vector<double> goals_std; // population std dev
    int trials = 0;
    std::uint64_t resources = 0;
    std::uint64_t total_goals = 0; // 0 = unknown for this domain
    std::vector<AnytimeTrace> raw;
    std::vector<std::uint64_t> final_goals;
    std::vector<std::uint64_t> final_generated;
};

struct TrialResult {
    AnytimeTrace trace;
    std::uint64_t generated = 0;
    std::uint64_t goals = 0;
    Termination termination = Termination::kResourcesExhausted;
};

// One seeded search with the configured domain/engine/heuristic.
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed);

// All trials + checkpoint aggregation. Deterministic for a fixed config.
ProfileReport run_experiment(const ExperimentConfig& config);

// Mean-goals ratio a/b per checkpoint; 0/0 -> 1, x/0 -> +inf. The grids must
// be identical.
std::vector<double> improvement_factor(const ProfileReport& a, const ProfileReport& b);

/** Resources spent to hit a goal-count target (mode = contract_quality). */
struct ContractQualityResult {
    std::uint64_t goal_target = 0;
    std::vector<std::uint64_t> resources_used; // per trial
    std::vector<std::uint8_t> reached;         // per trial
};
ContractQualityResult contract_quality_run(const ExperimentConfig& config);

// What resources_pct is a percentage of: passable cells, node count, or (for
// tree domains) the exhaustively counted generation total.
std::uint64_t domain_size_estimate(const ExperimentConfig& config);

// checkpoint_pct,generated,goals_mean,goals_std,trials -- 6 significant
// digits, bitwise reproducible for a fixed config.
void write_csv(std::ostream& os, const ProfileReport& report);
void write_improvement_csv(std::ostream& os, const ProfileReport& a,
                           const std::vector<double>& factors);
void write_json(std::ostream& os, const ExperimentConfig& config, const ProfileReport& report);

} // namespace mgs

#endif

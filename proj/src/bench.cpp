#include "mgs/bench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mgs/astar_epsilon.hpp"
#include "mgs/backtracking.hpp"
#include "mgs/best_first.hpp"
#include "mgs/distance_heuristics.hpp"
#include "mgs/domains/graph_file.hpp"
#include "mgs/domains/grid.hpp"
#include "mgs/domains/knight.hpp"
#include "mgs/domains/msa.hpp"
#include "mgs/domains/queens.hpp"
#include "mgs/hill_climbing.hpp"
#include "mgs/induction.hpp"
#include "mgs/mu_inference.hpp"
#include "mgs/oracle.hpp"

namespace mgs {

namespace {

using nlohmann::json;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string g6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok)
            throw std::invalid_argument(std::string("config: unknown key '") + it.key() + "' in " +
                                        where);
    }
}

// ---------------------------------------------------------------------------
// per-trial domain instantiation

struct DomainBundle {
    std::unique_ptr<GridWorld> grid;
    std::unique_ptr<StateSpace> space_owner;
    AlignmentProblem msa; // owns the space for kind == "msa"

    StateSpace* space = nullptr;
    std::vector<StateId> inits;
    std::unique_ptr<GoalList> goals; // domains with an explicit goal list
    std::unique_ptr<DistanceEstimator> est;
    std::function<double(StateId)> admissible_h;

    std::uint64_t size_estimate = 0; // 0 = needs an exhaustive count
    std::uint64_t total_goals = 0;
    bool totals_known = false;
};

// Exhaustive (generations, goal count) for the tree-shaped domains; each call
// sweeps a fresh space so trial state is never disturbed.
std::pair<std::uint64_t, std::uint64_t> tree_domain_totals(const ExperimentConfig& cfg) {
    const DomainConfig& d = cfg.domain;
    if (cfg.domain.kind == "queens") {
        NQueensSpace space(d.board);
        GoalSweep s = exhaustive_goals(space, {space.root()});
        return {s.states_visited - 1, s.count};
    }
    if (cfg.domain.kind == "knight") {
        KnightTourSpace space(d.board);
        std::vector<StateId> roots = space.roots();
        GoalSweep s = exhaustive_goals(space, roots);
        return {s.states_visited - roots.size(), s.count};
    }
    if (cfg.domain.kind == "msa") {
        AlignmentSpace space(d.sequences);
        GoalSweep s = exhaustive_goals(space, {space.root()});
        return {s.states_visited - 1, s.count};
    }
    throw std::logic_error("tree_domain_totals: not a tree domain");
}

DomainBundle build_domain(const ExperimentConfig& cfg, std::uint64_t trial_seed) {
    const DomainConfig& d = cfg.domain;
    std::uint64_t domain_seed = d.seed != 0 ? d.seed : trial_seed;
    std::mt19937_64 trial_rng(mix64(trial_seed ^ 0x747269616cull));

    DomainBundle b;

    if (d.kind == "grid") {
        b.grid = std::make_unique<GridWorld>(
            generate_grid(d.width, d.height, d.wall_density, d.max_wall_length, domain_seed));
        GoalPlacement placement;
        if (d.goal_placement == "clustered") {
            placement.mode = GoalPlacement::Mode::kClustered;
            placement.clusters = d.clusters;
            placement.spread = d.cluster_spread;
        } else if (d.goal_placement != "scattered") {
            throw std::invalid_argument("config: goal_placement must be scattered or clustered");
        }
        place_goals(*b.grid, d.goal_count, placement, mix64(domain_seed ^ 0x676f616cull));

        b.space_owner = std::make_unique<GridSpace>(*b.grid);
        b.space = b.space_owner.get();
        b.goals = std::make_unique<GoalList>(b.grid->goals);
        b.est = std::make_unique<ManhattanEstimator>(*b.grid);

        // Start anywhere passable that is not itself a goal (falls back to
        // any passable cell on saturated maps).
        std::vector<StateId> cells = b.grid->passable_cells();
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        StateId start = cells[pick(trial_rng)];
        for (int t = 0; t < 1000 && b.goals->contains(start); ++t) start = cells[pick(trial_rng)];
        b.inits = {start};

        const DistanceEstimator* est = b.est.get();
        std::vector<StateId> goal_cells = b.grid->goals;
        b.admissible_h = [est, goal_cells](StateId s) {
            double best = kInfScore;
            for (StateId g : goal_cells) best = std::min(best, est->distance(s, g));
            return best;
        };
        b.size_estimate = b.grid->passable_count();
        b.total_goals = b.grid->goals.size();
        b.totals_known = true;
        return b;
    }

    if (d.kind == "web" || d.kind == "file") {
        ExplicitGraph g = d.kind == "web" ? synthetic_web_graph(d.web, domain_seed)
                                          : load_graph_file(d.path);
        auto space = std::make_unique<FileGraphSpace>(std::move(g));
        const ExplicitGraph& gr = space->graph();

        b.goals = std::make_unique<GoalList>(gr.goal_states());
        if (d.kind == "web") {
            b.est = std::make_unique<WebDistanceEstimator>(gr, d.est_noise, trial_seed);
            std::size_t span = std::min<std::size_t>(d.web.root_candidates, gr.size());
            std::uniform_int_distribution<std::size_t> pick(0, span - 1);
            b.inits = {static_cast<StateId>(pick(trial_rng))};
        } else {
            if (gr.feature_dim > 0)
                b.est = std::make_unique<WebDistanceEstimator>(gr, 0.0, 0);
            b.inits = {0};
        }
        b.size_estimate = gr.size();
        b.total_goals = b.goals->size();
        b.totals_known = true;
        b.space_owner = std::move(space);
        b.space = b.space_owner.get();
        return b;
    }

    if (d.kind == "queens" || d.kind == "knight") {
        bool lexical = cfg.heuristic == "lex" || cfg.heuristic == "bfs";
        if (d.kind == "queens") {
            std::vector<int> order(static_cast<std::size_t>(d.board));
            std::iota(order.begin(), order.end(), 0);
            if (!lexical) std::shuffle(order.begin(), order.end(), trial_rng);
            auto space = std::make_unique<NQueensSpace>(d.board, order);
            b.inits = {space->root()};
            b.space_owner = std::move(space);
        } else {
            std::array<int, 8> order{0, 1, 2, 3, 4, 5, 6, 7};
            if (!lexical) std::shuffle(order.begin(), order.end(), trial_rng);
            auto space = std::make_unique<KnightTourSpace>(d.board, order);
            b.inits = space->roots();
            b.space_owner = std::move(space);
        }
        b.space = b.space_owner.get();
        b.goals = std::make_unique<GoalList>(std::vector<StateId>{});
        return b;
    }

    if (d.kind == "msa") {
        b.msa = alignment_space(d.sequences, cfg.epsilon);
        b.space = b.msa.space.get();
        b.inits = b.msa.problem.initial_states;
        b.goals = std::make_unique<GoalList>(std::vector<StateId>{});
        AlignmentSpace* sp = b.msa.space.get();
        b.admissible_h = [sp](StateId s) { return sp->admissible_h(s); };
        return b;
    }

    throw std::invalid_argument("config: unknown domain kind '" + d.kind + "'");
}

void ensure_totals(const ExperimentConfig& cfg, DomainBundle& b) {
    if (b.totals_known) return;
    auto [size, goals] = tree_domain_totals(cfg);
    b.size_estimate = size;
    b.total_goals = goals;
    b.totals_known = true;
}

std::uint64_t resolve_resources(const ExperimentConfig& cfg, DomainBundle& b) {
    if (cfg.resources > 0) return cfg.resources;
    if (cfg.resources_pct <= 0.0)
        throw std::invalid_argument("config: need resources or a positive resources_pct");
    ensure_totals(cfg, b);
    double r = cfg.resources_pct / 100.0 * static_cast<double>(b.size_estimate);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(r)));
}

// ---------------------------------------------------------------------------
// heuristic wiring

struct ScorerBundle {
    std::unique_ptr<NodeScorer> inner; // distance part of the combined blend
    std::unique_ptr<KnnMuModel> model;
    std::unique_ptr<NodeScorer> main;
    std::unique_ptr<ExampleCollector> collector;
};

ScorerBundle build_scorer(const ExperimentConfig& cfg, DomainBundle& b) {
    ScorerBundle s;
    const std::string& h = cfg.heuristic;

    auto need_est = [&]() -> const DistanceEstimator& {
        if (!b.est)
            throw std::invalid_argument("config: heuristic '" + h + "' needs a distance estimator, "
                                        "which domain '" + cfg.domain.kind + "' does not provide");
        return *b.est;
    };

    if (h == "bfs" || h == "lex") {
        s.main = std::make_unique<ConstantScorer>();
    } else if (h == "min_dist" || h == "min_dist_dis") {
        s.main = std::make_unique<MinDistScorer>(*b.goals, need_est(), h == "min_dist_dis");
    } else if (h == "sum_dist" || h == "sum_dist_dis") {
        s.main = std::make_unique<SumDistScorer>(*b.goals, need_est(), h == "sum_dist_dis");
    } else if (h == "progress") {
        s.main = std::make_unique<ProgressScorer>(*b.goals, need_est());
    } else if (h == "mu") {
        s.main = std::make_unique<MuSiblingScorer>();
    } else if (h == "combined") {
        if (!b.space->has_features())
            throw std::invalid_argument("config: combined heuristic needs node features");
        s.inner = std::make_unique<MinDistScorer>(*b.goals, need_est(), false);
        s.model = std::make_unique<KnnMuModel>(cfg.counter_depth);
        s.main = std::make_unique<CombinedScorer>(*s.inner, *s.model, cfg.alpha);
    } else {
        throw std::invalid_argument("config: unknown heuristic '" + h + "'");
    }
    return s;
}

EngineParams engine_params(const ExperimentConfig& cfg, DomainBundle& b) {
    EngineParams p;
    p.counter_depth = cfg.counter_depth;
    p.sigma = cfg.sigma;
    p.record_paths = cfg.record_paths;
    p.cluster_siblings = cfg.clustering;
    p.cluster_tau = cfg.cluster_tau;
    p.diversify = cfg.diversify;
    if (cfg.mode == "contract_resources") {
        p.budget_mode = BudgetMode::kContractResources;
    } else if (cfg.mode == "anytime" || cfg.mode == "contract_quality") {
        p.budget_mode = BudgetMode::kAnytime;
        if (cfg.assumed_budget > 0) {
            p.assumed_budget = cfg.assumed_budget;
        } else {
            ensure_totals(cfg, b);
            p.assumed_budget = b.size_estimate;
        }
    } else {
        throw std::invalid_argument("config: unknown mode '" + cfg.mode + "'");
    }
    return p;
}

EngineHooks goal_list_hooks(DomainBundle& b) {
    EngineHooks hooks;
    if (b.goals && b.goals->size() > 0) {
        GoalList* goals = b.goals.get();
        hooks.on_goal_collected = [goals](StateId s, NodeIdx) {
            if (goals->contains(s)) goals->mark_visited(s);
        };
    }
    return hooks;
}

TrialResult to_result(const SearchOutcome& out) {
    return {out.trace, out.generated, out.goal_count(), out.termination};
}

} // namespace

TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed) {
    DomainBundle b = build_domain(config, trial_seed);
    std::uint64_t r = resolve_resources(config, b);

    SearchProblem problem;
    problem.space = b.space;
    problem.initial_states = b.inits;
    problem.resource_limit = r;
    problem.validate();

    ScorerBundle scorer = build_scorer(config, b);
    EngineParams params = engine_params(config, b);
    EngineHooks hooks = goal_list_hooks(b);

    if (config.algorithm == "greedy") {
        BestFirstEngine engine(problem, *scorer.main, params, hooks);
        if (scorer.model) {
            scorer.collector = std::make_unique<ExampleCollector>(engine.graph(), *b.space,
                                                                  *scorer.model);
            ExampleCollector* c = scorer.collector.get();
            engine.graph().on_counters_bumped = [c](NodeIdx n, int low) { c->on_bump(n, low); };
        }
        return to_result(engine.run());
    }
    if (config.algorithm == "astar_eps") {
        if (!b.admissible_h)
            throw std::invalid_argument("config: astar_eps needs a domain with an admissible "
                                        "cost bound (grid or msa)");
        AstarEpsilonEngine engine(problem, b.admissible_h, *scorer.main, config.epsilon, params,
                                  hooks);
        return to_result(engine.run());
    }
    if (config.algorithm == "backtracking") {
        if (!b.space->is_tree())
            throw std::invalid_argument("config: backtracking requires a tree domain");
        BacktrackingEngine engine(problem, *scorer.main, params, hooks);
        return to_result(engine.run());
    }
    if (config.algorithm == "hill") {
        HillClimbingEngine engine(problem, *scorer.main, config.walk_length,
                                  mix64(trial_seed ^ 0x68696c6cull), params, hooks);
        return to_result(engine.run());
    }
    throw std::invalid_argument("config: unknown algorithm '" + config.algorithm + "'");
}

namespace {

std::vector<std::uint64_t> trial_seeds(const ExperimentConfig& cfg) {
    if (!cfg.seeds.empty()) return cfg.seeds;
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    std::vector<std::uint64_t> out;
    for (int i = 0; i < cfg.trials; ++i) out.push_back(cfg.seed + static_cast<std::uint64_t>(i));
    return out;
}

void checkpoint_grid(const ExperimentConfig& cfg, std::uint64_t r, std::vector<double>& pct,
                     std::vector<std::uint64_t>& gen) {
    if (cfg.checkpoint_pct <= 0.0 || cfg.checkpoint_pct > 100.0)
        throw std::invalid_argument("config: checkpoint_pct must be in (0, 100]");
    for (int k = 0;; ++k) {
        double p = cfg.checkpoint_pct * k;
        if (p > 100.0 + 1e-9) break;
        pct.push_back(p);
        gen.push_back(static_cast<std::uint64_t>(
            std::llround(static_cast<double>(r) * p / 100.0)));
    }
    if (pct.back() < 100.0 - 1e-9) {
        pct.push_back(100.0);
        gen.push_back(r);
    }
}

} // namespace

ProfileReport run_experiment(const ExperimentConfig& config) {
    if (config.mode == "contract_quality")
        throw std::invalid_argument("config: contract_quality runs go through "
                                    "contract_quality_run");
    std::vector<std::uint64_t> seeds = trial_seeds(config);

    ProfileReport rep;
    rep.trials = static_cast<int>(seeds.size());

    for (std::size_t i = 0; i < seeds.size(); ++i) {
        TrialResult t;
        try {
            t = run_trial(config, seeds[i]);
        } catch (const std::exception& e) {
            throw std::runtime_error("trial " + std::to_string(i) + ": " + e.what());
        }
        if (rep.resources == 0) {
            // All trials share R by construction (domains are size-stable
            // across seeds for every kind).
            DomainBundle b = build_domain(config, seeds[i]);
            rep.resources = resolve_resources(config, b);
            if (b.totals_known) rep.total_goals = b.total_goals;
        }
        rep.raw.push_back(t.trace);
        rep.final_goals.push_back(t.goals);
        rep.final_generated.push_back(t.generated);
    }

    checkpoint_grid(config, rep.resources, rep.checkpoint_pct, rep.checkpoint_gen);
    for (std::size_t c = 0; c < rep.checkpoint_gen.size(); ++c) {
        double sum = 0.0, sq = 0.0;
        for (const AnytimeTrace& tr : rep.raw) {
            double v = static_cast<double>(tr.goals_at(rep.checkpoint_gen[c]));
            sum += v;
            sq += v * v;
        }
        double n = static_cast<double>(rep.raw.size());
        double mean = sum / n;
        rep.goals_mean.push_back(mean);
        rep.goals_std.push_back(std::sqrt(std::max(0.0, sq / n - mean * mean)));
    }
    return rep;
}

std::vector<double> improvement_factor(const ProfileReport& a, const ProfileReport& b) {
    if (a.checkpoint_gen != b.checkpoint_gen)
        throw std::invalid_argument("improvement factor: checkpoint grids differ");
    std::vector<double> out;
    out.reserve(a.goals_mean.size());
    for (std::size_t i = 0; i < a.goals_mean.size(); ++i) {
        double x = a.goals_mean[i], y = b.goals_mean[i];
        if (y == 0.0)
            out.push_back(x == 0.0 ? 1.0 : kInfScore);
        else
            out.push_back(x / y);
    }
    return out;
}

ContractQualityResult contract_quality_run(const ExperimentConfig& config) {
    if (config.mode != "contract_quality")
        throw std::invalid_argument("contract_quality_run: mode must be contract_quality");
    if (!(config.quality_target > 0.0) || config.quality_target > 1.0)
        throw std::invalid_argument("contract_quality_run: quality_target must be in (0, 1]");
    if (config.algorithm != "greedy")
        throw std::invalid_argument("contract_quality_run: only the greedy engine is wired for "
                                    "goal-count contracts");

    ContractQualityResult res;
    for (std::uint64_t seed : trial_seeds(config)) {
        DomainBundle b = build_domain(config, seed);
        ensure_totals(config, b);
        if (b.total_goals == 0)
            throw std::invalid_argument("contract_quality_run: domain has no goals");
        std::uint64_t target = static_cast<std::uint64_t>(
            std::ceil(config.quality_target * static_cast<double>(b.total_goals) - 1e-9));
        target = std::max<std::uint64_t>(1, target);
        res.goal_target = target;

        SearchProblem problem;
        problem.space = b.space;
        problem.initial_states = b.inits;
        problem.resource_limit = config.resources > 0 ? config.resources : b.size_estimate;
        problem.validate();

        ScorerBundle scorer = build_scorer(config, b);
        EngineParams params = engine_params(config, b);
        EngineHooks hooks = goal_list_hooks(b);

        BestFirstEngine engine(problem, *scorer.main, params, hooks);
        if (scorer.model) {
            scorer.collector = std::make_unique<ExampleCollector>(engine.graph(), *b.space,
                                                                  *scorer.model);
            ExampleCollector* c = scorer.collector.get();
            engine.graph().on_counters_bumped = [c](NodeIdx n, int low) { c->on_bump(n, low); };
        }
        while (engine.graph().collected_count() < target && engine.step()) {
        }
        res.resources_used.push_back(engine.graph().meter().generated);
        res.reached.push_back(engine.graph().collected_count() >= target ? 1 : 0);
    }
    return res;
}

std::uint64_t domain_size_estimate(const ExperimentConfig& config) {
    DomainBundle b = build_domain(config, config.seed);
    ensure_totals(config, b);
    return b.size_estimate;
}

// ---------------------------------------------------------------------------
// config I/O

namespace {

void parse_domain(const json& j, DomainConfig& d) {
    check_keys(j,
               {"kind", "seed", "width", "height", "wall_density", "max_wall_length",
                "goal_count", "goal_placement", "clusters", "cluster_spread", "web", "est_noise",
                "board", "sequences", "path"},
               "domain");
    d.kind = j.value("kind", d.kind);
    d.seed = j.value("seed", d.seed);
    d.width = j.value("width", d.width);
    d.height = j.value("height", d.height);
    d.wall_density = j.value("wall_density", d.wall_density);
    d.max_wall_length = j.value("max_wall_length", d.max_wall_length);
    d.goal_count = j.value("goal_count", d.goal_count);
    d.goal_placement = j.value("goal_placement", d.goal_placement);
    d.clusters = j.value("clusters", d.clusters);
    d.cluster_spread = j.value("cluster_spread", d.cluster_spread);
    d.est_noise = j.value("est_noise", d.est_noise);
    d.board = j.value("board", d.board);
    d.path = j.value("path", d.path);
    if (j.contains("sequences")) d.sequences = j["sequences"].get<std::vector<std::string>>();
    if (j.contains("web")) {
        const json& w = j["web"];
        check_keys(w,
                   {"nodes", "mean_out_degree", "topic_dims", "goal_topic", "goal_rate",
                    "homophily", "root_candidates"},
                   "domain.web");
        d.web.nodes = w.value("nodes", d.web.nodes);
        d.web.mean_out_degree = w.value("mean_out_degree", d.web.mean_out_degree);
        d.web.topic_dims = w.value("topic_dims", d.web.topic_dims);
        d.web.goal_topic = w.value("goal_topic", d.web.goal_topic);
        d.web.goal_rate = w.value("goal_rate", d.web.goal_rate);
        d.web.homophily = w.value("homophily", d.web.homophily);
        d.web.root_candidates = w.value("root_candidates", d.web.root_candidates);
    }
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: bad JSON: ") + e.what());
    }
    check_keys(j,
               {"domain", "algorithm", "heuristic", "alpha", "epsilon", "walk_length",
                "clustering", "cluster_tau", "diversify", "counter_depth", "sigma", "mode",
                "quality_target", "resources", "resources_pct", "assumed_budget", "trials",
                "seed", "seeds", "checkpoint_pct", "record_paths"},
               "top level");

    ExperimentConfig c;
    if (j.contains("domain")) parse_domain(j["domain"], c.domain);
    c.algorithm = j.value("algorithm", c.algorithm);
    c.heuristic = j.value("heuristic", c.heuristic);
    c.alpha = j.value("alpha", c.alpha);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.walk_length = j.value("walk_length", c.walk_length);
    c.clustering = j.value("clustering", c.clustering);
    c.cluster_tau = j.value("cluster_tau", c.cluster_tau);
    c.diversify = j.value("diversify", c.diversify);
    c.counter_depth = j.value("counter_depth", c.counter_depth);
    c.sigma = j.value("sigma", c.sigma);
    c.mode = j.value("mode", c.mode);
    c.quality_target = j.value("quality_target", c.quality_target);
    c.resources = j.value("resources", c.resources);
    c.resources_pct = j.value("resources_pct", c.resources_pct);
    c.assumed_budget = j.value("assumed_budget", c.assumed_budget);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    c.checkpoint_pct = j.value("checkpoint_pct", c.checkpoint_pct);
    c.record_paths = j.value("record_paths", c.record_paths);
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// report emission

void write_csv(std::ostream& os, const ProfileReport& rep) {
    os << "checkpoint_pct,generated,goals_mean,goals_std,trials\n";
    for (std::size_t i = 0; i < rep.checkpoint_pct.size(); ++i)
        os << g6(rep.checkpoint_pct[i]) << ',' << rep.checkpoint_gen[i] << ','
           << g6(rep.goals_mean[i]) << ',' << g6(rep.goals_std[i]) << ',' << rep.trials << '\n';
}

void write_improvement_csv(std::ostream& os, const ProfileReport& a,
                           const std::vector<double>& factors) {
    os << "checkpoint_pct,generated,factor\n";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        os << g6(a.checkpoint_pct[i]) << ',' << a.checkpoint_gen[i] << ',';
        if (std::isinf(factors[i]))
            os << "inf";
        else
            os << g6(factors[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const ExperimentConfig& config, const ProfileReport& rep) {
    json j;
    j["config"] = {{"domain", config.domain.kind}, {"algorithm", config.algorithm},
                   {"heuristic", config.heuristic}, {"mode", config.mode},
                   {"trials", rep.trials},          {"seed", config.seed}};
    j["resources"] = rep.resources;
    if (rep.total_goals > 0) j["total_goals"] = rep.total_goals;
    json cps = json::array();
    for (std::size_t i = 0; i < rep.checkpoint_pct.size(); ++i)
        cps.push_back({{"pct", rep.checkpoint_pct[i]},
                       {"generated", rep.checkpoint_gen[i]},
                       {"goals_mean", rep.goals_mean[i]},
                       {"goals_std", rep.goals_std[i]}});
    j["checkpoints"] = std::move(cps);
    j["final_goals"] = rep.final_goals;
    j["final_generated"] = rep.final_generated;
    json traces = json::array();
    for (const AnytimeTrace& t : rep.raw) {
        json one = json::array();
        for (const TraceCheckpoint& c : t.checkpoints)
            one.push_back({c.generated, c.goals});
        traces.push_back(std::move(one));
    }
    j["traces"] = std::move(traces);
    os << j.dump(2) << '\n';
}

} // namespace mgs

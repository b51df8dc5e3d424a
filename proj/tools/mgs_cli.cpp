// Command-line front end: run experiments from JSON configs, generate domain
// files, and diff two result profiles.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "mgs/bench.hpp"
#include "mgs/domains/graph_file.hpp"
#include "mgs/domains/grid.hpp"
#include "mgs/domains/knight.hpp"
#include "mgs/domains/msa.hpp"
#include "mgs/domains/queens.hpp"
#include "mgs/domains/webgraph.hpp"
#include "mgs/oracle.hpp"

namespace {

namespace fs = std::filesystem;

// Breadth-first materialization of an implicit space into the interchange
// struct, with a hard node cap so tree domains cannot blow up the process.
mgs::ExplicitGraph materialize(mgs::StateSpace& space, const std::vector<mgs::StateId>& roots,
                               std::uint64_t max_nodes) {
    mgs::ExplicitGraph g;
    g.feature_dim = 0;
    std::unordered_map<mgs::StateId, std::uint32_t> id;
    std::vector<mgs::StateId> order;
    auto intern = [&](mgs::StateId s) {
        auto it = id.find(s);
        if (it != id.end()) return it->second;
        if (order.size() >= max_nodes)
            throw std::runtime_error("gen-domain: state count exceeds --max-nodes (" +
                                     std::to_string(max_nodes) + "); raise the cap or shrink "
                                     "the instance");
        auto fresh = static_cast<std::uint32_t>(order.size());
        id.emplace(s, fresh);
        order.push_back(s);
        return fresh;
    };
    for (mgs::StateId r : roots) intern(r);
    for (std::size_t head = 0; head < order.size(); ++head) {
        mgs::StateId s = order[head];
        g.goal.push_back(space.is_goal(s) ? 1 : 0);
        std::vector<std::uint32_t> succ;
        for (mgs::StateId t : space.successors(s)) succ.push_back(intern(t));
        g.succs.push_back(std::move(succ));
        g.feats.emplace_back();
    }
    return g;
}

int cmd_run(const std::string& config_path, const std::string& out_dir, int trials,
            std::uint64_t seed, const std::string& format) {
    mgs::ExperimentConfig cfg = mgs::load_config_file(config_path);
    if (trials > 0) cfg.trials = trials;
    if (seed != 0) cfg.seed = seed;

    fs::create_directories(out_dir);

    if (cfg.mode == "contract_quality") {
        mgs::ContractQualityResult res = mgs::contract_quality_run(cfg);
        fs::path out = fs::path(out_dir) / "contract.csv";
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out.string());
        os << "trial,goal_target,resources_used,reached\n";
        for (std::size_t i = 0; i < res.resources_used.size(); ++i)
            os << i << ',' << res.goal_target << ',' << res.resources_used[i] << ','
               << int(res.reached[i]) << '\n';
        std::cout << "wrote " << out.string() << "\n";
        return 0;
    }

    mgs::ProfileReport rep = mgs::run_experiment(cfg);
    fs::path out = fs::path(out_dir) / (format == "json" ? "profile.json" : "profile.csv");
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out.string());
    if (format == "json")
        mgs::write_json(os, cfg, rep);
    else
        mgs::write_csv(os, rep);
    std::cout << "wrote " << out.string() << " (R=" << rep.resources
              << ", trials=" << rep.trials << ", final goals mean="
              << (rep.goals_mean.empty() ? 0.0 : rep.goals_mean.back()) << ")\n";
    return 0;
}

struct GenOpts {
    std::string kind;
    std::string out;
    std::uint64_t seed = 1;
    std::uint64_t max_nodes = 2'000'000;
    // grid
    int width = 50, height = 50;
    double wall_density = 0.25;
    int max_wall_length = 10;
    std::size_t goals = 20;
    std::string placement = "scattered";
    int clusters = 3;
    double spread = 3.0;
    // web
    mgs::WebGraphParams web;
    // queens / knight
    int board = 8;
    // msa
    std::string sequences; // comma separated
};

int cmd_gen(const GenOpts& o) {
    mgs::ExplicitGraph g;
    if (o.kind == "grid") {
        mgs::GridWorld world = mgs::generate_grid(o.width, o.height, o.wall_density,
                                                  o.max_wall_length, o.seed);
        mgs::GoalPlacement p;
        if (o.placement == "clustered") {
            p.mode = mgs::GoalPlacement::Mode::kClustered;
            p.clusters = o.clusters;
            p.spread = o.spread;
        }
        mgs::place_goals(world, o.goals, p, o.seed ^ 0x676f616cull);
        g = mgs::grid_to_graph(world);
    } else if (o.kind == "web") {
        g = mgs::synthetic_web_graph(o.web, o.seed);
    } else if (o.kind == "queens") {
        mgs::NQueensSpace space(o.board);
        g = materialize(space, {space.root()}, o.max_nodes);
    } else if (o.kind == "knight") {
        mgs::KnightTourSpace space(o.board);
        g = materialize(space, space.roots(), o.max_nodes);
    } else if (o.kind == "msa") {
        std::vector<std::string> seqs;
        std::stringstream ss(o.sequences);
        for (std::string tok; std::getline(ss, tok, ',');) seqs.push_back(tok);
        mgs::AlignmentProblem prob = mgs::alignment_space(seqs, 0.0);
        g = materialize(*prob.space, prob.problem.initial_states, o.max_nodes);
    } else {
        throw std::runtime_error("gen-domain: unknown kind '" + o.kind + "'");
    }
    mgs::save_graph_file(o.out, g);
    std::size_t goal_count = 0;
    for (auto flag : g.goal) goal_count += flag;
    std::cout << "wrote " << o.out << " (" << g.size() << " nodes, " << goal_count
              << " goals)\n";
    return 0;
}

// Minimal reader for our own profile.csv output.
mgs::ProfileReport load_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) ||
        line != "checkpoint_pct,generated,goals_mean,goals_std,trials")
        throw std::runtime_error(path + ": not a profile csv (bad header)");
    mgs::ProfileReport rep;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double pct, mean, stddev;
        unsigned long long gen;
        int trials;
        if (std::sscanf(line.c_str(), "%lf,%llu,%lf,%lf,%d", &pct, &gen, &mean, &stddev,
                        &trials) != 5)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad row");
        rep.checkpoint_pct.push_back(pct);
        rep.checkpoint_gen.push_back(gen);
        rep.goals_mean.push_back(mean);
        rep.goals_std.push_back(stddev);
        rep.trials = trials;
    }
    if (rep.checkpoint_gen.empty()) throw std::runtime_error(path + ": no data rows");
    return rep;
}

int cmd_report(const std::string& baseline, const std::string& candidate,
               const std::string& out) {
    mgs::ProfileReport base = load_profile_csv(baseline);
    mgs::ProfileReport cand = load_profile_csv(candidate);
    std::vector<double> factors = mgs::improvement_factor(cand, base);
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    mgs::write_improvement_csv(os, cand, factors);
    std::cout << "wrote " << out << " (final factor=";
    if (std::isinf(factors.back()))
        std::cout << "inf";
    else
        std::cout << factors.back();
    std::cout << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple-goal search experiment driver"};
    app.require_subcommand(1);

    // run
    std::string config_path, out_dir = ".", format = "csv";
    int trials = 0;
    std::uint64_t seed = 0;
    CLI::App* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("--config", config_path, "experiment config (JSON)")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--trials", trials, "override trial count");
    run->add_option("--seed", seed, "override base seed");
    run->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // gen-domain
    GenOpts gen;
    CLI::App* gd = app.add_subcommand("gen-domain", "generate a graph file");
    gd->add_option("--kind", gen.kind, "grid|web|queens|knight|msa")->required();
    gd->add_option("--out", gen.out, "output path")->required();
    gd->add_option("--seed", gen.seed, "generator seed");
    gd->add_option("--max-nodes", gen.max_nodes, "cap for materialized tree domains");
    gd->add_option("--width", gen.width, "grid width");
    gd->add_option("--height", gen.height, "grid height");
    gd->add_option("--wall-density", gen.wall_density, "fraction of cells walled");
    gd->add_option("--max-wall-length", gen.max_wall_length, "wall segment cap");
    gd->add_option("--goals", gen.goals, "number of goal cells");
    gd->add_option("--placement", gen.placement, "scattered|clustered")
        ->check(CLI::IsMember({"scattered", "clustered"}));
    gd->add_option("--clusters", gen.clusters, "cluster count");
    gd->add_option("--spread", gen.spread, "cluster spread (cells)");
    gd->add_option("--nodes", gen.web.nodes, "web graph size");
    gd->add_option("--out-degree", gen.web.mean_out_degree, "web mean out-degree");
    gd->add_option("--topics", gen.web.topic_dims, "web feature dimensions");
    gd->add_option("--goal-topic", gen.web.goal_topic, "index of the goal topic");
    gd->add_option("--goal-rate", gen.web.goal_rate, "fraction of nodes made goals");
    gd->add_option("--homophily", gen.web.homophily, "same-topic link preference");
    gd->add_option("--board", gen.board, "board size for queens/knight");
    gd->add_option("--sequences", gen.sequences, "comma-separated sequences for msa");

    // report
    std::string baseline, candidate, report_out;
    CLI::App* rp = app.add_subcommand("report", "improvement factors: candidate vs baseline");
    rp->add_option("--baseline", baseline, "baseline profile.csv")->required();
    rp->add_option("--candidate", candidate, "candidate profile.csv")->required();
    rp->add_option("--out", report_out, "output csv")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, trials, seed, format);
        if (gd->parsed()) {
            if (gen.kind == "msa" && gen.sequences.empty())
                throw std::runtime_error("gen-domain: --sequences is required for msa");
            return cmd_gen(gen);
        }
        if (rp->parsed()) return cmd_report(baseline, candidate, report_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

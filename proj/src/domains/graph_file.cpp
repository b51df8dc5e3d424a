#include "mgs/domains/graph_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mgs {

namespace {

[[noreturn]] void fail_line(std::size_t lineno, const std::string& what) {
    throw std::runtime_error("graph file: line " + std::to_string(lineno) + ": " + what);
}

// Split on single spaces; the format never emits doubled separators.
std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        if (end == std::string::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t lineno, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        fail_line(lineno, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

double parse_double(const std::string& tok, std::size_t lineno, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        fail_line(lineno, std::string("bad ") + what + " '" + tok + "'");
    }
}

} // namespace

void ExplicitGraph::validate() const {
    std::size_t n = succs.size();
    if (goal.size() != n)
        throw std::runtime_error("graph: goal label count does not match node count");
    if (feature_dim > 0 && feats.size() != n)
        throw std::runtime_error("graph: feature row count does not match node count");
    for (std::size_t i = 0; i < n; ++i) {
        if (feature_dim > 0 && feats[i].size() != feature_dim)
            throw std::runtime_error("graph: node " + std::to_string(i) +
                                     " has wrong feature dimension");
        for (std::uint32_t t : succs[i])
            if (t >= n)
                throw std::runtime_error("graph: node " + std::to_string(i) +
                                         " references unknown id " + std::to_string(t));
    }
}

std::vector<StateId> ExplicitGraph::goal_states() const {
    std::vector<StateId> out;
    for (std::size_t i = 0; i < goal.size(); ++i)
        if (goal[i]) out.push_back(static_cast<StateId>(i));
    return out;
}

ExplicitGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("graph file: cannot open " + path);

    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line)) fail_line(lineno, "missing header");
    {
        std::istringstream hs(line);
        std::string magic, ver;
        std::size_t n = 0, dim = 0;
        if (!(hs >> magic >> ver >> n >> dim) || magic != "MGSG" || ver != "v1")
            fail_line(lineno, "expected 'MGSG v1 <n-nodes> <feature-dim>'");
        ExplicitGraph g;
        g.feature_dim = dim;
        g.succs.resize(n);
        g.goal.assign(n, 0);
        if (dim > 0) g.feats.resize(n);

        for (std::size_t i = 0; i < n; ++i) {
            ++lineno;
            if (!std::getline(in, line)) fail_line(lineno, "unexpected end of file");
            std::vector<std::string> f = split(line, ' ');
            if (f.size() != 4) fail_line(lineno, "expected 4 fields, got " + std::to_string(f.size()));

            std::uint64_t id = parse_uint(f[0], lineno, "node id");
            if (id != i) fail_line(lineno, "ids must be consecutive from 0 (expected " +
                                              std::to_string(i) + ")");
            std::uint64_t gl = parse_uint(f[1], lineno, "goal label");
            if (gl > 1) fail_line(lineno, "goal label must be 0 or 1");
            g.goal[i] = static_cast<std::uint8_t>(gl);

            if (dim == 0) {
                if (f[2] != "-") fail_line(lineno, "feature field must be '-' when dim is 0");
            } else {
                std::vector<std::string> ftoks = split(f[2], ',');
                if (ftoks.size() != dim)
                    fail_line(lineno, "expected " + std::to_string(dim) + " features, got " +
                                          std::to_string(ftoks.size()));
                g.feats[i].reserve(dim);
                for (const std::string& t : ftoks)
                    g.feats[i].push_back(parse_double(t, lineno, "feature"));
            }

            if (f[3] != "-") {
                for (const std::string& t : split(f[3], ';')) {
                    std::uint64_t s = parse_uint(t, lineno, "successor id");
                    if (s >= n) fail_line(lineno, "successor id " + t + " out of range");
                    g.succs[i].push_back(static_cast<std::uint32_t>(s));
                }
            }
        }
        g.validate();
        return g;
    }
}

void save_graph_file(const std::string& path, const ExplicitGraph& g) {
    g.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("graph file: cannot write " + path);

    out << "MGSG v1 " << g.size() << ' ' << g.feature_dim << '\n';
    char buf[64];
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << i << ' ' << static_cast<int>(g.goal[i]) << ' ';
        if (g.feature_dim == 0) {
            out << '-';
        } else {
            for (std::size_t k = 0; k < g.feature_dim; ++k) {
                // %.17g survives a parse round-trip for any double.
                std::snprintf(buf, sizeof buf, "%.17g", g.feats[i][k]);
                out << (k ? "," : "") << buf;
            }
        }
        out << ' ';
        if (g.succs[i].empty()) {
            out << '-';
        } else {
            for (std::size_t k = 0; k < g.succs[i].size(); ++k)
                out << (k ? ";" : "") << g.succs[i][k];
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("graph file: write failed for " + path);
}

} // namespace mgs

#include "twoclub/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twoclub {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) lines.push_back(line);
    }
    return lines;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<long long, long long>> pairs;
    for (const auto& line : content_lines(text)) {
        std::istringstream in(line);
        long long a, b;
        if (!(in >> a >> b)) throw std::invalid_argument("edge list: expected two integers per line");
        std::string extra;
        if (in >> extra) throw std::invalid_argument("edge list: trailing tokens on line");
        pairs.emplace_back(a, b);
    }
    if (pairs.empty()) return Graph(0, {});

    // Header heuristic: the first pair (n, m) is a header when the remaining
    // line count equals m and every id fits below n.
    auto [hn, hm] = pairs.front();
    bool header = hn >= 0 && hm == static_cast<long long>(pairs.size()) - 1;
    if (header)
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (pairs[i].first >= hn || pairs[i].second >= hn || pairs[i].first < 0 ||
                pairs[i].second < 0) {
                header = false;
                break;
            }

    std::vector<std::pair<int, int>> edges;
    long long max_id = -1;
    for (std::size_t i = header ? 1 : 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        if (a < 0 || b < 0) throw std::invalid_argument("edge list: negative vertex id");
        max_id = std::max({max_id, a, b});
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    long long n = header ? hn : max_id + 1;
    return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || (fmt != "edge" && fmt != "col" && fmt != "edges"))
                throw std::invalid_argument("dimacs: malformed problem line");
        } else if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("dimacs: malformed edge line");
            if (n < 0) throw std::invalid_argument("dimacs: edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("dimacs: vertex id out of range");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        }
        // other line types (n, x, ...) are ignored
    }
    if (n < 0) throw std::invalid_argument("dimacs: missing problem line");
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph(const std::string& path) {
    std::string text = slurp(path);
    if (ends_with(path, ".col")) return parse_dimacs(text);
    return parse_edge_list(text);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << format_edge_list(g);
}

VertexSet read_vertex_list(const std::string& path) {
    VertexSet result;
    for (const auto& line : content_lines(slurp(path))) {
        std::istringstream in(line);
        long long v;
        if (!(in >> v)) throw std::invalid_argument("vertex list: expected one integer per line");
        std::string extra;
        if (in >> extra) throw std::invalid_argument("vertex list: trailing tokens on line");
        if (v < 0) throw std::invalid_argument("vertex list: negative vertex id");
        result.push_back(static_cast<int>(v));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

void write_vertex_list(const std::string& path, const VertexSet& s) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    for (int v : s) out << v << '\n';
}

Max2SatFormula read_max2sat(const std::string& path) {
    Max2SatFormula f;
    bool have_header = false;
    for (const auto& line : content_lines(slurp(path))) {
        std::istringstream in(line);
        if (!have_header) {
            std::string tag;
            long long vars, clauses, k;
            if (!(in >> tag >> vars >> clauses >> k) || tag != "p")
                throw std::invalid_argument("max2sat: expected header 'p vars clauses k'");
            f.num_vars = static_cast<int>(vars);
            f.k = static_cast<int>(k);
            have_header = true;
        } else {
            int a, b;
            if (!(in >> a >> b)) throw std::invalid_argument("max2sat: expected two literals per line");
            f.clauses.emplace_back(a, b);
        }
    }
    if (!have_header) throw std::invalid_argument("max2sat: empty file");
    validate_formula(f);
    return f;
}

std::string format_max2sat(const Max2SatFormula& f) {
    std::ostringstream out;
    out << "p " << f.num_vars << ' ' << f.clauses.size() << ' ' << f.k << '\n';
    for (auto [a, b] : f.clauses) out << a << ' ' << b << '\n';
    return out.str();
}

std::vector<int> read_colors(const std::string& path, int num_vertices) {
    std::vector<int> colors(num_vertices, 0);
    std::vector<char> seen(num_vertices, 0);
    for (const auto& line : content_lines(slurp(path))) {
        std::istringstream in(line);
        long long v, c;
        if (!(in >> v >> c)) throw std::invalid_argument("colors: expected 'vertex color' per line");
        if (v < 0 || v >= num_vertices) throw std::invalid_argument("colors: vertex id out of range");
        if (seen[v]) throw std::invalid_argument("colors: vertex colored twice");
        seen[v] = 1;
        colors[v] = static_cast<int>(c);
    }
    for (int v = 0; v < num_vertices; ++v)
        if (!seen[v]) throw std::invalid_argument("colors: vertex " + std::to_string(v) + " has no color");
    return colors;
}

std::string report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["report_version"] = 1;
    j["input"] = report.input;
    j["instance"] = {{"n", report.n}, {"m", report.m}};
    j["parameters"] = {
        {"max_degree", report.degrees.max_degree},
        {"average_degree", report.degrees.average_degree},
        {"h_index", report.degrees.h_index},
        {"degeneracy", report.degeneracy_value},
        {"components", report.component_count},
    };
    if (report.greedy_cluster_modulator >= 0)
        j["parameters"]["greedy_cluster_modulator"] = report.greedy_cluster_modulator;
    if (report.greedy_cograph_modulator >= 0)
        j["parameters"]["greedy_cograph_modulator"] = report.greedy_cograph_modulator;
    if (report.params_only) return j.dump(2);

    j["algorithm"] = report.algorithm;
    if (!report.auto_rule.empty()) j["auto_rule"] = report.auto_rule;
    j["s"] = report.s;
    j["result"] = {
        {"size", report.size},
        {"witness", report.witness},
        {"verified", report.verified},
    };
    if (report.ell) {
        j["ell"] = *report.ell;
        j["decision"] = report.decision.value_or(false);
    }
    j["stats"] = {
        {"branch_nodes", report.stats.branch_nodes},
        {"table_entries", report.stats.table_entries},
        {"time_ms", report.stats.elapsed_ms},
    };
    return j.dump(2);
}

std::string instance_metadata_json(const ReducedInstance& inst,
                                   const std::vector<std::pair<std::string, bool>>& checks) {
    nlohmann::json j;
    j["format"] = "twoclub-instance";
    j["kind"] = to_string(inst.kind);
    j["ell"] = inst.ell;
    j["n"] = inst.graph.num_vertices();
    j["m"] = inst.graph.num_edges();
    j["source"] = inst.source_summary;
    j["labels"] = inst.labels;
    if (inst.pads_shrunk) {
        j["pads_shrunk"] = true;
        j["warning"] = "pad blocks were shrunk below their literal sizes; equivalence not guaranteed";
    }
    if (!checks.empty()) {
        nlohmann::json c;
        for (const auto& [name, ok] : checks) c[name] = ok;
        j["checks"] = c;
    }
    return j.dump(2);
}

}  // namespace twoclub

#include "flowfw/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "flowfw/errors.hpp"

namespace flowfw::io {

namespace {

constexpr long long kMaxNodes = 1'000'000;

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Splits on '\n'; a trailing '\r' is dropped by tokenize.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

long long parse_int(std::string_view tok, std::size_t line, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
}

double parse_real(std::string_view tok, std::size_t line, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError(line, std::string("expected number ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
}

struct Header {
    std::string id;
    std::map<std::string, std::string> annotations;
};

// Returns true for "# graph ..." lines; other '#' lines are comments.
bool parse_header(const std::vector<std::string_view>& toks, std::size_t line, Header& out) {
    std::size_t i = 0;
    if (toks[0] == "#" && toks.size() > 1 && toks[1] == "graph") {
        i = 2;
    } else if (toks[0] == "#graph") {
        i = 1;
    } else {
        return false;
    }
    if (i < toks.size() && toks[i] == "number" && i + 1 < toks.size() && toks[i + 1] == "=") i += 2;
    if (i >= toks.size()) throw ParseError(line, "graph header without an id");
    out.id = std::string(toks[i]);
    out.annotations.clear();
    for (++i; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq != std::string_view::npos && eq > 0) {
            out.annotations[std::string(toks[i].substr(0, eq))] = std::string(toks[i].substr(eq + 1));
        }
    }
    return true;
}

}  // namespace

std::vector<GraphInstance> parse_graph_file(std::string_view text) {
    std::vector<GraphInstance> result;
    const auto lines = split_lines(text);

    struct Pending {
        std::string id;
        long long nodes = -1;
        std::vector<Edge> edges;
        std::vector<double> flow;
    };
    std::optional<Pending> cur;
    auto finish = [&] {
        if (!cur) return;
        if (cur->nodes < 0) throw ParseError(lines.size(), "graph '" + cur->id + "' has no node count");
        FlowGraph g = build_dag(static_cast<NodeId>(cur->nodes), cur->edges);
        result.push_back(GraphInstance{std::move(cur->id), std::move(g), std::move(cur->flow)});
        cur.reset();
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto toks = tokenize(lines[i]);
        if (toks.empty()) continue;
        if (toks[0].front() == '#') {
            Header h;
            if (parse_header(toks, lineno, h)) {
                finish();
                cur = Pending{};
                cur->id = std::move(h.id);
            }
            continue;
        }
        if (!cur) throw ParseError(lineno, "data before the first '# graph' header");
        if (cur->nodes < 0) {
            if (toks.size() != 1) throw ParseError(lineno, "expected a node count");
            cur->nodes = parse_int(toks[0], lineno, "node count");
            if (cur->nodes < 0 || cur->nodes > kMaxNodes) throw ParseError(lineno, "node count out of range");
            continue;
        }
        if (toks.size() != 3) throw ParseError(lineno, "expected '<tail> <head> <flow>'");
        const long long tail = parse_int(toks[0], lineno, "tail");
        const long long head = parse_int(toks[1], lineno, "head");
        const double flow = parse_real(toks[2], lineno, "flow");
        if (tail < 0 || tail >= cur->nodes || head < 0 || head >= cur->nodes) {
            throw ParseError(lineno, "edge references a node outside [0, " + std::to_string(cur->nodes) + ")");
        }
        if (flow < 0.0) throw ParseError(lineno, "negative flow");
        cur->edges.push_back(Edge{static_cast<NodeId>(tail), static_cast<NodeId>(head)});
        cur->flow.push_back(flow);
    }
    finish();
    return result;
}

std::vector<PathSection> parse_truth_file(std::string_view text) {
    std::vector<PathSection> result;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto toks = tokenize(lines[i]);
        if (toks.empty()) continue;
        if (toks[0].front() == '#') {
            Header h;
            if (parse_header(toks, lineno, h)) {
                result.push_back(PathSection{std::move(h.id), {}, std::move(h.annotations)});
            }
            continue;
        }
        if (result.empty()) throw ParseError(lineno, "data before the first '# graph' header");
        if (toks.size() < 3) throw ParseError(lineno, "expected '<weight> <v0> ... <vk>' with at least two nodes");
        WeightedNodePath p;
        p.weight = parse_real(toks[0], lineno, "weight");
        if (!(p.weight > 0.0)) throw ParseError(lineno, "path weight must be positive");
        for (std::size_t k = 1; k < toks.size(); ++k) {
            const long long v = parse_int(toks[k], lineno, "node");
            if (v < 0 || v > kMaxNodes) throw ParseError(lineno, "node id out of range");
            p.nodes.push_back(static_cast<NodeId>(v));
        }
        result.back().paths.push_back(std::move(p));
    }
    return result;
}

namespace {

std::vector<PathVertex> resolve_paths(const FlowGraph& g, const PathSection& s, std::vector<double>& weights) {
    std::vector<PathVertex> paths;
    for (const auto& p : s.paths) {
        for (NodeId v : p.nodes) {
            if (v >= g.node_count()) {
                throw PathValidationError("graph " + s.id + ": path node " + std::to_string(v) + " not in graph");
            }
        }
        try {
            paths.push_back(PathVertex::from_nodes(g, p.nodes));
        } catch (const PathValidationError& e) {
            throw PathValidationError("graph " + s.id + ": " + e.what());
        }
        weights.push_back(p.weight);
    }
    return paths;
}

}  // namespace

GroundTruth to_ground_truth(const FlowGraph& g, const PathSection& section) {
    std::vector<double> weights;
    auto paths = resolve_paths(g, section, weights);
    return GroundTruth::build(std::move(paths), std::move(weights), g.edge_count());
}

Decomposition to_decomposition(const FlowGraph& g, const PathSection& section) {
    std::vector<double> weights;
    auto paths = resolve_paths(g, section, weights);
    return Decomposition::build(std::move(paths), std::move(weights), g.edge_count());
}

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string write_graph_section(const std::string& id, const FlowGraph& g, std::span<const double> flow) {
    require_length(flow.size(), g.edge_count(), "write_graph_section");
    std::ostringstream os;
    os << "# graph " << id << '\n' << g.node_count() << '\n';
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        os << g.edges()[e].tail << ' ' << g.edges()[e].head << ' ' << format_number(flow[e]) << '\n';
    }
    return os.str();
}

std::string write_graph_file(const std::vector<GraphInstance>& instances) {
    std::string out;
    for (const auto& inst : instances) out += write_graph_section(inst.id, inst.graph, inst.flow);
    return out;
}

std::string write_decomposition(const Decomposition& d) {
    std::ostringstream os;
    for (std::size_t k = 0; k < d.paths.size(); ++k) {
        os << format_number(d.weights[k]);
        for (NodeId v : d.paths[k].nodes) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::string write_path_section(const std::string& id, const Decomposition& d,
                               const std::map<std::string, std::string>& annotations) {
    std::string out = "# graph " + id;
    for (const auto& [k, v] : annotations) out += " " + k + "=" + v;
    out += '\n';
    out += write_decomposition(d);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace flowfw::io

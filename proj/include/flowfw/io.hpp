#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flowfw/decompose.hpp"
#include "flowfw/graph.hpp"
#include "flowfw/metrics.hpp"

// Text formats.
//
//   .graph   # graph <id>
//            <n>
//            <tail> <head> <flow>        one line per edge
//
//   .truth   # graph <id>
//   .paths   <weight> <v0> <v1> ... <vk> one line per path
//
// Sections repeat. Tokens are whitespace separated; LF or CRLF line endings.
// Header lines may carry extra tokens; `key=value` tokens are kept as
// annotations and `# graph number = <id>` is accepted as a header.
namespace flowfw::io {

struct GraphInstance {
    std::string id;
    FlowGraph graph;
    std::vector<double> flow;
};

struct WeightedNodePath {
    double weight;
    std::vector<NodeId> nodes;
};

struct PathSection {
    std::string id;
    std::vector<WeightedNodePath> paths;
    std::map<std::string, std::string> annotations;
};

std::vector<GraphInstance> parse_graph_file(std::string_view text);
std::vector<PathSection> parse_truth_file(std::string_view text);

// Resolves node sequences against g; throws PathValidationError.
GroundTruth to_ground_truth(const FlowGraph& g, const PathSection& section);
Decomposition to_decomposition(const FlowGraph& g, const PathSection& section);

// Shortest decimal representation that parses back to the same double.
std::string format_number(double v);

std::string write_graph_section(const std::string& id, const FlowGraph& g, std::span<const double> flow);
std::string write_graph_file(const std::vector<GraphInstance>& instances);

// Path lines only, one per path: weight then node sequence.
std::string write_decomposition(const Decomposition& d);
std::string write_path_section(const std::string& id, const Decomposition& d,
                               const std::map<std::string, std::string>& annotations = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace flowfw::io

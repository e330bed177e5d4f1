#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdimlab/graph.hpp"
#include "mdimlab/transforms.hpp"

namespace mdimlab {

/// graph6 body (no ">>graph6<<" header, no newline).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "n m\n" then one "u v\n" per edge, in canonical edge order.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Edge list if the first line holds two integers, graph6 otherwise.
/// Errors are Error{ParseError} carrying the line or byte position.
Graph parse_graph(std::string_view text);

/// One or more graphs: a single edge list, or graph6 strings one per line.
std::vector<Graph> parse_graphs(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");
std::string to_dot(const DerivedGraph& dg);

}  // namespace mdimlab

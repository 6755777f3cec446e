#pragma once

#include <iosfwd>
#include <string>

#include "stacklab/graph.hpp"
#include "stacklab/layout.hpp"

namespace stacklab {

// Graph text format:
//   graph <n> <m> [dim]
//   v <id> <c1> [c2] [c3]     (one per vertex when dim >= 1)
//   e <u> <v>                 (u < v)
// Blank lines and lines starting with '#' are ignored on input. The writer
// emits the canonical form, so write/parse round-trips are byte-exact.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

// Layout text format:
//   stacklayout <n> <m> <s>    (or queuelayout <n> <m> <q>)
//   order <v_1> ... <v_n>
//   e <u> <v> <page>
void write_stack_layout(std::ostream& os, const Graph& g, const StackLayout& l);
void write_queue_layout(std::ostream& os, const Graph& g, const QueueLayout& l);
// Readers match the edge lines against g's edge list and reject unknown,
// duplicate, or missing edges.
StackLayout read_stack_layout(std::istream& is, const Graph& g);
QueueLayout read_queue_layout(std::istream& is, const Graph& g);
std::string stack_layout_to_string(const Graph& g, const StackLayout& l);
StackLayout stack_layout_from_string(const std::string& text, const Graph& g);
std::string queue_layout_to_string(const Graph& g, const QueueLayout& l);
QueueLayout queue_layout_from_string(const std::string& text, const Graph& g);

// Per-page CSV report: "page,edges,violations,is_matching".
std::string report_to_csv(const Graph& g, const std::vector<std::int32_t>& page,
                          std::int32_t pages, const LayoutReport& rep);

void save_file(const std::string& path, const std::string& text);
std::string load_file(const std::string& path);

}  // namespace stacklab

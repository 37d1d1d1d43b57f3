#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcd/dispersal.hpp"
#include "mcd/graph.hpp"

namespace mcd {

struct Instance {
  Graph graph;
  RequestSet requests;
};

/// DIMACS-flavoured text format:
///   c <comment>            anywhere
///   p <n> <m> <|R|>        exactly once, first non-comment line
///   e <u> <v>              m edge lines
///   r <u> <v>              |R| request lines
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

/// Dispersal format: one `d <v> <k>` header per vertex with a nonempty
/// local set, followed by k `e <u> <w>` lines.
Dispersal parse_dispersal(const std::string& text, const Graph& host);
std::string serialize_dispersal(const Dispersal& d);

Instance load_instance(const std::string& path);
Dispersal load_dispersal(const std::string& path, const Graph& host);
std::string read_file(const std::string& path);

/// Write via a temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

struct SolveReport {
  std::string solver;
  int cost = 0;
  bool feasible = false;
  double wall_ms = 0.0;
  std::optional<int> oracle_cost;
};

std::string report_text(const SolveReport& rep, const Dispersal& d);
/// Line-delimited JSON with stable key order.
std::string report_json(const SolveReport& rep, const Dispersal& d);

}  // namespace mcd

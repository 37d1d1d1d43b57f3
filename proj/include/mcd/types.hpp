#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcd {

using Vertex = int;

// Canonical undirected edge: first < second.
using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance/dispersal text. `line` is 1-based, 0 when unknown.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& what)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
};

// Instance shape not handled by the requested solver.
struct UnsupportedClassError : Error {
  using Error::Error;
};

// Oracle instance-size guard tripped.
struct GuardError : Error {
  using Error::Error;
};

// No feasible solution exists (disconnected request endpoints) or a cap was hit.
struct InfeasibleError : Error {
  using Error::Error;
};

}  // namespace mcd

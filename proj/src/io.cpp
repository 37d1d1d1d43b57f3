#include "mcd/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mcd {

namespace {

struct Line {
  int number;
  std::string tag;
  std::vector<long> args;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    Line l{no, tag, {}};
    long v;
    while (ls >> v) l.args.push_back(v);
    std::string trailing;
    if (ls.clear(), ls >> trailing)
      throw ParseError(no, "trailing token '" + trailing + "'");
    out.push_back(std::move(l));
  }
  return out;
}

int checked_id(const Line& l, size_t idx, long n) {
  long v = l.args.at(idx);
  if (v < 0 || v >= n) throw ParseError(l.number, "vertex id " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing problem line");
  const Line& p = lines.front();
  if (p.tag != "p" || p.args.size() != 3) throw ParseError(p.number, "expected 'p <n> <m> <r>'");
  long n = p.args[0], m = p.args[1], nr = p.args[2];
  if (n < 0 || m < 0 || nr < 0) throw ParseError(p.number, "negative count in problem line");

  std::vector<Edge> edges, requests;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tag == "e" || l.tag == "r") {
      if (l.args.size() != 2) throw ParseError(l.number, "expected two vertex ids");
      int u = checked_id(l, 0, n), v = checked_id(l, 1, n);
      if (u == v) throw ParseError(l.number, "self-loop");
      (l.tag == "e" ? edges : requests).push_back(make_edge(u, v));
    } else {
      throw ParseError(l.number, "unknown record '" + l.tag + "'");
    }
  }
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(0, "edge count mismatch: header says " + std::to_string(m) + ", found " +
                            std::to_string(edges.size()));
  if (static_cast<long>(requests.size()) != nr)
    throw ParseError(0, "request count mismatch: header says " + std::to_string(nr) +
                            ", found " + std::to_string(requests.size()));
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(0, "duplicate edge");
    sorted = requests;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(0, "duplicate request");
  }
  Instance inst{Graph(static_cast<int>(n), edges), RequestSet(requests)};
  inst.requests.validate_against(inst.graph);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' '
      << inst.requests.size() << '\n';
  for (const Edge& e : inst.graph.edges()) out << "e " << e.first << ' ' << e.second << '\n';
  for (const Edge& r : inst.requests.requests()) out << "r " << r.first << ' ' << r.second << '\n';
  return out.str();
}

Dispersal parse_dispersal(const std::string& text, const Graph& host) {
  Dispersal d(host.vertex_count());
  auto lines = tokenize(text);
  size_t i = 0;
  while (i < lines.size()) {
    const Line& l = lines[i];
    if (l.tag != "d" || l.args.size() != 2) throw ParseError(l.number, "expected 'd <v> <k>'");
    int v = checked_id(l, 0, host.vertex_count());
    long k = l.args[1];
    if (k < 0) throw ParseError(l.number, "negative edge count");
    ++i;
    for (long j = 0; j < k; ++j, ++i) {
      if (i >= lines.size()) throw ParseError(l.number, "truncated dispersal block");
      const Line& el = lines[i];
      if (el.tag != "e" || el.args.size() != 2) throw ParseError(el.number, "expected 'e <u> <w>'");
      int a = checked_id(el, 0, host.vertex_count());
      int b = checked_id(el, 1, host.vertex_count());
      if (!host.has_edge(a, b)) throw ParseError(el.number, "edge not present in the graph");
      d.add(v, make_edge(a, b));
    }
  }
  return d;
}

std::string serialize_dispersal(const Dispersal& d) {
  std::ostringstream out;
  for (int v = 0; v < d.host_size(); ++v) {
    const EdgeSet& es = d.at(v);
    if (es.empty()) continue;
    out << "d " << v << ' ' << es.size() << '\n';
    for (const Edge& e : es) out << "e " << e.first << ' ' << e.second << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

Dispersal load_dispersal(const std::string& path, const Graph& host) {
  return parse_dispersal(read_file(path), host);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("rename failed for " + path);
}

std::string report_text(const SolveReport& rep, const Dispersal& d) {
  std::ostringstream out;
  out << "solver:   " << rep.solver << '\n';
  out << "cost:     " << rep.cost << '\n';
  out << "feasible: " << (rep.feasible ? "yes" : "no") << '\n';
  out << "time_ms:  " << rep.wall_ms << '\n';
  if (rep.oracle_cost) out << "oracle:   " << *rep.oracle_cost << '\n';
  out << serialize_dispersal(d);
  return out.str();
}

std::string report_json(const SolveReport& rep, const Dispersal& d) {
  nlohmann::ordered_json j;
  j["solver"] = rep.solver;
  j["cost"] = rep.cost;
  j["feasible"] = rep.feasible;
  j["time_ms"] = rep.wall_ms;
  if (rep.oracle_cost) j["oracle_cost"] = *rep.oracle_cost;
  nlohmann::ordered_json locals = nlohmann::ordered_json::array();
  for (int v = 0; v < d.host_size(); ++v) {
    if (d.at(v).empty()) continue;
    nlohmann::ordered_json entry;
    entry["vertex"] = v;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const Edge& e : d.at(v)) edges.push_back({e.first, e.second});
    entry["edges"] = edges;
    locals.push_back(entry);
  }
  j["dispersal"] = locals;
  return j.dump() + "\n";
}

}  // namespace mcd

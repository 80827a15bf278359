#include "dcfold/serialize.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dcfold {

namespace {

using nlohmann::json;

std::string finish(const json& j) { return j.dump(2) + "\n"; }

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string filter_text(Mask f) {
  std::string s = "{";
  bool first = true;
  for (int x : mask_elements(f)) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

json poset_payload(const Poset& p) {
  json labels = json::array();
  for (int x = 0; x < p.size(); ++x) labels.push_back(p.label(x));
  json covers = json::array();
  for (auto [x, y] : p.covers()) covers.push_back({x, y});
  return {{"n", p.size()}, {"labels", labels}, {"covers", covers}};
}

json orbit_payload(const WeightOrbit& o) {
  json nodes = json::array();
  for (const Weight& w : o.nodes) nodes.push_back(w);
  json edges = json::array();
  for (const OrbitEdge& e : o.weak_edges) edges.push_back({e.from, e.to, e.label});
  return {{"cartan",
           {{"type", lie_type_name(o.rs.type())}, {"rank", o.rs.rank()}}},
          {"lambda", o.lambda},
          {"nodes", nodes},
          {"weak_edges", edges}};
}

json filter_elements(const std::vector<Mask>& filters) {
  json out = json::array();
  for (Mask f : filters) out.push_back(mask_elements(f));
  return out;
}

// The weak edge behind a cover pair; covers of a step-generated order are
// always themselves steps.
int step_label(const std::vector<OrbitEdge>& edges, int from, int to) {
  for (const OrbitEdge& e : edges)
    if (e.from == from && e.to == to) return e.label;
  throw std::logic_error("cover pair is not a step");
}

void emit_nodes(std::ostringstream& out, const std::string& indent,
                const std::string& prefix,
                const std::vector<std::string>& labels,
                const std::vector<int>& level) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    out << indent << prefix << k << " [label=\"" << labels[k] << "\"];\n";
  int top = level.empty() ? -1 : *std::max_element(level.begin(), level.end());
  for (int h = 0; h <= top; ++h) {
    bool any = false;
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (level[k] != h) continue;
      if (!any) out << indent << "{ rank=same;";
      any = true;
      out << " " << prefix << k << ";";
    }
    if (any) out << " }\n";
  }
}

void emit_orbit_body(std::ostringstream& out, const std::string& indent,
                     const std::string& prefix, const WeightOrbit& o) {
  std::vector<std::string> labels;
  for (const Weight& w : o.nodes) labels.push_back(weight_text(w));
  emit_nodes(out, indent, prefix, labels, o.height);
  auto reach = reachability(static_cast<int>(o.nodes.size()), o.weak_edges);
  for (auto [a, b] : hasse_edges(reach))
    out << indent << prefix << a << " -> " << prefix << b << " [label=\""
        << step_label(o.weak_edges, a, b) << "\"];\n";
}

void emit_filter_body(std::ostringstream& out, const std::string& indent,
                      const std::string& prefix, const ColoredPoset& cp,
                      const std::vector<Mask>& filters) {
  std::vector<std::string> labels;
  std::vector<int> level;
  for (Mask f : filters) {
    labels.push_back(filter_text(f));
    level.push_back(mask_count(f));
  }
  emit_nodes(out, indent, prefix, labels, level);
  std::vector<OrbitEdge> steps;
  for (std::size_t k = 0; k < filters.size(); ++k)
    for (int c = 1; c <= cp.max_color(); ++c) {
      Mask t = color_toggle(cp, filters[k], c);
      if (t == filters[k] || (t & filters[k]) != filters[k]) continue;
      auto it = std::find(filters.begin(), filters.end(), t);
      if (it == filters.end()) continue;
      steps.push_back({static_cast<int>(k),
                       static_cast<int>(it - filters.begin()), c});
    }
  auto reach = reachability(static_cast<int>(filters.size()), steps);
  for (auto [a, b] : hasse_edges(reach))
    out << indent << prefix << a << " -> " << prefix << b << " [label=\""
        << step_label(steps, a, b) << "\"];\n";
}

} // namespace

std::string poset_json(const Poset& p) {
  json j = poset_payload(p);
  j["schema"] = "1";
  return finish(j);
}

std::string colored_poset_json(const ColoredPoset& cp) {
  json j;
  j["schema"] = "1";
  j["poset"] = poset_payload(cp.poset());
  j["kappa"] = cp.colors();
  j["max_color"] = cp.max_color();
  return finish(j);
}

std::string orbit_json(const WeightOrbit& o) {
  json j = orbit_payload(o);
  j["schema"] = "1";
  return finish(j);
}

std::string filters_json(const std::vector<Mask>& filters) {
  json j;
  j["schema"] = "1";
  j["count"] = filters.size();
  j["filters"] = filter_elements(filters);
  return finish(j);
}

std::string report_json(const CheckReport& rep) {
  json checks = json::array();
  for (const Check& c : rep.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  json j;
  j["schema"] = "1";
  j["case"] = rep.case_name;
  j["pass"] = rep.ok();
  j["checks"] = checks;
  return finish(j);
}

std::string bridge_json(const MinusculePoset& mp) {
  json f_table = json::array();
  for (std::size_t k = 0; k < mp.orbit.nodes.size(); ++k)
    f_table.push_back(mask_elements(mp.filter_of(static_cast<int>(k))));
  json j;
  j["schema"] = "1";
  j["poset"] = poset_payload(mp.colored.poset());
  j["kappa"] = mp.colored.colors();
  j["orbit"] = orbit_payload(mp.orbit);
  j["f_table"] = f_table;
  return finish(j);
}

std::string poset_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int x = 0; x < p.size(); ++x)
    out << "  p" << x << " [label=\"" << p.label(x) << "\"];\n";
  for (auto [x, y] : p.covers()) out << "  p" << x << " -> p" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string orbit_dot(const WeightOrbit& o) {
  std::ostringstream out;
  out << "digraph orbit {\n  rankdir=BT;\n  node [shape=box];\n";
  emit_orbit_body(out, "  ", "w", o);
  out << "}\n";
  return out.str();
}

std::string orbit_and_filters_dot(const WeightOrbit& o, const ColoredPoset& cp,
                                  const std::vector<Mask>& filters) {
  std::ostringstream out;
  out << "digraph pair {\n  rankdir=BT;\n  node [shape=box];\n";
  out << "  subgraph cluster_orbit {\n    label=\"orbit\";\n";
  emit_orbit_body(out, "    ", "a", o);
  out << "  }\n";
  out << "  subgraph cluster_filters {\n    label=\"filters\";\n";
  emit_filter_body(out, "    ", "b", cp, filters);
  out << "  }\n";
  out << "}\n";
  return out.str();
}

std::vector<DotGraph> parse_dot_clusters(const std::string& dot) {
  std::vector<DotGraph> graphs;
  bool clustered = dot.find("subgraph cluster_") != std::string::npos;
  if (!clustered) graphs.emplace_back();
  int current = clustered ? -1 : 0;
  std::map<std::string, std::pair<int, int>> where; // id -> (graph, node)
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("subgraph cluster_") != std::string::npos) {
      graphs.emplace_back();
      current = static_cast<int>(graphs.size()) - 1;
      continue;
    }
    std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    std::size_t arrow = line.find(" -> ");
    if (arrow != std::string::npos) {
      std::string from = line.substr(start, arrow - start);
      std::size_t rhs = arrow + 4;
      std::size_t end = line.find_first_of(" ;[", rhs);
      std::string to = line.substr(rhs, end - rhs);
      auto fit = where.find(from);
      auto tit = where.find(to);
      if (fit == where.end() || tit == where.end() ||
          fit->second.first != tit->second.first)
        throw std::invalid_argument("edge between unknown dot nodes");
      graphs[fit->second.first].edges.push_back(
          {fit->second.second, tit->second.second});
      continue;
    }
    std::size_t tag = line.find(" [label=\"");
    if (tag == std::string::npos || tag < start) continue;
    std::string id = line.substr(start, tag - start);
    std::size_t open = tag + 9;
    std::size_t close = line.find('"', open);
    if (current < 0) throw std::invalid_argument("dot node outside clusters");
    where[id] = {current, static_cast<int>(graphs[current].nodes.size())};
    graphs[current].nodes.push_back(line.substr(open, close - open));
  }
  return graphs;
}

std::string rectangle_csv(const std::vector<RectangleRow>& rows) {
  std::ostringstream out;
  out << "m,n,filters,mirror_free,folded_orbit,status\n";
  for (const RectangleRow& r : rows)
    out << r.m << "," << r.n << "," << r.filters << "," << r.mirror_free
        << "," << r.folded_orbit << "," << (r.equal ? "equal" : "differ")
        << "\n";
  return out.str();
}

std::string rectangle_table_json(const std::vector<RectangleRow>& rows) {
  json table = json::array();
  for (const RectangleRow& r : rows)
    table.push_back({{"m", r.m},
                     {"n", r.n},
                     {"filters", r.filters},
                     {"mirror_free", r.mirror_free},
                     {"folded_orbit", r.folded_orbit},
                     {"equal", r.equal}});
  json j;
  j["schema"] = "1";
  j["table"] = table;
  return finish(j);
}

} // namespace dcfold

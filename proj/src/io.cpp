#include "tonnetz/io.h"

#include <cmath>
#include <sstream>

namespace tonnetz {

namespace {

std::string color_name(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Black: return "black";
    case Color::None: break;
  }
  return "";
}

Color color_from(const std::string& s) {
  if (s == "white") return Color::White;
  if (s == "black") return Color::Black;
  return Color::None;
}

nlohmann::json flat_to_json(const ProjFlat& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : f.rows()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(x.str());
    rows.push_back(row);
  }
  return rows;
}

ProjFlat flat_from_json(int ambient, const nlohmann::json& j) {
  RMat rows;
  for (const auto& row : j) {
    RVec v;
    for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
    rows.push_back(v);
  }
  return ProjFlat::span(ambient, rows);
}

}  // namespace

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Vertex& v : g.vertices()) {
    nlohmann::json jv = {{"id", v.id}, {"label", v.label}};
    if (v.color != Color::None) jv["color"] = color_name(v.color);
    j["vertices"].push_back(jv);
  }
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  LabeledGraph g;
  for (const auto& v : j.at("vertices"))
    g.add_vertex(v.at("label").get<std::string>(), color_from(v.value("color", std::string())));
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

std::string graph_to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [style=filled];\n";
  for (const Vertex& v : g.vertices()) {
    out << "  n" << v.id << " [label=\"" << v.label << "\"";
    if (v.color == Color::White) out << ", fillcolor=white";
    if (v.color == Color::Black) out << ", fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  n" << e.u << " -- n" << e.v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json structure_to_json(const IncidenceStructure& s) {
  nlohmann::json j;
  j["points"] = s.point_labels();
  j["lines"] = nlohmann::json::array();
  for (int l = 0; l < s.num_lines(); ++l)
    j["lines"].push_back({{"label", s.line_label(l)}, {"points", s.points_on(l)}});
  return j;
}

IncidenceStructure structure_from_json(const nlohmann::json& j) {
  std::vector<std::string> lines;
  std::vector<std::vector<int>> lp;
  for (const auto& l : j.at("lines")) {
    lines.push_back(l.at("label").get<std::string>());
    lp.push_back(l.at("points").get<std::vector<int>>());
  }
  return IncidenceStructure(j.at("points").get<std::vector<std::string>>(), lines, lp);
}

nlohmann::json cycle_to_json(const LabeledGraph& g, const Cycle& c) {
  std::vector<std::string> labels;
  for (int v : c.vertices) labels.push_back(g.vertex(v).label);
  return {{"length", c.length()}, {"vertices", labels}, {"edges", c.edge_ids}};
}

nlohmann::json cycle_vector_to_json(const CycleVector& v) {
  nlohmann::json parts = nlohmann::json::array();
  for (const Cycle& c : decompose_into_cycles(v)) parts.push_back(cycle_to_json(*v.graph(), c));
  return {{"edges", v.edge_ids()}, {"cycles", parts}};
}

nlohmann::json realization_to_json(const Realization& r) {
  nlohmann::json j;
  j["mode"] = "exact";
  j["ambient"] = r.ambient;
  j["structure"] = structure_to_json(r.structure);
  j["points"] = nlohmann::json::array();
  for (const auto& p : r.points) j["points"].push_back(flat_to_json(p));
  j["lines"] = nlohmann::json::array();
  for (const auto& l : r.lines) {
    nlohmann::json jl = {{"span", flat_to_json(l)}};
    if (r.ambient == 2) {
      nlohmann::json cov = nlohmann::json::array();
      for (const auto& x : l.covector()) cov.push_back(to_string(x));
      jl["covector"] = cov;
    }
    j["lines"].push_back(jl);
  }
  return j;
}

Realization realization_from_json(const nlohmann::json& j) {
  Realization r;
  r.ambient = j.at("ambient").get<int>();
  r.structure = structure_from_json(j.at("structure"));
  for (const auto& p : j.at("points")) r.points.push_back(flat_from_json(r.ambient, p));
  for (const auto& l : j.at("lines")) r.lines.push_back(flat_from_json(r.ambient, l.at("span")));
  return r;
}

nlohmann::json realization_to_json(const ApproxRealization& r) {
  nlohmann::json j;
  j["mode"] = "approximate";
  j["ambient"] = 2;
  j["structure"] = structure_to_json(r.structure);
  j["points"] = nlohmann::json::array();
  for (const auto& p : r.points) j["points"].push_back({p.x(), p.y(), p.z()});
  j["lines"] = nlohmann::json::array();
  for (const auto& l : r.lines) j["lines"].push_back({l.x(), l.y(), l.z()});
  return j;
}

nlohmann::json report_to_json(const RealizationReport& r) {
  nlohmann::json j = {{"flags", r.flags},
                      {"flags_ok", r.flags_ok},
                      {"nonflags", r.nonflags},
                      {"nonflags_ok", r.nonflags_ok},
                      {"max_flag_residual", r.max_flag_residual},
                      {"ok", r.ok()},
                      {"failures", r.failures}};
  if (std::isfinite(r.min_nonflag_residual)) j["min_nonflag_residual"] = r.min_nonflag_residual;
  return j;
}

}  // namespace tonnetz

// Command-line front end for the tonnetz library.
//
//   tonnetz build <kind> [--json|--dot] [--labels "C D E G A"]
//   tonnetz cycles <kind> --length N [--json]
//   tonnetz census eulerian [--max-length N] [--json]
//   tonnetz basis eulerian [--json]
//   tonnetz path <from> <to> [--json]
//   tonnetz analyze --progression "G#m EM" [--json]
//   tonnetz synthemes [--labels "1 2 3 4 5 6"] [--json]
//   tonnetz geometry desargues|cayley|cremona|d222 [--seed N] [--tol X] [--json]
//   tonnetz tessellate [--rings N] [--component major|minor] [--svg PATH] [--json]
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tonnetz/analysis.h"
#include "tonnetz/builders.h"
#include "tonnetz/cycle_space.h"
#include "tonnetz/geometry.h"
#include "tonnetz/io.h"
#include "tonnetz/tiling.h"

using namespace tonnetz;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_labels(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Built {
  LabeledGraph graph;
  std::optional<IncidenceStructure> structure;
};

Built build_kind(const std::string& kind, const std::string& labels) {
  if (kind == "eulerian") {
    auto t = build_eulerian();
    return {t.graph, t.structure};
  }
  if (kind == "pentatonic") {
    auto t = labels.empty() ? build_pentatonic() : build_pentatonic(split_labels(labels));
    return {t.graph, t.structure};
  }
  if (kind == "hexachordal") {
    auto t = labels.empty() ? build_hexachordal() : build_hexachordal(split_labels(labels));
    return {t.graph, t.structure};
  }
  if (kind == "archimedean-major") return {build_archimedean()[0].graph, std::nullopt};
  if (kind == "archimedean-minor") return {build_archimedean()[1].graph, std::nullopt};
  throw UsageError("unknown tonnetz '" + kind +
                   "' (eulerian, pentatonic, hexachordal, archimedean-major, archimedean-minor)");
}

std::string girth_text(const LabeledGraph& g) {
  auto gi = girth(g);
  return gi ? std::to_string(*gi) : "infinite";
}

std::string labels_of(const LabeledGraph& g, const Cycle& c) {
  std::string out;
  for (int v : c.vertices) out += (out.empty() ? "" : " ") + g.vertex(v).label;
  return out;
}

int cmd_build(const std::string& kind, const std::string& labels, bool as_json, bool as_dot) {
  Built b = build_kind(kind, labels);
  if (as_dot) {
    std::cout << graph_to_dot(b.graph);
    return 0;
  }
  if (as_json) {
    json j = {{"graph", graph_to_json(b.graph)}};
    if (b.structure) j["configuration"] = structure_to_json(*b.structure);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  auto deg = b.graph.regular_degree();
  std::cout << "tonnetz:     " << kind << '\n'
            << "vertices:    " << b.graph.num_vertices() << '\n'
            << "edges:       " << b.graph.num_edges() << '\n'
            << "regular:     " << (deg ? std::to_string(*deg) : "no") << '\n'
            << "components:  " << components(b.graph).size() << '\n'
            << "girth:       " << girth_text(b.graph) << '\n';
  if (b.structure) {
    auto ct = configuration_type(*b.structure);
    std::cout << "type:        " << ct.to_string() << ", " << ct.flags << " flags\n"
              << "self-dual:   " << (is_self_dual(*b.structure).self_dual ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_cycles(const std::string& kind, int length, bool as_json) {
  Built b = build_kind(kind, "");
  std::optional<EulerianTonnetz> eu;
  if (kind == "eulerian") eu = build_eulerian();
  auto cs = enumerate_cycles(b.graph, length);
  json out = json::array();
  for (const Cycle& c : cs) {
    json j = cycle_to_json(b.graph, c);
    if (eu) {
      auto r = report_cycle(*eu, c);
      j["p"] = r.p_count;
      j["family"] = r.family;
    }
    out.push_back(j);
  }
  if (as_json) {
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << cs.size() << " cycles of length " << length << '\n';
  for (const auto& j : out) {
    if (j.contains("p")) std::cout << "p=" << j["p"].get<int>() << "  ";
    std::cout << labels_of(b.graph, make_cycle(b.graph, j["vertices"].get<std::vector<std::string>>())) << '\n';
  }
  return 0;
}

int cmd_census(const std::string& kind, int max_length, bool as_json) {
  if (kind != "eulerian") throw UsageError("census is defined on the eulerian tonnetz");
  if (max_length < 3 || max_length > 14) throw UsageError("--max-length must lie in 3..14");
  auto rows = census(build_eulerian(), max_length);
  if (as_json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"length", r.length}, {"p", r.p}, {"count", r.count}, {"family", family_name(r.length, r.p)}});
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "length  p  count  family\n";
  for (const auto& r : rows)
    std::cout << std::setw(6) << r.length << std::setw(3) << r.p << std::setw(7) << r.count << "  "
              << family_name(r.length, r.p) << '\n';
  return 0;
}

int cmd_basis(const std::string& kind, bool as_json) {
  if (kind != "eulerian") throw UsageError("basis is defined on the eulerian tonnetz");
  auto t = build_eulerian();
  Cycle per = perimeter_cycle(t);
  std::vector<int> drop;
  for (int e = 0; e < t.graph.num_edges(); ++e)
    if (!per.contains_edge(e)) drop.push_back(e);
  drop.push_back(*t.graph.edge_between(t.graph.at("Em"), t.graph.at("CM")));
  auto basis = fundamental_basis(spanning_tree(t.graph, drop, t.graph.at("CM")));
  json out = json::array();
  for (size_t i = 0; i < basis.cycles.size(); ++i) {
    json j = cycle_vector_to_json(basis.vectors[i]);
    const Edge& ch = t.graph.edge(basis.chord_edges[i]);
    j["chord"] = {t.graph.vertex(ch.u).label, t.graph.vertex(ch.v).label};
    j["p"] = p_count(t, basis.cycles[i]);
    out.push_back(j);
  }
  if (as_json) {
    std::cout << json{{"dimension", cycle_space_dimension(t.graph)}, {"basis", out}}.dump(2) << '\n';
    return 0;
  }
  std::cout << "dimension " << cycle_space_dimension(t.graph) << " (spanning tree: perimeter without Em-CM)\n";
  for (size_t i = 0; i < basis.cycles.size(); ++i)
    std::cout << std::setw(2) << basis.cycles[i].length() << "  chord " << out[i]["chord"][0].get<std::string>()
              << '-' << out[i]["chord"][1].get<std::string>() << "  " << labels_of(t.graph, basis.cycles[i]) << '\n';
  return 0;
}

int cmd_path(const std::string& from, const std::string& to, bool as_json) {
  auto t = build_eulerian();
  auto r = shortest_paths(t.graph, t.vertex_of(parse_triad(from)), t.vertex_of(parse_triad(to)));
  std::vector<std::vector<std::string>> named;
  for (const auto& p : r.paths) {
    std::vector<std::string> n;
    for (int v : p) n.push_back(t.graph.vertex(v).label);
    named.push_back(n);
  }
  if (as_json) {
    std::cout << json{{"reachable", r.reachable}, {"length", r.length}, {"paths", named}}.dump(2) << '\n';
    return 0;
  }
  if (!r.reachable) {
    std::cout << "no path\n";
    return 0;
  }
  std::cout << "distance " << r.length << ", " << named.size() << " geodesics\n";
  for (const auto& n : named) {
    for (size_t i = 0; i < n.size(); ++i) std::cout << (i ? " " : "") << n[i];
    std::cout << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& progression, bool as_json) {
  auto prog = parse_progression(progression);
  if (prog.empty()) throw UsageError("--progression is empty");
  auto t = build_eulerian();
  auto r = validate_progression(t, prog);
  json steps = json::array();
  for (const auto& s : r.steps) {
    json j = {{"from", s.from.name()}, {"to", s.to.name()}, {"adjacent", s.adjacent}};
    if (s.edge_class) j["class"] = to_string(*s.edge_class);
    steps.push_back(j);
  }
  json cycles = json::array();
  for (const auto& c : r.containing_cycles) {
    json j = cycle_to_json(t.graph, c.cycle);
    j["p"] = c.p_count;
    j["family"] = c.family;
    cycles.push_back(j);
  }
  if (as_json) {
    std::cout << json{{"path", r.is_path}, {"steps", steps}, {"cycles", cycles}}.dump(2) << '\n';
    return 0;
  }
  for (const auto& s : steps)
    std::cout << s["from"].get<std::string>() << " -> " << s["to"].get<std::string>() << "  "
              << (s["adjacent"].get<bool>() ? s["class"].get<std::string>() : std::string("not adjacent")) << '\n';
  if (!r.is_path) {
    std::cout << "not a path in the tonnetz\n";
    return 0;
  }
  std::cout << r.containing_cycles.size() << " containing cycles up to length 14\n";
  for (const auto& c : r.containing_cycles)
    std::cout << "  " << c.family << ": " << labels_of(t.graph, c.cycle) << '\n';
  return 0;
}

int cmd_synthemes(const std::string& labels, bool as_json) {
  auto h = labels.empty() ? build_hexachordal() : build_hexachordal(split_labels(labels));
  auto tb = syntheme_tables(h);
  auto table_json = [](const std::vector<TableRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) j.push_back({{"key", r.key}, {"cells", r.cells}});
    return j;
  };
  json totals = json::array();
  for (const auto& t : h.totals) {
    std::vector<std::string> s;
    for (int i : t.synthemes) s.push_back(h.syntheme_label(i));
    totals.push_back({{"letter", std::string(1, t.letter)}, {"synthemes", s}});
  }
  if (as_json) {
    std::cout << json{{"totals", totals},
                      {"table1", table_json(tb.letters_to_numbers)},
                      {"table2", table_json(tb.numbers_to_letters)},
                      {"table3", table_json(tb.letter_totals)},
                      {"table4", table_json(tb.number_totals)}}
                     .dump(2)
              << '\n';
    return 0;
  }
  auto print = [](const char* title, const std::vector<TableRow>& rows, const char* sep) {
    std::cout << title << '\n';
    for (const auto& r : rows) {
      std::cout << "  " << std::setw(3) << std::left << r.key << std::right;
      for (size_t i = 0; i < r.cells.size(); ++i) std::cout << (i ? sep : "  ") << r.cells[i];
      std::cout << '\n';
    }
  };
  print("letter duad -> number syntheme", tb.letters_to_numbers, " ");
  print("number duad -> letter syntheme", tb.numbers_to_letters, " ");
  print("letter -> total", tb.letter_totals, "  ");
  print("number -> letter total", tb.number_totals, "  ");
  return 0;
}

int cmd_geometry(const std::string& which, std::uint64_t seed, double tol, bool as_json) {
  auto emit = [&](const json& real, const RealizationReport& rep, const std::string& title) {
    if (as_json) {
      std::cout << json{{"realization", real}, {"report", report_to_json(rep)}}.dump(2) << '\n';
      return;
    }
    std::cout << title << '\n'
              << "flags:     " << rep.flags_ok << '/' << rep.flags << '\n'
              << "non-flags: " << rep.nonflags_ok << '/' << rep.nonflags << '\n';
    for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
  };
  if (which == "desargues") {
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 100; ++tries) {
      try {
        auto r = desargues_instance(random_integer_vector(rng, 3), random_integer_vector(rng, 3),
                                    random_integer_vector(rng, 3), random_integer_vector(rng, 3),
                                    Rational(1, 2), Rational(1, 3), Rational(2, 3));
        emit(realization_to_json(r), verify_realization(r), "Desargues {10_3}, exact");
        return 0;
      } catch (const GeometryError&) {
      }
    }
    throw GeometryError("no non-degenerate Desargues instance for this seed");
  }
  if (which == "cayley" || which == "cremona") {
    Realization src;
    if (which == "cayley") {
      std::array<RVec, 5> pts = {make_rvec({1, 0, 0, 0}), make_rvec({0, 1, 0, 0}), make_rvec({0, 0, 1, 0}),
                                 make_rvec({0, 0, 0, 1}), make_rvec({1, 1, 1, 1})};
      src = cayley_pentatonic(pts, make_rvec({1, 2, 3, -7}));
    } else {
      std::array<RVec, 6> pts = {make_rvec({1, 0, 0, 0, 0}), make_rvec({0, 1, 0, 0, 0}), make_rvec({0, 0, 1, 0, 0}),
                                 make_rvec({0, 0, 0, 1, 0}), make_rvec({0, 0, 0, 0, 1}), make_rvec({1, 1, 1, 1, 1})};
      src = cremona_richmond(pts);
    }
    auto proj = project_to_plane(src, seed);
    emit(realization_to_json(proj.image), verify_realization(proj.image),
         (which == "cayley" ? std::string("pentatonic {10_3}") : std::string("Cremona-Richmond {15_3}")) +
             ", exact, projected to the plane after " + std::to_string(proj.attempts) + " attempt(s)");
    return 0;
  }
  if (which == "d222") {
    D222Options opt;
    opt.tol = tol;
    auto r = realize_d222_numeric(seed, opt);
    emit(realization_to_json(r.realization), r.report,
         "Eulerian {12_3}, approximate, accepted at seed " + std::to_string(r.seed));
    return 0;
  }
  throw UsageError("unknown construction '" + which + "' (desargues, cayley, cremona, d222)");
}

int cmd_tessellate(int rings, const std::string& component, const std::string& svg_path, bool as_json) {
  int c = component == "major" ? 0 : component == "minor" ? 1 : -1;
  if (c < 0) throw UsageError("--component must be major or minor");
  if (rings < 0) throw UsageError("--rings must be non-negative");
  auto patch = generate_tiling(build_archimedean()[c], rings);
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw std::runtime_error("cannot write " + svg_path);
    out << export_svg(patch);
  }
  if (as_json) {
    std::cout << export_json(patch).dump(2) << '\n';
    return 0;
  }
  int interior = 0;
  for (int v = 0; v < static_cast<int>(patch.vertices.size()); ++v) interior += patch.is_interior(v);
  std::cout << "dodecagons: " << patch.count(FaceKind::Dodecagon) << '\n'
            << "squares:    " << patch.count(FaceKind::Square) << '\n'
            << "hexagons:   " << patch.count(FaceKind::Hexagon) << '\n'
            << "vertices:   " << patch.vertices.size() << " (" << interior << " interior)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tone networks as graphs, configurations and projective geometry"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string kind, labels, progression, from, to, which, component = "major", svg_path;
  int length = 6, max_length = 14, rings = 1;
  bool as_dot = false;
  std::uint64_t seed = 0;
  double tol = 1e-8;

  auto* build = app.add_subcommand("build", "construct a tonnetz");
  build->add_option("kind", kind, "tonnetz name")->required();
  build->add_option("--labels", labels, "space-separated labels for pentatonic/hexachordal");
  build->add_flag("--dot", as_dot, "Graphviz output");
  build->add_flag("--json", as_json);

  auto* cycles = app.add_subcommand("cycles", "enumerate simple cycles of one length");
  cycles->add_option("kind", kind)->required();
  cycles->add_option("--length", length)->required();
  cycles->add_flag("--json", as_json);

  auto* cen = app.add_subcommand("census", "cycle counts by length and parallel edges");
  cen->add_option("kind", kind)->required();
  cen->add_option("--max-length", max_length);
  cen->add_flag("--json", as_json);

  auto* bas = app.add_subcommand("basis", "fundamental cycle basis of the perimeter tree");
  bas->add_option("kind", kind)->required();
  bas->add_flag("--json", as_json);

  auto* path = app.add_subcommand("path", "all shortest paths between two chords");
  path->add_option("from", from)->required();
  path->add_option("to", to)->required();
  path->add_flag("--json", as_json);

  auto* ana = app.add_subcommand("analyze", "progression as a path on the tonnetz");
  ana->add_option("--progression", progression, "e.g. \"G#m EM\"")->required();
  ana->add_flag("--json", as_json);

  auto* syn = app.add_subcommand("synthemes", "duads, synthemes, totals and their tables");
  syn->add_option("--labels", labels);
  syn->add_flag("--json", as_json);

  auto* geo = app.add_subcommand("geometry", "exact and numeric realizations");
  geo->add_option("construction", which, "desargues, cayley, cremona or d222")->required();
  geo->add_option("--seed", seed, "random seed (default 0)");
  geo->add_option("--tol", tol, "flag tolerance for d222 (default 1e-8)");
  geo->add_flag("--json", as_json);

  auto* tes = app.add_subcommand("tessellate", "{4,6,12} tiling labelled by an Archimedean tonnetz");
  tes->add_option("--rings", rings);
  tes->add_option("--component", component, "major or minor");
  tes->add_option("--svg", svg_path, "write SVG here");
  tes->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return cmd_build(kind, labels, as_json, as_dot);
    if (*cycles) return cmd_cycles(kind, length, as_json);
    if (*cen) return cmd_census(kind, max_length, as_json);
    if (*bas) return cmd_basis(kind, as_json);
    if (*path) return cmd_path(from, to, as_json);
    if (*ana) return cmd_analyze(progression, as_json);
    if (*syn) return cmd_synthemes(labels, as_json);
    if (*geo) return cmd_geometry(which, seed, tol, as_json);
    if (*tes) return cmd_tessellate(rings, component, svg_path, as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.h"
#include "tonnetz/analysis.h"
#include "tonnetz/builders.h"
#include "tonnetz/cycle_space.h"
#include "tonnetz/geometry.h"
#include "tonnetz/tiling.h"

using namespace tonnetz;
namespace fx = tonnetz::fixtures;

namespace {

// Pinned tolerances.
constexpr double kFlagTol = 1e-8;
constexpr double kNonflagSep = 1e-3;
constexpr double kEdgeTol = 1e-9;
constexpr int kDesarguesInstances = 100;

struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed = 0;

void criterion(int n, const std::string& title, const std::function<void(Checks&)>& body) {
  Checks c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s %2d  %s\n", c.failures.empty() ? "PASS" : "FAIL", n, title.c_str());
  for (const auto& f : c.failures) std::printf("         - %s\n", f.c_str());
  std::fflush(stdout);
  if (!c.failures.empty()) ++failed;
}

std::string str(int x) { return std::to_string(x); }

std::vector<std::pair<std::string, std::string>> golden_edges() {
  std::ifstream in(std::string(TONNETZ_TEST_DATA) + "/eulerian_adjacency.txt");
  if (!in) throw std::runtime_error("missing golden adjacency file");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string a, b;
    ss >> a >> b;
    out.push_back({a, b});
  }
  return out;
}

std::vector<std::string> golden_perimeter() {
  auto edges = golden_edges();
  std::vector<std::string> order = {edges[0].first};
  for (int i = 0; i < 23; ++i) order.push_back(edges[i].second);
  return order;
}

std::set<int> cycle_set(const std::vector<CycleReport>& rs, const std::function<bool(const CycleReport&)>& keep) {
  std::set<int> out;
  for (size_t i = 0; i < rs.size(); ++i)
    if (keep(rs[i])) out.insert(static_cast<int>(i));
  return out;
}

RVec cross(const RVec& a, const RVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool witness_ok(const IncidenceStructure& s, const SelfDuality& w) {
  if (!w.self_dual || static_cast<int>(w.point_to_line.size()) != s.num_points()) return false;
  for (int p = 0; p < s.num_points(); ++p)
    for (int l = 0; l < s.num_lines(); ++l)
      if (s.incident(p, l) != s.incident(w.line_to_point[l], w.point_to_line[p])) return false;
  return true;
}

CycleBasis perimeter_basis(const EulerianTonnetz& t) {
  std::vector<int> drop = parallel_edges(t);
  drop.push_back(*t.graph.edge_between(t.vertex_of(parse_triad("Em")), t.vertex_of(parse_triad("CM"))));
  return fundamental_basis(spanning_tree(t.graph, drop, t.vertex_of(parse_triad("CM"))));
}

}  // namespace

int main() {
  const EulerianTonnetz t = build_eulerian();

  criterion(1, "Eulerian structure and golden adjacency", [&](Checks& c) {
    c.expect(t.graph.num_vertices() == 24, "24 vertices");
    c.expect(t.graph.num_edges() == 36, "36 edges");
    c.expect(t.graph.regular_degree() == 3, "3-regular");
    c.expect(t.graph.is_properly_bicolored(), "bipartite by quality");
    c.expect(components(t.graph).size() == 1, "connected");
    c.expect(girth(t.graph) == 6, "girth 6");
    std::set<std::pair<std::string, std::string>> built, golden;
    for (int e = 0; e < t.graph.num_edges(); ++e)
      built.insert(std::minmax(t.graph.vertex(t.graph.edge(e).u).label, t.graph.vertex(t.graph.edge(e).v).label));
    for (auto [a, b] : golden_edges()) golden.insert(std::minmax(a, b));
    c.expect(golden.size() == 36 && built == golden, "adjacency equals golden file");
  });

  criterion(2, "Hexacycle and octacycle census", [&](Checks& c) {
    auto h3 = cycles_with(t, 6, 3), h2 = cycles_with(t, 6, 2), o4 = cycles_with(t, 8, 4), o1 = cycles_with(t, 8, 1);
    std::set<Cycle> want, got;
    for (const auto& h : fx::kHexatonic) want.insert(fx::cycle(t, h));
    for (const auto& r : h3) got.insert(r.cycle);
    c.expect(h3.size() == 4, "4 thrice-parallel hexacycles, got " + str(h3.size()));
    c.expect(got == want, "thrice-parallel hexacycles equal the published four");
    c.expect(h2.size() == 12, "12 twice-parallel hexacycles, got " + str(h2.size()));
    c.expect(!cycle_set(h2, [&](const CycleReport& r) { return r.cycle == fx::cycle(t, fx::kTwiceParallelCM); })
                  .empty(),
             "twice-parallel hexacycle through CM, Am, FM present");
    c.expect(o4.size() == 3, "3 four-parallel octacycles, got " + str(o4.size()));
    std::set<int> covered;
    size_t total = 0;
    for (const auto& r : o4) {
      covered.insert(r.cycle.vertices.begin(), r.cycle.vertices.end());
      total += r.cycle.vertices.size();
    }
    c.expect(covered.size() == 24 && total == 24, "octacycles vertex-disjoint and covering");
    c.expect(!cycle_set(o4, [&](const CycleReport& r) { return r.cycle == fx::cycle(t, fx::kOctatonicCM); }).empty(),
             "octatonic cycle through CM present");
    c.expect(o1.size() == 12, "12 once-parallel octacycles, got " + str(o1.size()));
  });

  criterion(3, "Every triad lies on three twice-parallel hexacycles", [&](Checks& c) {
    auto h2 = cycles_with(t, 6, 2);
    for (int v = 0; v < 24; ++v) {
      int n = 0;
      for (const auto& r : h2) n += r.cycle.contains_vertex(v);
      c.expect(n == 3, t.graph.vertex(v).label + " on " + str(n));
    }
  });

  criterion(4, "Splice algebra", [&](Checks& c) {
    auto vec = [&](const fx::Chords& ch) { return CycleVector::from_cycle(t.graph, fx::cycle(t, ch)); };
    c.expect(add(vec(fx::kTwiceParallelCM), vec(fx::kTwiceParallelFM)) == vec(fx::kDecacycle),
             "CM hexacycle + FM hexacycle = decacycle");
    c.expect(add(vec(fx::kDecacycle), vec(fx::kTwiceParallelBbM)) == vec(fx::kTetrakaidecacycle),
             "decacycle + BbM hexacycle = tetrakaidecacycle");
  });

  criterion(5, "Cycle space dimension and perimeter basis", [&](Checks& c) {
    c.expect(cycle_space_dimension(t.graph) == 13, "dimension 13");
    auto b = perimeter_basis(t);
    std::map<int, int> lengths;
    for (const auto& cy : b.cycles) ++lengths[cy.length()];
    c.expect(lengths == std::map<int, int>{{8, 9}, {18, 3}, {24, 1}}, "basis lengths 9x8, 3x18, 1x24");
    int checked = 0;
    for (int len = 6; len <= 14; len += 2)
      for (const Cycle& cy : enumerate_cycles(t.graph, len)) {
        CycleVector v = CycleVector::from_cycle(t.graph, cy);
        if (!(recombine(decompose(v, b), b) == v)) c.expect(false, "round trip of a " + str(len) + "-cycle");
        ++checked;
      }
    c.expect(checked > 0, "census cycles checked");
  });

  criterion(6, "Perimeter is the unique Hamiltonian cycle without parallels", [&](Checks& c) {
    auto par = parallel_edges(t);
    std::set<int> drop(par.begin(), par.end());
    c.expect(drop.size() == 12, "12 parallel edges");
    LabeledGraph g = delete_edges(t.graph, [&](int e, const Edge&) { return drop.count(e) > 0; });
    c.expect(g.regular_degree() == 2 && components(g).size() == 1, "single 2-regular component");
    auto ham = hamiltonian_cycles(g, 10);
    c.expect(ham.size() == 1, "exactly one Hamiltonian cycle, got " + str(ham.size()));
    if (!ham.empty()) c.expect(ham[0] == make_cycle(g, golden_perimeter()), "matches drawn perimeter order");
  });

  criterion(7, "Scales and their triads", [&](Checks& c) {
    auto [x, y, z] = diminished_sevenths();
    c.expect(x == PitchClassSet{0, 3, 6, 9} && y == PitchClassSet{1, 4, 7, 10} && z == PitchClassSet{2, 5, 8, 11},
             "diminished sevenths X, Y, Z");
    auto o = octatonic_scales();
    c.expect(o[0] == PitchClassSet{0, 1, 3, 4, 6, 7, 9, 10}, "O12");
    c.expect(o[1] == PitchClassSet{1, 2, 4, 5, 7, 8, 10, 11}, "O23");
    c.expect(o[2] == PitchClassSet{2, 3, 5, 6, 8, 9, 11, 0}, "O31");
    auto fam = augmented_and_wholetone();
    c.expect(fam.whole_tone[0] == PitchClassSet{0, 2, 4, 6, 8, 10} &&
                 fam.whole_tone[1] == PitchClassSet{1, 3, 5, 7, 9, 11},
             "whole-tone scales W1, W2");
    std::set<Triad> on12, oct;
    for (const auto& tr : triads_in_set(o[0])) on12.insert(tr);
    for (int v : fx::vertices(t, fx::kOctatonicCM)) oct.insert(t.triads[v]);
    c.expect(on12 == oct, "triads of O12 are the CM octacycle");
    std::set<PitchClassSet> hexa, unions;
    for (const auto& h : fam.hexachords)
      if (h != fam.whole_tone[0] && h != fam.whole_tone[1]) hexa.insert(h);
    for (const auto& h : fx::kHexatonic) {
      PitchClassSet u;
      for (int v : fx::vertices(t, h)) u = u | t.triads[v].pitch_classes();
      unions.insert(u);
    }
    c.expect(hexa.size() == 4 && hexa == unions, "augmented-pair hexachords are the hexacycle unions");
  });

  criterion(8, "Pentatonic tonnetz", [&](Checks& c) {
    auto p = build_pentatonic();
    auto ct = configuration_type(p.structure);
    c.expect(ct.to_string() == "{10_3}", "type " + ct.to_string());
    c.expect(ct.flags == 30, "30 flags");
    c.expect(girth(p.graph) == 6, "Levi girth 6");
    c.expect(enumerate_cycles(p.graph, 6).size() == 20, "20 hexacycles");
    auto ham = hamiltonian_cycles(p.graph, 1);
    c.expect(ham.size() == 1 && ham[0].length() == 20, "Hamiltonian cycle found");
    c.expect(witness_ok(p.structure, is_self_dual(p.structure)), "self-dual witness");
  });

  criterion(9, "Hexachordal tonnetz and syntheme tables", [&](Checks& c) {
    auto h = build_hexachordal();
    c.expect(h.duads.size() == 15 && h.synthemes.size() == 15 && h.totals.size() == 6, "15 duads, 15 synthemes, 6 totals");
    auto tables = syntheme_tables(h);
    auto same = [](const std::vector<TableRow>& got, const std::vector<fx::Row>& want, bool as_sets) {
      if (got.size() != want.size()) return false;
      for (size_t i = 0; i < want.size(); ++i) {
        auto a = got[i].cells, b = want[i].cells;
        if (as_sets) std::sort(a.begin(), a.end()), std::sort(b.begin(), b.end());
        if (got[i].key != want[i].key || a != b) return false;
      }
      return true;
    };
    c.expect(same(tables.letters_to_numbers, fx::kLettersToNumbers, false), "letter duads to number synthemes");
    c.expect(same(tables.numbers_to_letters, fx::kNumbersToLetters, false), "number duads to letter synthemes");
    c.expect(same(tables.letter_totals, fx::kLetterTotals, false), "letters as totals");
    c.expect(same(tables.number_totals, fx::kNumberTotals, true), "numbers as letter totals");
    c.expect(h.graph.num_vertices() == 30 && h.graph.num_edges() == 45, "Levi graph 30 / 45");
    c.expect(girth(h.graph) == 8 && h.graph.regular_degree() == 3, "girth 8, 3-regular");
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = i + 1; j < 6; ++j) {
        std::vector<int> common;
        std::set_intersection(h.totals[i].synthemes.begin(), h.totals[i].synthemes.end(),
                              h.totals[j].synthemes.begin(), h.totals[j].synthemes.end(), std::back_inserter(common));
        c.expect(common.size() == 1, std::string("totals ") + h.totals[i].letter + h.totals[j].letter);
      }
    c.expect(witness_ok(h.structure, is_self_dual(h.structure)), "self-dual witness");
  });

  criterion(10, "Exact projective constructions", [&](Checks& c) {
    int passed = 0;
    std::uint64_t seed = 0;
    for (; passed < kDesarguesInstances && seed < 10 * kDesarguesInstances; ++seed) {
      std::mt19937_64 rng(seed);
      RVec V = random_integer_vector(rng, 3), P = random_integer_vector(rng, 3), Q = random_integer_vector(rng, 3),
           R = random_integer_vector(rng, 3);
      std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
      Rational prm[3];
      for (auto& x : prm) x = Rational(num(rng), den(rng));
      // Oracle: build all ten points and lines by cross products and count
      // incidences. Exactly 30 means general position; more is special position.
      auto lerp = [](const Rational& k, const RVec& a, const RVec& b) {
        RVec out(3);
        for (int i = 0; i < 3; ++i) out[i] = (1 - k) * a[i] + k * b[i];
        return out;
      };
      RVec S = lerp(prm[0], V, P), T = lerp(prm[1], V, Q), U = lerp(prm[2], V, R);
      RVec X = cross(cross(Q, R), cross(T, U)), Y = cross(cross(P, R), cross(S, U)),
           Z = cross(cross(P, Q), cross(S, T));
      std::vector<RVec> pts = {P, Q, R, S, T, U, V, X, Y, Z};
      if (std::any_of(pts.begin(), pts.end(), [](const RVec& w) { return w == RVec(3, 0); })) continue;
      std::vector<RVec> lines = {cross(P, R), cross(P, Q), cross(Q, R), cross(S, U), cross(S, T),
                                 cross(T, U), cross(P, S), cross(Q, T), cross(R, U), cross(X, Y)};
      if (std::any_of(lines.begin(), lines.end(), [](const RVec& w) { return w == RVec(3, 0); })) continue;
      c.expect(dot(Z, lines[9]) == 0, "X, Y, Z collinear at seed " + std::to_string(seed));
      int incidences = 0;
      for (const auto& pt : pts)
        for (const auto& ln : lines) incidences += dot(pt, ln) == 0;
      if (incidences != 30) continue;
      Realization r = desargues_instance(V, P, Q, R, prm[0], prm[1], prm[2]);
      auto rep = verify_realization(r);
      bool same_axis = r.points.at(*r.structure.find_point("X")) == ProjFlat::point(X);
      c.expect(same_axis && rep.ok() && rep.flags_ok == 30, "Desargues instance at seed " + std::to_string(seed));
      ++passed;
    }
    c.expect(passed == kDesarguesInstances, "100 Desargues instances, got " + str(passed));

    Realization cay = cayley_pentatonic({make_rvec({1, 0, 0, 0}), make_rvec({0, 1, 0, 0}), make_rvec({0, 0, 1, 0}),
                                         make_rvec({0, 0, 0, 1}), make_rvec({1, 1, 1, 1})},
                                        make_rvec({1, 2, 3, -7}));
    Realization cre = cremona_richmond({make_rvec({1, 0, 0, 0, 0}), make_rvec({0, 1, 0, 0, 0}),
                                        make_rvec({0, 0, 1, 0, 0}), make_rvec({0, 0, 0, 1, 0}),
                                        make_rvec({0, 0, 0, 0, 1}), make_rvec({1, 1, 1, 1, 1})});
    c.expect(cay.structure == build_pentatonic().structure, "Cayley labels match pentatonic build");
    c.expect(cre.structure == build_hexachordal().structure, "Cremona-Richmond labels match hexachordal build");
    for (auto [src, flags, name] : {std::tuple{&cay, 30, "pentatonic"}, std::tuple{&cre, 45, "Cremona-Richmond"}}) {
      auto rep = verify_realization(*src);
      c.expect(rep.ok() && rep.flags_ok == flags, std::string(name) + " exact flags " + str(rep.flags_ok));
      auto proj = project_to_plane(*src, 0);
      auto prep = verify_realization(proj.image);
      c.expect(proj.image.ambient == 2 && prep.ok() && prep.flags_ok == flags,
               std::string(name) + " projection faithful, flags " + str(prep.flags_ok));
    }
  });

  criterion(11, "D222 numeric realization (best effort)", [&](Checks& c) {
    D222Options opt;
    opt.tol = kFlagTol;
    opt.separation = kNonflagSep;
    auto res = realize_d222_numeric(0, opt);
    auto rep = verify_realization(res.realization, kFlagTol, kNonflagSep);
    c.expect(res.realization.structure == t.structure, "structure is the Eulerian {12_3}");
    c.expect(rep.ok() && rep.flags_ok == 36 && rep.nonflags_ok == 108, "verify_realization confirms");
    c.expect(rep.max_flag_residual <= kFlagTol, "max flag residual " + std::to_string(rep.max_flag_residual));
    c.expect(rep.min_nonflag_residual >= kNonflagSep, "min non-flag residual " + std::to_string(rep.min_nonflag_residual));
  });

  criterion(12, "Archimedean tonnetz", [&](Checks& c) {
    auto comps = build_archimedean();
    for (const auto& comp : comps)
      c.expect(comp.graph.num_vertices() == 12 && comp.graph.num_edges() == 18 && comp.graph.regular_degree() == 3 &&
                   girth(comp.graph) == 4,
               "component 12 / 18 / 3-regular / girth 4");
    auto full = build_archimedean_full();
    auto nb = [&](const char* name) {
      std::set<std::string> out;
      for (int w : full.graph.neighbors(full.vertex_of(parse_triad(name)))) out.insert(full.graph.vertex(w).label);
      return out;
    };
    c.expect(nb("CM") == std::set<std::string>{"Fm", "Gm", "C#m"}, "CM neighbours");
    c.expect(nb("Cm") == std::set<std::string>{"FM", "GM", "BM"}, "Cm neighbours");
    c.expect(nb("Em") == std::set<std::string>{"AM", "BM", "EbM"}, "Em neighbours");
    bool girth_error = false;
    try {
      from_levi(comps[0].graph);
    } catch (const ConfigurationError& e) {
      girth_error = std::string(e.what()).find("girth") != std::string::npos;
    }
    c.expect(girth_error, "from_levi raises the girth error");
  });

  criterion(13, "Progression and Parsifal fixtures", [&](Checks& c) {
    auto in_family = [&](const fx::Chords& prog, int len, int p) {
      std::string s;
      for (const auto& x : prog) s += x + " ";
      auto rep = validate_progression(t, parse_progression(s));
      if (!rep.is_path) return false;
      return std::any_of(rep.containing_cycles.begin(), rep.containing_cycles.end(),
                         [&](const CycleReport& r) { return r.length == len && r.p_count == p; });
    };
    c.expect(in_family(fx::kWagner, 6, 3), "Wagner path inside a (6, p=3) cycle");
    c.expect(in_family(fx::kChopin, 10, 2), "Chopin path inside a (10, p=2) cycle");
    c.expect(in_family(fx::kTchaikovsky, 6, 2), "Tchaikovsky path inside a (6, p=2) cycle");

    auto pars = parsifal_cycle(t);
    c.expect(pars.length == 10 && pars.p_count == 4 && pars.cycle == fx::cycle(t, fx::kParsifal),
             "Parsifal simple 10-cycle with p=4");

    Cycle per = perimeter_cycle(t);
    auto v = [&](const char* n) { return t.vertex_of(parse_triad(n)); };
    c.expect(polar_opposite(per, v("Bbm")) == v("Em"), "Bbm opposite Em on the perimeter");
    c.expect(polar_opposite(per, v("Gm")) == v("C#m"), "Gm opposite C#m on the perimeter");
    auto chopin = validate_progression(t, parse_progression("G#m BM Ebm EbM Gm BbM"));
    bool polar = false;
    for (const auto& r : chopin.containing_cycles)
      if (r.length == 10) polar = polar_opposite(r.cycle, v("G#m")) == v("BbM");
    c.expect(polar, "G#m opposite BbM on the decacycle");
    auto sp = equally_spaced(per, fx::vertices(t, {"Bbm", "C#m", "Em", "Gm"}));
    c.expect(sp.equal && sp.gap == 6, "Bbm, C#m, Em, Gm equally spaced with gap 6");
  });

  criterion(14, "Semiregular tiling", [&](Checks& c) {
    auto patch = generate_tiling(build_archimedean()[0], 1);
    c.expect(patch.count(FaceKind::Dodecagon) == 7, "7 dodecagons");
    int interior = 0;
    for (int vtx = 0; vtx < static_cast<int>(patch.vertices.size()); ++vtx) {
      if (!patch.is_interior(vtx)) continue;
      ++interior;
      std::multiset<int> kinds;
      for (int f : patch.faces_at(vtx)) kinds.insert(static_cast<int>(patch.faces[f].kind));
      c.expect(kinds == std::multiset<int>{4, 6, 12}, "vertex configuration at " + str(vtx));
    }
    c.expect(interior > 0, "interior vertices present");
    for (auto [a, b] : patch.edges()) {
      double len = std::hypot(patch.vertices[a].x - patch.vertices[b].x, patch.vertices[a].y - patch.vertices[b].y);
      if (std::abs(len - 1.0) > kEdgeTol) c.expect(false, "edge length " + std::to_string(len));
    }
    c.expect(import_json(nlohmann::json::parse(export_json(patch).dump())) == patch, "JSON round trip");
    std::string svg = export_svg(patch);
    size_t polygons = 0;
    for (size_t pos = 0; (pos = svg.find("<polygon", pos)) != std::string::npos; ++pos) ++polygons;
    c.expect(polygons == patch.faces.size(), "SVG carries every face");
  });

  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}

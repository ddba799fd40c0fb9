#include "tonnetz/analysis.h"

#include <algorithm>
#include <set>

namespace tonnetz {

namespace {

constexpr int kMaxCensusLength = 14;

std::string length_word(int length) {
  switch (length) {
    case 4: return "quadracycle";
    case 6: return "hexacycle";
    case 8: return "octacycle";
    case 10: return "decacycle";
    case 12: return "dodecacycle";
    case 14: return "tetrakaidecacycle";
    case 16: return "hexakaidecacycle";
    case 18: return "octakaidecacycle";
    case 20: return "icosacycle";
    case 22: return "icosidicycle";
    case 24: return "icositetracycle";
    default: return std::to_string(length) + "-cycle";
  }
}

std::string nickname(int length, int p) {
  if (length == 6 && p == 2) return "straight bow-tie";
  if (length == 8 && p == 4) return "four-cornered hat";
  if (length == 8 && p == 1) return "octabeanie";
  if (length == 10 && p == 2) return "floppy bow-tie";
  if (length == 18 && p == 1) return "fishbowl";
  return "";
}

std::vector<Cycle> cycles_up_to(const LabeledGraph& g, int max_length) {
  std::vector<Cycle> out;
  const bool even_only = g.is_properly_bicolored();
  for (int len = 3; len <= max_length; ++len) {
    if (even_only && len % 2) continue;
    auto cs = enumerate_cycles(g, len);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

}  // namespace

int p_count(const EulerianTonnetz& t, const Cycle& c) {
  // The stored edge ids must be exactly the edges along the walk in this graph.
  std::vector<int> along;
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    int a = c.vertices[i], b = c.vertices[(i + 1) % len];
    auto e = a < t.graph.num_vertices() && b < t.graph.num_vertices() ? t.graph.edge_between(a, b)
                                                                      : std::nullopt;
    if (!e) throw GraphError("cycle does not lie in the Eulerian tonnetz");
    along.push_back(*e);
  }
  std::sort(along.begin(), along.end());
  if (along != c.edge_ids) throw GraphError("cycle does not lie in the Eulerian tonnetz");
  int n = 0;
  for (int e : c.edge_ids)
    if (classify_edge(t, e) == EdgeClass::Parallel) ++n;
  return n;
}

std::string family_name(int length, int p) {
  std::string name = std::to_string(p) + "p-" + length_word(length);
  std::string nick = nickname(length, p);
  if (!nick.empty()) name += " (" + nick + ")";
  return name;
}

CycleReport report_cycle(const EulerianTonnetz& t, const Cycle& c) {
  CycleReport r;
  r.cycle = c;
  r.length = c.length();
  r.p_count = p_count(t, c);
  r.family = family_name(r.length, r.p_count);
  return r;
}

std::vector<CensusRow> census(const EulerianTonnetz& t, int max_length) {
  max_length = std::min(max_length, kMaxCensusLength);
  std::map<std::pair<int, int>, int> counts;
  for (const Cycle& c : cycles_up_to(t.graph, max_length)) ++counts[{c.length(), -p_count(t, c)}];
  std::vector<CensusRow> rows;
  for (auto [key, n] : counts) rows.push_back(CensusRow{key.first, -key.second, n});
  return rows;
}

std::vector<CycleReport> cycles_with(const EulerianTonnetz& t, int length, std::optional<int> p) {
  std::vector<CycleReport> out;
  for (const Cycle& c : enumerate_cycles(t.graph, length)) {
    CycleReport r = report_cycle(t, c);
    if (!p || r.p_count == *p) out.push_back(std::move(r));
  }
  return out;
}

Cycle perimeter_cycle(const EulerianTonnetz& t) {
  auto par = parallel_edges(t);
  LabeledGraph rest = delete_edges(t.graph, [&](int e, const Edge&) {
    return std::binary_search(par.begin(), par.end(), e);
  });
  auto hs = hamiltonian_cycles(rest, 2);
  if (hs.size() != 1) throw GraphError("removing parallel edges did not leave a single Hamiltonian cycle");
  return make_cycle(t.graph, hs.front().vertices);
}

ProgressionReport validate_progression(const EulerianTonnetz& t, const std::vector<Triad>& prog,
                                       int max_length) {
  if (prog.empty()) throw GraphError("empty progression");
  ProgressionReport r;
  r.chords = prog;
  bool all_adjacent = true;
  for (size_t i = 0; i + 1 < prog.size(); ++i) {
    ProgressionStep s{prog[i], prog[i + 1], false, std::nullopt};
    if (prog[i].quality != prog[i + 1].quality && shared_tones(prog[i], prog[i + 1]) == 2) {
      s.adjacent = true;
      s.edge_class = classify_pair(prog[i], prog[i + 1]);
    }
    all_adjacent = all_adjacent && s.adjacent;
    r.steps.push_back(s);
  }
  std::set<Triad> distinct(prog.begin(), prog.end());
  r.is_path = all_adjacent && distinct.size() == prog.size();
  if (!r.is_path) return r;

  std::vector<int> verts;
  for (const Triad& c : prog) verts.push_back(t.vertex_of(c));
  std::vector<int> path_edges;
  for (size_t i = 0; i + 1 < verts.size(); ++i) path_edges.push_back(*t.graph.edge_between(verts[i], verts[i + 1]));
  for (const Cycle& c : cycles_up_to(t.graph, std::min(max_length, kMaxCensusLength))) {
    bool inside = c.contains_vertex(verts.front());
    for (int e : path_edges) inside = inside && c.contains_edge(e);
    if (inside) r.containing_cycles.push_back(report_cycle(t, c));
  }
  return r;
}

int polar_opposite(const Cycle& c, int v) {
  if (c.length() % 2) throw GraphError("polar opposition needs an even cycle");
  int pos = c.position(v);
  if (pos < 0) throw GraphError("vertex is not on the cycle");
  return c.vertices[(pos + c.length() / 2) % c.length()];
}

Spacing equally_spaced(const Cycle& c, const std::vector<int>& vs) {
  if (vs.empty()) throw GraphError("no vertices to space");
  std::vector<int> pos;
  for (int v : vs) {
    int p = c.position(v);
    if (p < 0) throw GraphError("vertex is not on the cycle");
    pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::vector<int> gaps;
  for (size_t i = 0; i < pos.size(); ++i)
    gaps.push_back(i + 1 < pos.size() ? pos[i + 1] - pos[i] : c.length() - pos[i] + pos.front());
  Spacing s;
  s.equal = std::all_of(gaps.begin(), gaps.end(), [&](int g) { return g == gaps.front(); });
  if (s.equal) s.gap = gaps.front();
  return s;
}

std::vector<Triad> parsifal_chords() {
  return parse_progression("Bbm GbM F#m AM C#m EM Em GM Gm BbM");
}

CycleReport parsifal_cycle(const EulerianTonnetz& t) {
  std::vector<int> walk;
  for (const Triad& c : parsifal_chords()) walk.push_back(t.vertex_of(c));
  return report_cycle(t, make_cycle(t.graph, walk));
}

std::vector<Triad> triads_in_tetrachord(const PitchClassSet& s) {
  if (s.size() != 4) throw GraphError("a tetrachord has exactly four pitch classes");
  return triads_in_set(s);
}

}  // namespace tonnetz

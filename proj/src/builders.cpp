#include "tonnetz/builders.h"

#include <algorithm>
#include <functional>
#include <set>

namespace tonnetz {

int TriadGraph::vertex_of(const Triad& t) const {
  auto it = std::find(triads.begin(), triads.end(), t);
  if (it == triads.end()) throw GraphError("triad " + t.name() + " is not in this graph");
  return static_cast<int>(it - triads.begin());
}

namespace {

Color color_of(const Triad& t) {
  return t.quality == Quality::Major ? Color::White : Color::Black;
}

TriadGraph triad_graph(const std::vector<Triad>& order, int shared) {
  TriadGraph g;
  g.triads = order;
  for (const Triad& t : order) g.graph.add_vertex(t.name(), color_of(t));
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = a + 1; b < order.size(); ++b)
      if (order[a].quality != order[b].quality && shared_tones(order[a], order[b]) == shared)
        g.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

}  // namespace

EulerianTonnetz build_eulerian() {
  EulerianTonnetz t;
  static_cast<TriadGraph&>(t) = triad_graph(all_triads(), 2);
  std::vector<std::string> points, lines;
  std::vector<std::vector<int>> line_points(12);
  for (int r = 0; r < 12; ++r) {
    points.push_back(Triad::from_index(r).name());
    lines.push_back(Triad::from_index(12 + r).name());
  }
  for (const Edge& e : t.graph.edges()) line_points[e.v - 12].push_back(e.u);
  t.structure = IncidenceStructure(points, lines, line_points);
  return t;
}

std::array<TriadGraph, 2> build_archimedean() {
  std::array<TriadGraph, 2> out;
  for (int c = 0; c < 2; ++c) {
    std::vector<Triad> circle;
    for (int p = 0; p < 12; ++p)
      circle.push_back(Triad{PitchClass(c + 5 * p), p % 2 == 0 ? Quality::Major : Quality::Minor});
    out[c] = triad_graph(circle, 1);
  }
  return out;
}

TriadGraph build_archimedean_full() { return triad_graph(all_triads(), 1); }

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Parallel: return "parallel";
    case EdgeClass::Relative: return "relative";
    case EdgeClass::LeadingTone: return "leading-tone";
  }
  return "?";
}

EdgeClass classify_pair(const Triad& a, const Triad& b) {
  if (a.quality == b.quality || shared_tones(a, b) != 2)
    throw GraphError(a.name() + " and " + b.name() + " are not joined in the Eulerian tonnetz");
  const Triad& major = a.quality == Quality::Major ? a : b;
  const Triad& minor = a.quality == Quality::Major ? b : a;
  int offset = PitchClass(minor.root.value() - major.root.value()).value();
  if (offset == 0) return EdgeClass::Parallel;
  if (offset == 9) return EdgeClass::Relative;
  return EdgeClass::LeadingTone;  // offset 4; the neighbour rule admits nothing else
}

EdgeClass classify_edge(const TriadGraph& g, int edge_id) {
  const Edge& e = g.graph.edge(edge_id);
  return classify_pair(g.triads.at(e.u), g.triads.at(e.v));
}

std::vector<int> parallel_edges(const TriadGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.graph.num_edges(); ++e)
    if (classify_edge(g, e) == EdgeClass::Parallel) out.push_back(e);
  return out;
}

namespace {

void require_distinct(const std::vector<std::string>& labels, size_t n, const char* what) {
  if (labels.size() != n)
    throw ConfigurationError(std::string(what) + " needs exactly " + std::to_string(n) + " labels");
  std::set<std::string> s(labels.begin(), labels.end());
  if (s.size() != n) throw ConfigurationError(std::string(what) + " labels must be distinct");
}

}  // namespace

PentatonicTonnetz build_pentatonic(const std::vector<std::string>& labels) {
  require_distinct(labels, 5, "pentatonic scale");
  PentatonicTonnetz t;
  t.labels = labels;
  std::vector<std::array<int, 2>> duads;
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      duads.push_back({i, j});
      for (int k = j + 1; k < 5; ++k) triples.push_back({i, j, k});
    }
  std::sort(triples.begin(), triples.end());
  std::vector<std::string> points, lines;
  for (auto d : duads) points.push_back(labels[d[0]] + labels[d[1]]);
  std::vector<std::vector<int>> line_points;
  for (auto tr : triples) {
    lines.push_back(labels[tr[0]] + labels[tr[1]] + labels[tr[2]]);
    std::vector<int> pts;
    for (size_t p = 0; p < duads.size(); ++p)
      if (std::count(tr.begin(), tr.end(), duads[p][0]) && std::count(tr.begin(), tr.end(), duads[p][1]))
        pts.push_back(static_cast<int>(p));
    line_points.push_back(pts);
  }
  t.structure = IncidenceStructure(points, lines, line_points);
  t.graph = to_levi(t.structure);
  return t;
}

bool Syntheme::contains(const Duad& d) const {
  return std::find(duads.begin(), duads.end(), d) != duads.end();
}

bool Syntheme::shares_duad(const Syntheme& o) const {
  for (const Duad& d : duads)
    if (o.contains(d)) return true;
  return false;
}

std::string HexachordalTonnetz::duad_label(const Duad& d) const {
  return labels[d.i] + labels[d.j];
}

std::string HexachordalTonnetz::syntheme_label(int s) const {
  const Syntheme& sy = synthemes.at(s);
  return duad_label(sy.duads[0]) + "," + duad_label(sy.duads[1]) + "," + duad_label(sy.duads[2]);
}

int HexachordalTonnetz::duad_index(const Duad& d) const {
  Duad n{std::min(d.i, d.j), std::max(d.i, d.j)};
  auto it = std::find(duads.begin(), duads.end(), n);
  if (it == duads.end()) throw ConfigurationError("no such duad");
  return static_cast<int>(it - duads.begin());
}

int HexachordalTonnetz::syntheme_index(const Syntheme& s) const {
  auto it = std::find(synthemes.begin(), synthemes.end(), s);
  if (it == synthemes.end()) throw ConfigurationError("no such syntheme");
  return static_cast<int>(it - synthemes.begin());
}

HexachordalTonnetz build_hexachordal(const std::vector<std::string>& labels) {
  require_distinct(labels, 6, "hexachord");
  HexachordalTonnetz h;
  h.labels = labels;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) h.duads.push_back({i, j});

  // Element 0 is paired first, so the three duads come out ascending.
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != a) rest.push_back(x);
    for (int b = 1; b < 4; ++b) {
      std::vector<int> last;
      for (size_t k = 1; k < 4; ++k)
        if (static_cast<int>(k) != b) last.push_back(rest[k]);
      h.synthemes.push_back(Syntheme{{Duad{0, a}, Duad{rest[0], rest[b]}, Duad{last[0], last[1]}}});
    }
  }
  std::sort(h.synthemes.begin(), h.synthemes.end());

  std::vector<std::array<int, 5>> totals;
  std::vector<int> pick;
  std::function<void(int)> grow = [&](int from) {
    if (pick.size() == 5) {
      std::array<int, 5> t;
      std::copy(pick.begin(), pick.end(), t.begin());
      totals.push_back(t);
      return;
    }
    for (int s = from; s < static_cast<int>(h.synthemes.size()); ++s) {
      bool clash = false;
      for (int q : pick)
        if (h.synthemes[s].shares_duad(h.synthemes[q])) clash = true;
      if (clash) continue;
      pick.push_back(s);
      grow(s + 1);
      pick.pop_back();
    }
  };
  grow(0);

  const std::array<int, 5> first = totals.front();
  h.totals.push_back(Total{'a', first});
  for (int pos = 0; pos < 5; ++pos)
    for (size_t t = 1; t < totals.size(); ++t)
      if (std::count(totals[t].begin(), totals[t].end(), first[pos]))
        h.totals.push_back(Total{static_cast<char>('b' + pos), totals[t]});

  std::vector<std::string> points, lines;
  for (const Duad& d : h.duads) points.push_back(h.duad_label(d));
  std::vector<std::vector<int>> line_points;
  for (int s = 0; s < static_cast<int>(h.synthemes.size()); ++s) {
    lines.push_back(h.syntheme_label(s));
    std::vector<int> pts;
    for (const Duad& d : h.synthemes[s].duads) pts.push_back(h.duad_index(d));
    line_points.push_back(pts);
  }
  h.structure = IncidenceStructure(points, lines, line_points);
  h.graph = to_levi(h.structure);
  return h;
}

SynthemeTables syntheme_tables(const HexachordalTonnetz& h) {
  auto letter = [&](int t) { return std::string(1, h.totals[t].letter); };
  auto shared = [&](int a, int b) {
    for (int s : h.totals[a].synthemes)
      if (std::count(h.totals[b].synthemes.begin(), h.totals[b].synthemes.end(), s)) return s;
    throw ConfigurationError("totals share no syntheme");
  };
  // The two totals through a syntheme, as a letter duad.
  auto letters_of = [&](int s) {
    std::string out;
    for (int t = 0; t < 6; ++t)
      if (std::count(h.totals[t].synthemes.begin(), h.totals[t].synthemes.end(), s)) out += letter(t);
    return out;
  };
  auto letter_syntheme = [&](const Duad& d) {
    std::vector<std::string> parts;
    for (int s = 0; s < static_cast<int>(h.synthemes.size()); ++s)
      if (h.synthemes[s].contains(d)) parts.push_back(letters_of(s));
    std::sort(parts.begin(), parts.end());
    return parts;
  };

  SynthemeTables tb;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      TableRow row{letter(a) + letter(b), {}};
      for (const Duad& d : h.synthemes[shared(a, b)].duads) row.cells.push_back(h.duad_label(d));
      tb.letters_to_numbers.push_back(row);
    }
  for (const Duad& d : h.duads) tb.numbers_to_letters.push_back({h.duad_label(d), letter_syntheme(d)});
  for (int a = 0; a < 6; ++a) {
    TableRow row{letter(a), {}};
    for (int b = 0; b < 6; ++b)
      if (b != a) row.cells.push_back(h.syntheme_label(shared(a, b)));
    tb.letter_totals.push_back(row);
  }
  for (int x = 0; x < 6; ++x) {
    TableRow row{h.labels[x], {}};
    for (int y = 0; y < 6; ++y) {
      if (y == x) continue;
      auto parts = letter_syntheme(Duad{std::min(x, y), std::max(x, y)});
      row.cells.push_back(parts[0] + "," + parts[1] + "," + parts[2]);
    }
    tb.number_totals.push_back(row);
  }
  return tb;
}

}  // namespace tonnetz

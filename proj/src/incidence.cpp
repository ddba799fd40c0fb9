#include "tonnetz/incidence.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace tonnetz {

IncidenceStructure::IncidenceStructure(std::vector<std::string> points,
                                       std::vector<std::string> lines,
                                       std::vector<std::vector<int>> line_points)
    : points_(std::move(points)), lines_(std::move(lines)), line_points_(std::move(line_points)) {
  if (lines_.size() != line_points_.size())
    throw ConfigurationError("line labels and point lists differ in length");
  for (auto& pts : line_points_) {
    for (int p : pts)
      if (p < 0 || p >= num_points()) throw ConfigurationError("point id out of range");
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw ConfigurationError("line lists a point twice");
  }
}

std::vector<int> IncidenceStructure::lines_through(int p) const {
  std::vector<int> out;
  for (int l = 0; l < num_lines(); ++l)
    if (incident(p, l)) out.push_back(l);
  return out;
}

bool IncidenceStructure::incident(int p, int l) const {
  const auto& pts = line_points_.at(l);
  return std::binary_search(pts.begin(), pts.end(), p);
}

std::vector<Flag> IncidenceStructure::flags() const {
  std::vector<Flag> out;
  for (int p = 0; p < num_points(); ++p)
    for (int l : lines_through(p)) out.push_back(Flag{p, l});
  return out;
}

int IncidenceStructure::num_flags() const {
  int n = 0;
  for (const auto& pts : line_points_) n += static_cast<int>(pts.size());
  return n;
}

std::optional<int> IncidenceStructure::find_point(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<int>(it - points_.begin());
}

std::optional<int> IncidenceStructure::find_line(const std::string& label) const {
  auto it = std::find(lines_.begin(), lines_.end(), label);
  if (it == lines_.end()) return std::nullopt;
  return static_cast<int>(it - lines_.begin());
}

bool IncidenceStructure::operator==(const IncidenceStructure& o) const {
  return points_ == o.points_ && lines_ == o.lines_ && line_points_ == o.line_points_;
}

ValidationReport validate(const IncidenceStructure& s) {
  ValidationReport r;
  for (int a = 0; a < s.num_lines(); ++a)
    for (int b = a + 1; b < s.num_lines(); ++b) {
      std::vector<int> common;
      const auto& pa = s.points_on(a);
      const auto& pb = s.points_on(b);
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                            std::back_inserter(common));
      if (common.size() > 1) {
        std::ostringstream msg;
        msg << "lines " << s.line_label(a) << " and " << s.line_label(b) << " share "
            << common.size() << " points:";
        for (int p : common) msg << ' ' << s.point_label(p);
        r.violations.push_back(msg.str());
      }
    }
  // Two points on two common lines is the same failure seen from the other side;
  // list it too so reports name both views.
  for (int p = 0; p < s.num_points(); ++p)
    for (int q = p + 1; q < s.num_points(); ++q) {
      int joint = 0;
      for (int l = 0; l < s.num_lines(); ++l)
        if (s.incident(p, l) && s.incident(q, l)) ++joint;
      if (joint > 1) {
        std::ostringstream msg;
        msg << "points " << s.point_label(p) << " and " << s.point_label(q) << " lie on "
            << joint << " common lines";
        r.violations.push_back(msg.str());
      }
    }
  r.valid = r.violations.empty();
  return r;
}

std::string ConfigurationType::to_string() const {
  std::ostringstream out;
  if (symmetric()) out << '{' << m << '_' << r << '}';
  else out << '{' << m << '_' << r << ", " << n << '_' << k << '}';
  return out.str();
}

ConfigurationType configuration_type(const IncidenceStructure& s) {
  ValidationReport v = validate(s);
  if (!v.valid) throw ConfigurationError("incidence axioms fail: " + v.violations.front());
  std::map<int, int> point_deg, line_deg;
  for (int p = 0; p < s.num_points(); ++p) ++point_deg[static_cast<int>(s.lines_through(p).size())];
  for (int l = 0; l < s.num_lines(); ++l) ++line_deg[static_cast<int>(s.points_on(l).size())];
  if (point_deg.size() != 1 || line_deg.size() != 1) {
    std::ostringstream msg;
    msg << "not a configuration; point degrees";
    for (auto [d, c] : point_deg) msg << ' ' << d << 'x' << c;
    msg << ", line sizes";
    for (auto [d, c] : line_deg) msg << ' ' << d << 'x' << c;
    throw ConfigurationError(msg.str());
  }
  ConfigurationType t;
  t.m = s.num_points();
  t.r = point_deg.begin()->first;
  t.n = s.num_lines();
  t.k = line_deg.begin()->first;
  t.flags = s.num_flags();
  t.graph_like = t.k == 2;
  t.fundamental_bound = t.m >= t.r * (t.k - 1) + 1;
  return t;
}

LabeledGraph to_levi(const IncidenceStructure& s) {
  LabeledGraph g;
  for (const auto& p : s.point_labels()) g.add_vertex(p, Color::White);
  for (const auto& l : s.line_labels()) g.add_vertex(l, Color::Black);
  const int m = s.num_points();
  for (int p = 0; p < m; ++p)
    for (int l : s.lines_through(p)) g.add_edge(p, m + l);
  return g;
}

IncidenceStructure from_levi(const LabeledGraph& g) {
  if (!g.is_properly_bicolored())
    throw ConfigurationError("not a configuration: graph lacks a proper white/black colouring");
  if (auto gi = girth(g); gi && *gi < 6)
    throw ConfigurationError("not a configuration: girth " + std::to_string(*gi) +
                             " is below 6, so two lines meet twice");
  std::vector<int> point_id(g.num_vertices(), -1), line_id(g.num_vertices(), -1);
  std::vector<std::string> points, lines;
  for (const Vertex& v : g.vertices()) {
    if (v.color == Color::White) {
      point_id[v.id] = static_cast<int>(points.size());
      points.push_back(v.label);
    } else {
      line_id[v.id] = static_cast<int>(lines.size());
      lines.push_back(v.label);
    }
  }
  std::vector<std::vector<int>> line_points(lines.size());
  for (const Edge& e : g.edges()) {
    int w = point_id[e.u] >= 0 ? e.u : e.v;
    int b = e.other(w);
    line_points[line_id[b]].push_back(point_id[w]);
  }
  return IncidenceStructure(points, lines, line_points);
}

IncidenceStructure dual(const IncidenceStructure& s) {
  std::vector<std::vector<int>> lp(s.num_points());
  for (int p = 0; p < s.num_points(); ++p) lp[p] = s.lines_through(p);
  return IncidenceStructure(s.line_labels(), s.point_labels(), lp);
}

namespace {

std::vector<std::vector<int>> distance_profiles(const LabeledGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> prof(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    for (int d : dist) {
      int slot = d < 0 ? 0 : d + 1;
      if (static_cast<int>(prof[s].size()) <= slot) prof[s].resize(slot + 1, 0);
      ++prof[s][slot];
    }
  }
  return prof;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  auto pa = distance_profiles(a), pb = distance_profiles(b);

  // Visit order: BFS within each component so most vertices have a mapped neighbour.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : a.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }

  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(size_t)> search = [&](size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    std::vector<int> candidates;
    int anchor = -1;
    for (int w : a.neighbors(v))
      if (map[w] >= 0) {
        anchor = w;
        break;
      }
    if (anchor >= 0) candidates = b.neighbors(map[anchor]);
    else for (int x = 0; x < n; ++x) candidates.push_back(x);
    for (int x : candidates) {
      if (used[x]) continue;
      if (a.vertex(v).color != b.vertex(x).color) continue;
      if (a.degree(v) != b.degree(x) || pa[v] != pb[x]) continue;
      bool ok = true;
      for (int w = 0; w < n && ok; ++w)
        if (map[w] >= 0 && a.multiplicity(v, w) != b.multiplicity(x, map[w])) ok = false;
      if (!ok) continue;
      map[v] = x;
      used[x] = 1;
      if (search(i + 1)) return true;
      map[v] = -1;
      used[x] = 0;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

SelfDuality is_self_dual(const IncidenceStructure& s) {
  SelfDuality r;
  if (s.num_points() != s.num_lines()) return r;
  IncidenceStructure d = dual(s);
  auto iso = find_isomorphism(to_levi(s), to_levi(d));
  if (!iso) return r;
  const int m = s.num_points();
  r.self_dual = true;
  // White vertices of the dual's Levi graph are the original lines.
  for (int p = 0; p < m; ++p) r.point_to_line.push_back((*iso)[p]);
  for (int l = 0; l < m; ++l) r.line_to_point.push_back((*iso)[m + l] - m);
  return r;
}

}  // namespace tonnetz

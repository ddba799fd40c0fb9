#include "tonnetz/graph.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace tonnetz {

int LabeledGraph::add_vertex(std::string label, Color color) {
  int id = num_vertices();
  vertices_.push_back(Vertex{id, std::move(label), color});
  incident_.emplace_back();
  return id;
}

int LabeledGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw GraphError("edge endpoint out of range");
  int id = num_edges();
  edges_.push_back(Edge{u, v});
  incident_[u].push_back(id);
  if (v != u) incident_[v].push_back(id);
  return id;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int e : incident_.at(v)) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> LabeledGraph::regular_degree() const {
  if (vertices_.empty()) return std::nullopt;
  int d = degree(0);
  for (int v = 1; v < num_vertices(); ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::optional<int> LabeledGraph::find(const std::string& label) const {
  for (const Vertex& v : vertices_)
    if (v.label == label) return v.id;
  return std::nullopt;
}

int LabeledGraph::at(const std::string& label) const {
  auto v = find(label);
  if (!v) throw GraphError("no vertex labelled '" + label + "'");
  return *v;
}

std::optional<int> LabeledGraph::edge_between(int u, int v) const {
  for (int e : incident_.at(u))
    if (edges_[e].other(u) == v) return e;
  return std::nullopt;
}

int LabeledGraph::multiplicity(int u, int v) const {
  int n = 0;
  for (int e : incident_.at(u))
    if (edges_[e].other(u) == v) ++n;
  return n;
}

bool LabeledGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u == e.v) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

bool LabeledGraph::has_coloring() const {
  return !vertices_.empty() &&
         std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.color != Color::None; });
}

bool LabeledGraph::is_properly_bicolored() const {
  if (!has_coloring()) return false;
  for (const Edge& e : edges_)
    if (vertices_[e.u].color == vertices_[e.v].color) return false;
  return true;
}

bool Cycle::contains_vertex(int v) const { return position(v) >= 0; }

bool Cycle::contains_edge(int e) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
}

int Cycle::position(int v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::vector<int> canonical_rotation(std::vector<int> walk) {
  if (walk.empty()) return walk;
  auto min_it = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), min_it, walk.end());
  if (walk.size() > 2 && walk.back() < walk[1]) std::reverse(walk.begin() + 1, walk.end());
  return walk;
}

Cycle make_cycle(const LabeledGraph& g, std::vector<int> walk) {
  if (walk.empty()) throw GraphError("empty cycle");
  std::vector<int> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("cycle repeats a vertex");
  Cycle c;
  c.vertices = canonical_rotation(std::move(walk));
  const int n = c.length();
  for (int i = 0; i < n; ++i) {
    int a = c.vertices[i], b = c.vertices[(i + 1) % n];
    if (n == 2 && i == 1) {
      // A 2-cycle uses two distinct parallel edges.
      std::optional<int> second;
      for (int e : g.incident(a))
        if (g.edge(e).other(a) == b && e != c.edge_ids[0]) second = e;
      if (!second) throw GraphError("2-cycle needs a repeated edge");
      c.edge_ids.push_back(*second);
      continue;
    }
    auto e = g.edge_between(a, b);
    if (!e)
      throw GraphError("'" + g.vertex(a).label + "' and '" + g.vertex(b).label +
                       "' are not adjacent");
    c.edge_ids.push_back(*e);
  }
  std::sort(c.edge_ids.begin(), c.edge_ids.end());
  return c;
}

Cycle make_cycle(const LabeledGraph& g, const std::vector<std::string>& labels) {
  std::vector<int> walk;
  for (const auto& l : labels) walk.push_back(g.at(l));
  return make_cycle(g, std::move(walk));
}

bool SpanningTree::contains(int e) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
}

std::vector<std::vector<int>> components(const LabeledGraph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<int> girth(const LabeledGraph& g) {
  for (const Edge& e : g.edges())
    if (e.u == e.v) return 1;
  if (!g.is_simple()) return 2;
  int best = std::numeric_limits<int>::max();
  const int n = g.num_vertices();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent_edge(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g.incident(v)) {
        if (e == parent_edge[v]) continue;
        int w = g.edge(e).other(v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = e;
          q.push(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<Cycle> enumerate_cycles(const LabeledGraph& g, int length) {
  if (length < 3) throw GraphError("cycle length must be at least 3 on a simple graph");
  if (!g.is_simple()) throw GraphError("cycle enumeration requires a simple graph");
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::function<void(int)> extend = [&](int start) {
    int v = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (path[1] < path.back() &&
          std::binary_search(adj[v].begin(), adj[v].end(), start))
        out.push_back(make_cycle(g, path));
      return;
    }
    for (int w : adj[v]) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathResult shortest_paths(const LabeledGraph& g, int from, int to) {
  const int n = g.num_vertices();
  if (from < 0 || to < 0 || from >= n || to >= n) throw GraphError("vertex out of range");
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[to] = 0;
  q.push(to);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  PathResult r;
  if (dist[from] < 0) return r;
  r.reachable = true;
  r.length = dist[from];
  std::vector<int> path{from};
  std::function<void(int)> walk = [&](int v) {
    if (v == to) {
      r.paths.push_back(path);
      return;
    }
    for (int w : g.neighbors(v))
      if (dist[w] == dist[v] - 1) {
        path.push_back(w);
        walk(w);
        path.pop_back();
      }
  };
  walk(from);
  return r;
}

SpanningTree spanning_tree(const LabeledGraph& g, const std::vector<int>& drop_edges, int root) {
  if (root < 0 || root >= g.num_vertices()) throw GraphError("root out of range");
  std::set<int> dropped(drop_edges.begin(), drop_edges.end());
  std::vector<char> seen(g.num_vertices(), 0);
  SpanningTree t;
  t.graph = &g;
  t.root = root;
  std::function<void(int)> dfs = [&](int v) {
    seen[v] = 1;
    for (int e : g.incident(v)) {
      if (dropped.count(e)) continue;
      int w = g.edge(e).other(v);
      if (seen[w]) continue;
      t.edge_ids.push_back(e);
      dfs(w);
    }
  };
  dfs(root);
  for (const auto& comp : components(g)) {
    if (!std::binary_search(comp.begin(), comp.end(), root)) continue;
    for (int v : comp)
      if (!seen[v])
        throw GraphError("dropping the requested edges disconnects '" + g.vertex(v).label + "'");
  }
  std::sort(t.edge_ids.begin(), t.edge_ids.end());
  return t;
}

std::vector<Cycle> hamiltonian_cycles(const LabeledGraph& g, int limit) {
  const int n = g.num_vertices();
  std::vector<Cycle> out;
  if (n < 3 || limit <= 0) return out;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  for (int v = 0; v < n; ++v)
    if (adj[v].size() < 2) return out;

  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  bool done = false;
  // An unvisited vertex needs two exits that are either unvisited or path ends.
  auto stranded = [&](int tail) {
    for (int w : adj[tail]) {
      if (used[w]) continue;
      int exits = 0;
      for (int x : adj[w])
        if (!used[x] || x == tail || x == 0) ++exits;
      if (exits < 2) return true;
    }
    return false;
  };
  std::function<void()> extend = [&]() {
    if (done) return;
    int v = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (path[1] < path.back() && std::binary_search(adj[v].begin(), adj[v].end(), 0)) {
        out.push_back(make_cycle(g, path));
        if (static_cast<int>(out.size()) >= limit) done = true;
      }
      return;
    }
    if (stranded(v)) return;
    for (int w : adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      used[w] = 0;
      if (done) return;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph delete_edges(const LabeledGraph& g,
                          const std::function<bool(int, const Edge&)>& drop) {
  LabeledGraph h;
  for (const Vertex& v : g.vertices()) h.add_vertex(v.label, v.color);
  for (int e = 0; e < g.num_edges(); ++e)
    if (!drop(e, g.edge(e))) h.add_edge(g.edge(e).u, g.edge(e).v);
  return h;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& keep) {
  LabeledGraph h;
  std::vector<int> index(g.num_vertices(), -1);
  for (int v : keep) index[v] = h.add_vertex(g.vertex(v).label, g.vertex(v).color);
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) h.add_edge(index[e.u], index[e.v]);
  return h;
}

}  // namespace tonnetz

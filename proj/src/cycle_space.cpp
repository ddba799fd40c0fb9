#include "tonnetz/cycle_space.h"

#include <algorithm>
#include <stdexcept>

namespace tonnetz {

CycleVector::CycleVector(const LabeledGraph& g) : graph_(&g), bits_(g.num_edges()) {}

CycleVector CycleVector::from_cycle(const LabeledGraph& g, const Cycle& c) {
  return from_edges(g, c.edge_ids);
}

CycleVector CycleVector::from_edges(const LabeledGraph& g, const std::vector<int>& edge_ids) {
  CycleVector v(g);
  for (int e : edge_ids) v.flip(e);
  return v;
}

std::vector<int> CycleVector::edge_ids() const {
  std::vector<int> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

bool CycleVector::is_even() const {
  std::vector<int> deg(graph_->num_vertices(), 0);
  for (int e : edge_ids()) {
    ++deg[graph_->edge(e).u];
    ++deg[graph_->edge(e).v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

CycleVector& CycleVector::operator^=(const CycleVector& o) {
  if (graph_ != o.graph_) throw GraphError("cycle vectors belong to different graphs");
  bits_ ^= o.bits_;
  return *this;
}

CycleVector add(const CycleVector& a, const CycleVector& b) {
  CycleVector r = a;
  r ^= b;
  return r;
}

std::vector<Cycle> decompose_into_cycles(const CycleVector& v) {
  if (!v.is_even()) throw GraphError("edge set has a vertex of odd degree");
  const LabeledGraph& g = *v.graph();
  boost::dynamic_bitset<> left = v.bits();
  std::vector<Cycle> out;
  while (left.any()) {
    int e0 = static_cast<int>(left.find_first());
    // Walk from e0 until a vertex repeats, then cut out the closed loop.
    std::vector<int> verts{g.edge(e0).u};
    std::vector<int> used{e0};
    left.reset(e0);
    int cur = g.edge(e0).v;
    while (true) {
      auto hit = std::find(verts.begin(), verts.end(), cur);
      if (hit != verts.end()) {
        size_t k = hit - verts.begin();
        std::vector<int> loop(verts.begin() + k, verts.end());
        // Edges before the loop go back into the pool.
        for (size_t i = 0; i < k; ++i) left.set(used[i]);
        std::vector<int> loop_edges(used.begin() + k, used.end());
        Cycle c;
        c.vertices = canonical_rotation(loop);
        c.edge_ids = loop_edges;
        std::sort(c.edge_ids.begin(), c.edge_ids.end());
        out.push_back(std::move(c));
        break;
      }
      verts.push_back(cur);
      int next = -1;
      for (int e : g.incident(cur))
        if (left.test(e)) {
          next = e;
          break;
        }
      left.reset(next);
      used.push_back(next);
      cur = g.edge(next).other(cur);
    }
  }
  return out;
}

SpliceResult splice(const LabeledGraph& g, const Cycle& a, const Cycle& b) {
  std::vector<int> shared;
  std::set_intersection(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(),
                        b.edge_ids.end(), std::back_inserter(shared));
  if (shared.empty()) throw GraphError("splice needs cycles sharing an edge");
  SpliceResult r;
  r.sum = add(CycleVector::from_cycle(g, a), CycleVector::from_cycle(g, b));
  r.parts = decompose_into_cycles(r.sum);
  return r;
}

int cycle_space_dimension(const LabeledGraph& g) {
  return g.num_edges() - g.num_vertices() + static_cast<int>(components(g).size());
}

CycleBasis fundamental_basis(const SpanningTree& t) {
  const LabeledGraph& g = *t.graph;
  CycleBasis b;
  b.tree = t;
  std::vector<std::vector<int>> tree_adj(g.num_vertices());
  for (int e : t.edge_ids) {
    tree_adj[g.edge(e).u].push_back(e);
    tree_adj[g.edge(e).v].push_back(e);
  }
  std::vector<char> in_tree_component(g.num_vertices(), 0);
  in_tree_component[t.root] = 1;
  for (int e : t.edge_ids) in_tree_component[g.edge(e).u] = in_tree_component[g.edge(e).v] = 1;

  auto tree_path = [&](int from, int to) {
    // Edge ids on the unique tree path.
    std::vector<int> parent(g.num_vertices(), -2);
    std::vector<int> stack{from};
    parent[from] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : tree_adj[v]) {
        int w = g.edge(e).other(v);
        if (parent[w] == -2) {
          parent[w] = e;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = g.edge(parent[v]).other(v)) path.push_back(parent[v]);
    return path;
  };

  for (int e = 0; e < g.num_edges(); ++e) {
    if (t.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if (!in_tree_component[ed.u]) continue;
    std::vector<int> edges = tree_path(ed.u, ed.v);
    edges.push_back(e);
    CycleVector v = CycleVector::from_edges(g, edges);
    b.chord_edges.push_back(e);
    b.cycles.push_back(decompose_into_cycles(v).front());
    b.vectors.push_back(std::move(v));
  }
  return b;
}

std::vector<bool> decompose(const CycleVector& v, const CycleBasis& basis) {
  const size_t k = basis.vectors.size();
  const size_t m = v.bits().size();
  // Rows carry the vector bits followed by an identity block tracking combinations.
  std::vector<boost::dynamic_bitset<>> rows;
  for (size_t i = 0; i < k; ++i) {
    if (basis.vectors[i].graph() != v.graph()) throw GraphError("basis from a different graph");
    boost::dynamic_bitset<> r(m + k);
    for (size_t e = 0; e < m; ++e) r[e] = basis.vectors[i].bits()[e];
    r[m + i] = 1;
    rows.push_back(r);
  }
  boost::dynamic_bitset<> target(m + k);
  for (size_t e = 0; e < m; ++e) target[e] = v.bits()[e];

  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < m && rank < k; ++col) {
    size_t p = rank;
    while (p < k && !rows[p][col]) ++p;
    if (p == k) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t i = 0; i < k; ++i)
      if (i != rank && rows[i][col]) rows[i] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = 0; i < rank; ++i)
    if (target[pivot_col[i]]) target ^= rows[i];
  for (size_t e = 0; e < m; ++e)
    if (target[e]) throw GraphError("vector is not in the span of the basis");
  std::vector<bool> coeff(k);
  for (size_t i = 0; i < k; ++i) coeff[i] = target[m + i];
  return coeff;
}

CycleVector recombine(const std::vector<bool>& coefficients, const CycleBasis& basis) {
  if (basis.vectors.empty()) throw GraphError("empty basis has no graph");
  CycleVector r(*basis.vectors.front().graph());
  for (size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i]) r ^= basis.vectors[i];
  return r;
}

}  // namespace tonnetz

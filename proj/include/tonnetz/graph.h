#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tonnetz {

enum class Color { None, White, Black };

struct Vertex {
  int id = 0;
  std::string label;
  Color color = Color::None;
};

struct Edge {
  int u = 0;
  int v = 0;
  int other(int w) const { return w == u ? v : u; }
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected graph with dense vertex and edge ids. Parallel edges get distinct
// ids; multiplicity() reports how many join a given pair.
class LabeledGraph {
 public:
  int add_vertex(std::string label, Color color = Color::None);
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edge ids in insertion order.
  const std::vector<int>& incident(int v) const { return incident_.at(v); }
  // Neighbour ids, ascending, without repeats.
  std::vector<int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
  std::optional<int> regular_degree() const;

  std::optional<int> find(const std::string& label) const;
  int at(const std::string& label) const;  // throws GraphError
  std::optional<int> edge_between(int u, int v) const;  // lowest id
  int multiplicity(int u, int v) const;
  bool is_simple() const;

  bool has_coloring() const;
  // True when every vertex is coloured and every edge joins White to Black.
  bool is_properly_bicolored() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Simple cycle stored as a canonical vertex sequence: rotated to start at the
// smallest id, then oriented so the second vertex is the smaller neighbour.
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edge_ids;  // ascending

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains_vertex(int v) const;
  bool contains_edge(int e) const;
  int position(int v) const;  // -1 if absent
  auto operator<=>(const Cycle& o) const { return vertices <=> o.vertices; }
  bool operator==(const Cycle& o) const { return vertices == o.vertices; }
};

// Builds the canonical cycle through `walk` (closing edge implied).
// Throws if consecutive vertices are not adjacent or a vertex repeats.
Cycle make_cycle(const LabeledGraph& g, std::vector<int> walk);
Cycle make_cycle(const LabeledGraph& g, const std::vector<std::string>& labels);
std::vector<int> canonical_rotation(std::vector<int> walk);

struct SpanningTree {
  const LabeledGraph* graph = nullptr;
  int root = 0;
  std::vector<int> edge_ids;  // ascending
  bool contains(int e) const;
};

struct PathResult {
  bool reachable = false;
  int length = -1;
  std::vector<std::vector<int>> paths;  // lexicographic order
};

std::vector<std::vector<int>> components(const LabeledGraph& g);
std::optional<int> girth(const LabeledGraph& g);  // nullopt for forests
std::vector<Cycle> enumerate_cycles(const LabeledGraph& g, int length);
PathResult shortest_paths(const LabeledGraph& g, int from, int to);
SpanningTree spanning_tree(const LabeledGraph& g, const std::vector<int>& drop_edges,
                           int root = 0);
std::vector<Cycle> hamiltonian_cycles(const LabeledGraph& g, int limit);
LabeledGraph delete_edges(const LabeledGraph& g,
                          const std::function<bool(int edge_id, const Edge&)>& drop);
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& keep);

}  // namespace tonnetz

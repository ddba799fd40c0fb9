#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "tonnetz/graph.h"

namespace tonnetz {

// Element of the GF(2) cycle space: a set of edges, addition is XOR.
class CycleVector {
 public:
  CycleVector() = default;
  explicit CycleVector(const LabeledGraph& g);
  static CycleVector from_cycle(const LabeledGraph& g, const Cycle& c);
  static CycleVector from_edges(const LabeledGraph& g, const std::vector<int>& edge_ids);

  const LabeledGraph* graph() const { return graph_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  bool test(int e) const { return bits_.test(e); }
  void flip(int e) { bits_.flip(e); }
  int weight() const { return static_cast<int>(bits_.count()); }
  bool is_zero() const { return bits_.none(); }
  std::vector<int> edge_ids() const;
  // Every vertex meets an even number of chosen edges.
  bool is_even() const;

  CycleVector& operator^=(const CycleVector& o);
  bool operator==(const CycleVector& o) const { return graph_ == o.graph_ && bits_ == o.bits_; }

 private:
  const LabeledGraph* graph_ = nullptr;
  boost::dynamic_bitset<> bits_;
};

CycleVector add(const CycleVector& a, const CycleVector& b);  // throws on graph mismatch

// Splits an even edge set into edge-disjoint simple cycles, always starting the
// next walk from the lowest remaining edge id.
std::vector<Cycle> decompose_into_cycles(const CycleVector& v);

struct SpliceResult {
  CycleVector sum;
  std::vector<Cycle> parts;
  bool is_single_cycle() const { return parts.size() == 1; }
};
// Symmetric difference of two cycles that share at least one edge.
SpliceResult splice(const LabeledGraph& g, const Cycle& a, const Cycle& b);

struct CycleBasis {
  SpanningTree tree;
  std::vector<int> chord_edges;       // non-tree edges, ascending
  std::vector<CycleVector> vectors;   // vectors[i] is the cycle closed by chord_edges[i]
  std::vector<Cycle> cycles;
};

int cycle_space_dimension(const LabeledGraph& g);
CycleBasis fundamental_basis(const SpanningTree& t);
// GF(2) coefficients over `basis.vectors`; throws if v lies outside the span.
std::vector<bool> decompose(const CycleVector& v, const CycleBasis& basis);
CycleVector recombine(const std::vector<bool>& coefficients, const CycleBasis& basis);

}  // namespace tonnetz

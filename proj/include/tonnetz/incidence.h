#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonnetz/graph.h"

namespace tonnetz {

struct Flag {
  int point = 0;
  int line = 0;
};

// Points and lines with an incidence relation, stored as sorted point lists
// per line.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::vector<std::string> points, std::vector<std::string> lines,
                     std::vector<std::vector<int>> line_points);

  int num_points() const { return static_cast<int>(points_.size()); }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  const std::string& point_label(int p) const { return points_.at(p); }
  const std::string& line_label(int l) const { return lines_.at(l); }
  const std::vector<std::string>& point_labels() const { return points_; }
  const std::vector<std::string>& line_labels() const { return lines_; }
  const std::vector<int>& points_on(int l) const { return line_points_.at(l); }
  std::vector<int> lines_through(int p) const;
  bool incident(int p, int l) const;
  std::vector<Flag> flags() const;
  int num_flags() const;
  std::optional<int> find_point(const std::string& label) const;
  std::optional<int> find_line(const std::string& label) const;

  bool operator==(const IncidenceStructure& o) const;

 private:
  std::vector<std::string> points_;
  std::vector<std::string> lines_;
  std::vector<std::vector<int>> line_points_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const IncidenceStructure& s);

struct ConfigurationType {
  int m = 0, r = 0;  // points, lines per point
  int n = 0, k = 0;  // lines, points per line
  int flags = 0;
  bool graph_like = false;           // k == 2
  bool fundamental_bound = false;    // m >= r(k-1)+1
  bool symmetric() const { return m == n && r == k; }
  std::string to_string() const;     // "{12_3}" or "{4_3, 6_2}"
};

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ConfigurationError, with the degree histogram, if point or line
// degrees are not uniform or the axioms fail.
ConfigurationType configuration_type(const IncidenceStructure& s);

// Points become White vertices 0..m-1, lines Black vertices m..m+n-1.
LabeledGraph to_levi(const IncidenceStructure& s);
// Requires a proper White/Black colouring and girth at least 6.
IncidenceStructure from_levi(const LabeledGraph& g);

IncidenceStructure dual(const IncidenceStructure& s);

struct SelfDuality {
  bool self_dual = false;
  std::vector<int> point_to_line;  // witness, empty when not self-dual
  std::vector<int> line_to_point;
};
SelfDuality is_self_dual(const IncidenceStructure& s);

// Colour-preserving isomorphism of two graphs, if any (backtracking).
std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace tonnetz

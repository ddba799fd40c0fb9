#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonnetz/exact.h"
#include "tonnetz/incidence.h"

namespace tonnetz {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A projective subspace of RP^n given by spanning homogeneous rows. Rows are
// kept in reduced echelon form scaled to primitive integers, so two flats are
// equal exactly when their rows are.
class ProjFlat {
 public:
  ProjFlat() = default;
  static ProjFlat span(int ambient, const RMat& rows);
  static ProjFlat point(const RVec& coords);
  static ProjFlat empty(int ambient) { return span(ambient, {}); }
  // The hyperplane { x : <c, x> = 0 }.
  static ProjFlat hyperplane(const RVec& covector);

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int dimension() const { return rank() - 1; }
  bool is_empty() const { return rows_.empty(); }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }
  RMat rational_rows() const;
  // Rows spanning the annihilator; a single row for a hyperplane.
  RMat annihilator() const;
  RVec covector() const;  // throws unless this is a hyperplane
  RVec representative() const;  // throws unless this is a point
  bool contains(const ProjFlat& sub) const;
  std::string to_string() const;

  bool operator==(const ProjFlat& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

 private:
  int ambient_ = 2;
  std::vector<std::vector<Integer>> rows_;
};

ProjFlat join(const std::vector<ProjFlat>& flats);
ProjFlat meet(const std::vector<ProjFlat>& flats);
bool collinear(const ProjFlat& p, const ProjFlat& q, const ProjFlat& r);

// Points and lines of a configuration placed as exact flats.
struct Realization {
  IncidenceStructure structure;
  int ambient = 2;
  std::vector<ProjFlat> points;
  std::vector<ProjFlat> lines;
};

struct ApproxRealization {
  IncidenceStructure structure;
  std::vector<Eigen::Vector3d> points;
  std::vector<Eigen::Vector3d> lines;  // covectors
};

struct RealizationReport {
  int flags = 0;
  int flags_ok = 0;
  int nonflags = 0;
  int nonflags_ok = 0;
  double max_flag_residual = 0.0;
  double min_nonflag_residual = std::numeric_limits<double>::infinity();
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Exact mode: incidence is containment of flats, with no tolerance.
RealizationReport verify_realization(const Realization& r);
// Approximate mode. Residual is |<p,l>| / (|p||l|); flags need <= tol and
// non-flags >= separation.
RealizationReport verify_realization(const ApproxRealization& r, double tol, double separation = 1e-3);
// Approximate mode on exact coordinates: residuals are computed exactly, so
// flags come out as exactly zero.
RealizationReport verify_realization(const Realization& r, double tol, double separation);

// Sine of the angle between a point and a flat, evaluated exactly and then
// rounded; zero exactly when the flat contains the point.
double incidence_residual(const ProjFlat& point, const ProjFlat& flat);

IncidenceStructure desargues_structure();
// S, T and U are (1-s)V + sP, (1-t)V + tQ, (1-u)V + uR on the given representatives.
Realization desargues_instance(const RVec& V, const RVec& P, const RVec& Q, const RVec& R,
                               const Rational& s, const Rational& t, const Rational& u);

// Sections by a plane of the ten lines and ten planes through five points of RP^3.
Realization cayley_pentatonic(const std::array<RVec, 5>& points, const RVec& plane_covector,
                              const std::vector<std::string>& labels = {"C", "D", "E", "G", "A"});

// Duad points P_ij = L_ij meet H_klmn and syntheme lines in RP^4.
Realization cremona_richmond(const std::array<RVec, 6>& points,
                             const std::vector<std::string>& labels = {"1", "2", "3", "4", "5", "6"});

struct ProjectionAttempt {
  bool faithful = false;
  std::string reason;
  Realization image;
};
// Applies a 3 x (n+1) linear map and checks that no incidence is lost or gained.
ProjectionAttempt try_projection(const Realization& r, const RMat& map);

struct ProjectionResult {
  Realization image;
  RMat map;
  int attempts = 0;
};
ProjectionResult project_to_plane(const Realization& r, std::uint64_t seed, int max_attempts = 16);
ProjectionResult project_to_plane(const Realization& r, const std::function<RMat(int attempt)>& candidate,
                                  int max_attempts);

RMat random_integer_matrix(std::mt19937_64& rng, int rows, int cols, int bound = 9);
RVec random_integer_vector(std::mt19937_64& rng, int size, int bound = 9);

struct D222Options {
  double tol = 1e-8;
  double separation = 1e-3;
  int restarts = 64;
};

struct D222Result {
  ApproxRealization realization;
  std::uint64_t seed = 0;  // seed of the accepted restart
  int attempts = 0;
  std::array<double, 9> parameters{};
  RealizationReport report;
};

// Nested-triangle placement of the Eulerian {12_3}. Outer triangle CM, EM,
// AbM; nine ratios place the inner points along the construction lines, and
// Levenberg-Marquardt closes the last three lines Fm, C#m, Am. Restart k uses
// seed + k. Throws GeometryError when no restart is accepted.
D222Result realize_d222_numeric(std::uint64_t seed = 0, const D222Options& options = {});

}  // namespace tonnetz

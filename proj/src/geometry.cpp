#include "tonnetz/geometry.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tonnetz/builders.h"

namespace tonnetz {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::vector<Integer> primitive_row(const RVec& row) {
  Integer l = 1;
  for (const auto& x : row) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : row) {
    Integer v = numerator(x) * (l / denominator(x));
    g = boost::multiprecision::gcd(g, v);
    out.push_back(v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

RMat stack(const std::vector<ProjFlat>& flats) {
  RMat rows;
  for (const auto& f : flats)
    for (const auto& r : f.rational_rows()) rows.push_back(r);
  return rows;
}

int common_ambient(const std::vector<ProjFlat>& flats) {
  if (flats.empty()) throw GeometryError("need at least one flat");
  int n = flats.front().ambient();
  for (const auto& f : flats)
    if (f.ambient() != n) throw GeometryError("flats live in different dimensions");
  return n;
}

}  // namespace

ProjFlat ProjFlat::span(int ambient, const RMat& rows) {
  if (ambient < 1) throw GeometryError("ambient dimension must be positive");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient + 1)
      throw GeometryError("coordinate row has the wrong length");
  ProjFlat f;
  f.ambient_ = ambient;
  for (const auto& r : rref(rows)) f.rows_.push_back(primitive_row(r));
  return f;
}

ProjFlat ProjFlat::point(const RVec& coords) {
  if (coords.size() < 2) throw GeometryError("a point needs at least two coordinates");
  ProjFlat p = span(static_cast<int>(coords.size()) - 1, {coords});
  if (p.rank() != 1) throw GeometryError("the zero vector is not a point");
  return p;
}

ProjFlat ProjFlat::hyperplane(const RVec& covector) {
  RMat rows = nullspace({covector}, static_cast<int>(covector.size()));
  ProjFlat h = span(static_cast<int>(covector.size()) - 1, rows);
  if (h.rank() != static_cast<int>(covector.size()) - 1) throw GeometryError("zero covector");
  return h;
}

RMat ProjFlat::rational_rows() const {
  RMat out;
  for (const auto& r : rows_) {
    RVec v;
    for (const auto& x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

RMat ProjFlat::annihilator() const {
  RMat rows = rational_rows();
  if (rows.empty()) {
    RMat id(ambient_ + 1, RVec(ambient_ + 1, Rational(0)));
    for (int i = 0; i <= ambient_; ++i) id[i][i] = 1;
    return id;
  }
  return nullspace(rows, ambient_ + 1);
}

RVec ProjFlat::covector() const {
  if (rank() != ambient_) throw GeometryError("only a hyperplane has a single covector");
  RVec c = annihilator().front();
  RVec out;
  for (const auto& x : primitive_row(c)) out.emplace_back(x);
  return out;
}

RVec ProjFlat::representative() const {
  if (rank() != 1) throw GeometryError("flat is not a point");
  return rational_rows().front();
}

bool ProjFlat::contains(const ProjFlat& sub) const {
  if (sub.ambient_ != ambient_) throw GeometryError("flats live in different dimensions");
  if (sub.is_empty()) return true;
  return join({*this, sub}).rank() == rank();
}

std::string ProjFlat::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out << "; ";
    out << '(';
    for (size_t j = 0; j < rows_[i].size(); ++j) out << (j ? "," : "") << rows_[i][j];
    out << ')';
  }
  out << ']';
  return out.str();
}

ProjFlat join(const std::vector<ProjFlat>& flats) {
  int n = common_ambient(flats);
  return ProjFlat::span(n, stack(flats));
}

ProjFlat meet(const std::vector<ProjFlat>& flats) {
  int n = common_ambient(flats);
  RMat ann;
  for (const auto& f : flats)
    for (const auto& r : f.annihilator()) ann.push_back(r);
  return ProjFlat::span(n, nullspace(ann, n + 1));
}

bool collinear(const ProjFlat& p, const ProjFlat& q, const ProjFlat& r) {
  for (const auto* x : {&p, &q, &r})
    if (x->ambient() != 2 || x->rank() != 1) throw GeometryError("collinear() takes three points of RP^2");
  return determinant({p.representative(), q.representative(), r.representative()}) == 0;
}

double incidence_residual(const ProjFlat& point, const ProjFlat& flat) {
  RVec p = point.representative();
  RMat a = flat.rational_rows();
  const size_t k = a.size();
  // Solve (A A^T) y = A p and measure p - A^T y.
  RMat aug(k, RVec(k + 1, Rational(0)));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = dot(a[i], a[j]);
    aug[i][k] = dot(a[i], p);
  }
  RMat solved = rref(aug);
  RVec perp = p;
  for (size_t i = 0; i < k; ++i)
    for (size_t c = 0; c < perp.size(); ++c) perp[c] -= solved[i][k] * a[i][c];
  Rational num = dot(perp, perp);
  if (num == 0) return 0.0;
  Rational ratio = num / dot(p, p);
  return std::sqrt(static_cast<double>(ratio));
}

namespace {

std::string flag_name(const IncidenceStructure& s, int p, int l) {
  return s.point_label(p) + "|" + s.line_label(l);
}

void check_sizes(const IncidenceStructure& s, size_t points, size_t lines) {
  if (points != static_cast<size_t>(s.num_points()) || lines != static_cast<size_t>(s.num_lines()))
    throw GeometryError("coordinates do not cover every point and line");
}

template <typename Residual>
RealizationReport tally(const IncidenceStructure& s, Residual residual, double tol, double separation) {
  RealizationReport rep;
  for (int l = 0; l < s.num_lines(); ++l)
    for (int p = 0; p < s.num_points(); ++p) {
      double r = residual(p, l);
      if (s.incident(p, l)) {
        ++rep.flags;
        rep.max_flag_residual = std::max(rep.max_flag_residual, r);
        if (r <= tol) ++rep.flags_ok;
        else rep.failures.push_back("flag " + flag_name(s, p, l) + " residual " + std::to_string(r));
      } else {
        ++rep.nonflags;
        rep.min_nonflag_residual = std::min(rep.min_nonflag_residual, r);
        if (r >= separation) ++rep.nonflags_ok;
        else rep.failures.push_back("non-flag " + flag_name(s, p, l) + " residual " + std::to_string(r));
      }
    }
  return rep;
}

}  // namespace

RealizationReport verify_realization(const Realization& r) {
  const auto& s = r.structure;
  check_sizes(s, r.points.size(), r.lines.size());
  RealizationReport rep;
  for (int l = 0; l < s.num_lines(); ++l)
    for (int p = 0; p < s.num_points(); ++p) {
      bool on = r.lines[l].contains(r.points[p]);
      if (s.incident(p, l)) {
        ++rep.flags;
        if (on) ++rep.flags_ok;
        else rep.failures.push_back("flag " + flag_name(s, p, l) + " fails");
      } else {
        ++rep.nonflags;
        if (!on) ++rep.nonflags_ok;
        else rep.failures.push_back("non-flag " + flag_name(s, p, l) + " is incident");
      }
    }
  rep.max_flag_residual = 0.0;
  return rep;
}

RealizationReport verify_realization(const ApproxRealization& r, double tol, double separation) {
  check_sizes(r.structure, r.points.size(), r.lines.size());
  return tally(
      r.structure,
      [&](int p, int l) {
        double denom = r.points[p].norm() * r.lines[l].norm();
        if (denom == 0.0) return std::numeric_limits<double>::infinity();
        return std::abs(r.points[p].dot(r.lines[l])) / denom;
      },
      tol, separation);
}

RealizationReport verify_realization(const Realization& r, double tol, double separation) {
  check_sizes(r.structure, r.points.size(), r.lines.size());
  return tally(
      r.structure, [&](int p, int l) { return incidence_residual(r.points[p], r.lines[l]); }, tol,
      separation);
}

IncidenceStructure desargues_structure() {
  const std::vector<std::string> points = {"P", "Q", "R", "S", "T", "U", "V", "X", "Y", "Z"};
  const std::vector<std::string> lines = {"PRY", "PQZ", "QRX", "SUY", "STZ",
                                          "TUX", "PSV", "QTV", "RUV", "XYZ"};
  std::vector<std::vector<int>> lp;
  for (const auto& l : lines) {
    std::vector<int> pts;
    for (char c : l) pts.push_back(static_cast<int>(
        std::find(points.begin(), points.end(), std::string(1, c)) - points.begin()));
    lp.push_back(pts);
  }
  return IncidenceStructure(points, lines, lp);
}

namespace {

ProjFlat require_point(const ProjFlat& f, const std::string& what) {
  if (f.rank() != 1) throw GeometryError("degenerate position: " + what + " is not a single point");
  return f;
}

ProjFlat require_line(const ProjFlat& f, const std::string& what) {
  if (f.rank() != 2) throw GeometryError("degenerate position: " + what + " is not a line");
  return f;
}

RVec combine(const Rational& a, const RVec& x, const Rational& b, const RVec& y) {
  RVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

Realization lines_through_points(IncidenceStructure s, int ambient, std::vector<ProjFlat> points) {
  Realization r;
  r.ambient = ambient;
  r.points = std::move(points);
  for (int l = 0; l < s.num_lines(); ++l) {
    const auto& on = s.points_on(l);
    r.lines.push_back(require_line(join({r.points[on[0]], r.points[on[1]]}), "line " + s.line_label(l)));
  }
  r.structure = std::move(s);
  return r;
}

}  // namespace

Realization desargues_instance(const RVec& V, const RVec& P, const RVec& Q, const RVec& R,
                               const Rational& s, const Rational& t, const Rational& u) {
  for (const auto* v : {&V, &P, &Q, &R})
    if (v->size() != 3) throw GeometryError("Desargues instances live in RP^2");
  const std::array<const RVec*, 4> base = {&V, &P, &Q, &R};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c)
        if (determinant({*base[a], *base[b], *base[c]}) == 0)
          throw GeometryError("degenerate position: three of V, P, Q, R are collinear");
  for (const Rational* x : {&s, &t, &u})
    if (*x == 0 || *x == 1) throw GeometryError("degenerate position: parameter at an endpoint");

  auto pt = [](const RVec& v) { return ProjFlat::point(v); };
  ProjFlat p = pt(P), q = pt(Q), r = pt(R), v = pt(V);
  ProjFlat S = pt(combine(1 - s, V, s, P));
  ProjFlat T = pt(combine(1 - t, V, t, Q));
  ProjFlat U = pt(combine(1 - u, V, u, R));
  ProjFlat X = require_point(meet({join({q, r}), join({T, U})}), "QR meet TU");
  ProjFlat Y = require_point(meet({join({p, r}), join({S, U})}), "PR meet SU");
  ProjFlat Z = require_point(meet({join({p, q}), join({S, T})}), "PQ meet ST");
  if (!collinear(X, Y, Z)) throw GeometryError("X, Y, Z are not collinear");

  Realization out = lines_through_points(desargues_structure(), 2, {p, q, r, S, T, U, v, X, Y, Z});
  RealizationReport rep = verify_realization(out);
  if (!rep.ok()) throw GeometryError("degenerate position: " + rep.failures.front());
  return out;
}

Realization cayley_pentatonic(const std::array<RVec, 5>& points, const RVec& plane_covector,
                              const std::vector<std::string>& labels) {
  for (const auto& p : points)
    if (p.size() != 4) throw GeometryError("Cayley construction needs points of RP^3");
  if (plane_covector.size() != 4) throw GeometryError("section plane must be a covector of RP^3");
  std::vector<ProjFlat> pt;
  for (const auto& p : points) pt.push_back(ProjFlat::point(p));
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<ProjFlat> four;
    for (int i = 0; i < 5; ++i)
      if (i != skip) four.push_back(pt[i]);
    if (join(four).rank() != 4) throw GeometryError("general position fails: four points are coplanar");
  }
  for (int i = 0; i < 5; ++i)
    if (dot(plane_covector, points[i]) == 0)
      throw GeometryError("section plane passes through point " + labels.at(i));
  ProjFlat plane = ProjFlat::hyperplane(plane_covector);

  PentatonicTonnetz combinatorial = build_pentatonic(labels);
  Realization r;
  r.ambient = 3;
  r.structure = combinatorial.structure;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      r.points.push_back(require_point(meet({join({pt[i], pt[j]}), plane}), "duad section"));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k)
        r.lines.push_back(require_line(meet({join({pt[i], pt[j], pt[k]}), plane}), "triple section"));
  return r;
}

Realization cremona_richmond(const std::array<RVec, 6>& points, const std::vector<std::string>& labels) {
  for (const auto& p : points)
    if (p.size() != 5) throw GeometryError("Cremona-Richmond construction needs points of RP^4");
  std::vector<ProjFlat> pt;
  for (const auto& p : points) pt.push_back(ProjFlat::point(p));
  for (int skip = 0; skip < 6; ++skip) {
    std::vector<ProjFlat> five;
    for (int i = 0; i < 6; ++i)
      if (i != skip) five.push_back(pt[i]);
    if (join(five).rank() != 5) throw GeometryError("general position fails: five points span less than RP^4");
  }
  HexachordalTonnetz h = build_hexachordal(labels);
  // Hyperplane spanned by the four elements outside a duad.
  auto complement = [&](const Duad& d) {
    std::vector<ProjFlat> four;
    for (int x = 0; x < 6; ++x)
      if (x != d.i && x != d.j) four.push_back(pt[x]);
    ProjFlat hp = join(four);
    if (hp.rank() != 4) throw GeometryError("general position fails: complementary hyperplane degenerates");
    return hp;
  };
  Realization r;
  r.ambient = 4;
  r.structure = h.structure;
  for (const Duad& d : h.duads)
    r.points.push_back(require_point(meet({join({pt[d.i], pt[d.j]}), complement(d)}),
                                     "P" + h.duad_label(d)));
  for (int s = 0; s < static_cast<int>(h.synthemes.size()); ++s) {
    const auto& dd = h.synthemes[s].duads;
    r.lines.push_back(require_line(meet({complement(dd[0]), complement(dd[1]), complement(dd[2])}),
                                   "syntheme " + h.syntheme_label(s)));
  }
  RealizationReport rep = verify_realization(r);
  if (!rep.ok()) throw GeometryError("general position fails: " + rep.failures.front());
  return r;
}

ProjectionAttempt try_projection(const Realization& r, const RMat& map) {
  ProjectionAttempt a;
  if (map.size() != 3) throw GeometryError("projection to the plane needs three rows");
  for (const auto& row : map)
    if (static_cast<int>(row.size()) != r.ambient + 1) throw GeometryError("projection has the wrong width");
  a.image.structure = r.structure;
  a.image.ambient = 2;
  for (int p = 0; p < static_cast<int>(r.points.size()); ++p) {
    RVec img = mat_vec(map, r.points[p].representative());
    if (std::all_of(img.begin(), img.end(), [](const Rational& x) { return x == 0; })) {
      a.reason = "point " + r.structure.point_label(p) + " lies on the projection centre";
      return a;
    }
    a.image.points.push_back(ProjFlat::point(img));
  }
  for (int l = 0; l < static_cast<int>(r.lines.size()); ++l) {
    RMat rows;
    for (const auto& row : r.lines[l].rational_rows()) rows.push_back(mat_vec(map, row));
    ProjFlat img = ProjFlat::span(2, rows);
    if (img.rank() != 2) {
      a.reason = "line " + r.structure.line_label(l) + " collapses";
      return a;
    }
    a.image.lines.push_back(img);
  }
  for (size_t i = 0; i < a.image.points.size(); ++i)
    for (size_t j = i + 1; j < a.image.points.size(); ++j)
      if (a.image.points[i] == a.image.points[j]) {
        a.reason = "points " + r.structure.point_label(i) + " and " + r.structure.point_label(j) + " coincide";
        return a;
      }
  for (size_t i = 0; i < a.image.lines.size(); ++i)
    for (size_t j = i + 1; j < a.image.lines.size(); ++j)
      if (a.image.lines[i] == a.image.lines[j]) {
        a.reason = "lines " + r.structure.line_label(i) + " and " + r.structure.line_label(j) + " coincide";
        return a;
      }
  RealizationReport rep = verify_realization(a.image);
  if (!rep.ok()) {
    a.reason = rep.failures.front();
    return a;
  }
  a.faithful = true;
  return a;
}

RMat random_integer_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RMat m(rows, RVec(cols));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

RVec random_integer_vector(std::mt19937_64& rng, int size, int bound) {
  return random_integer_matrix(rng, 1, size, bound).front();
}

ProjectionResult project_to_plane(const Realization& r, const std::function<RMat(int)>& candidate,
                                  int max_attempts) {
  std::string last;
  for (int k = 0; k < max_attempts; ++k) {
    RMat map = candidate(k);
    ProjectionAttempt a = try_projection(r, map);
    if (a.faithful) return ProjectionResult{std::move(a.image), std::move(map), k + 1};
    last = a.reason;
  }
  throw GeometryError("no faithful projection after " + std::to_string(max_attempts) +
                      " attempts; last failure: " + last);
}

ProjectionResult project_to_plane(const Realization& r, std::uint64_t seed, int max_attempts) {
  return project_to_plane(
      r,
      [&](int k) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
        return random_integer_matrix(rng, 3, r.ambient + 1);
      },
      max_attempts);
}

namespace {

using Eigen::Vector3d;

struct D222Layout {
  // Vertex ids in the Eulerian build: majors by root.
  enum : int { C = 0, Db = 1, D = 2, Eb = 3, E = 4, F = 5, Gb = 6, G = 7, Ab = 8, A = 9, Bb = 10, B = 11 };
};

std::array<Vector3d, 12> d222_points(const std::array<double, 9>& x) {
  using L = D222Layout;
  std::array<Eigen::Vector2d, 12> q;
  q[L::C] = {0.0, 0.0};
  q[L::E] = {1.0, 0.0};
  q[L::Ab] = {0.5, std::sqrt(3.0) / 2.0};
  auto along = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b, double t) { return a + t * (b - a); };
  q[L::Eb] = along(q[L::C], q[L::Ab], x[0]);   // on Cm
  q[L::G] = along(q[L::C], q[L::E], x[1]);     // on Em
  q[L::B] = along(q[L::E], q[L::Ab], x[2]);    // on G#m
  q[L::Bb] = along(q[L::Eb], q[L::G], x[3]);   // on Gm
  q[L::Gb] = along(q[L::Eb], q[L::B], x[4]);   // on Ebm
  q[L::D] = along(q[L::G], q[L::B], x[5]);     // on Bm
  q[L::Db] = along(q[L::Bb], q[L::Gb], x[6]);  // on Bbm
  q[L::F] = along(q[L::Bb], q[L::D], x[7]);    // on Dm
  q[L::A] = along(q[L::Gb], q[L::D], x[8]);    // on F#m
  std::array<Vector3d, 12> out;
  for (int i = 0; i < 12; ++i) out[i] = Vector3d(q[i].x(), q[i].y(), 1.0);
  return out;
}

double normalized_det(const Vector3d& a, const Vector3d& b, const Vector3d& c) {
  return a.cross(b).dot(c) / (a.norm() * b.norm() * c.norm());
}

// The three lines the template leaves open: Fm, C#m and Am.
Eigen::Vector3d d222_residuals(const std::array<double, 9>& x) {
  using L = D222Layout;
  auto p = d222_points(x);
  return {normalized_det(p[L::Ab], p[L::Db], p[L::F]), normalized_det(p[L::E], p[L::Db], p[L::A]),
          normalized_det(p[L::C], p[L::F], p[L::A])};
}

std::array<double, 9> levenberg_marquardt(std::array<double, 9> x) {
  double lambda = 1e-3;
  Eigen::Vector3d r = d222_residuals(x);
  double cost = r.squaredNorm();
  for (int it = 0; it < 500 && cost > 1e-32; ++it) {
    Eigen::Matrix<double, 3, 9> J;
    for (int j = 0; j < 9; ++j) {
      const double h = 1e-7;
      auto xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      J.col(j) = (d222_residuals(xp) - d222_residuals(xm)) / (2 * h);
    }
    Eigen::Matrix<double, 9, 9> A = J.transpose() * J;
    A.diagonal().array() += lambda;
    Eigen::Matrix<double, 9, 1> step = A.ldlt().solve(-J.transpose() * r);
    auto trial = x;
    for (int j = 0; j < 9; ++j) trial[j] += step(j);
    Eigen::Vector3d rt = d222_residuals(trial);
    if (rt.allFinite() && rt.squaredNorm() < cost) {
      x = trial;
      r = rt;
      cost = rt.squaredNorm();
      lambda = std::max(lambda * 0.3, 1e-15);
    } else {
      lambda *= 10;
      if (lambda > 1e12) break;
    }
  }
  return x;
}

}  // namespace

D222Result realize_d222_numeric(std::uint64_t seed, const D222Options& options) {
  EulerianTonnetz t = build_eulerian();
  const IncidenceStructure& s = t.structure;
  std::string last = "no restarts attempted";
  for (int k = 0; k < options.restarts; ++k) {
    std::uint64_t this_seed = seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(this_seed);
    std::uniform_real_distribution<double> init(0.15, 0.85);
    std::array<double, 9> x;
    for (auto& v : x) v = init(rng);
    x = levenberg_marquardt(x);

    auto pts = d222_points(x);
    ApproxRealization ar;
    ar.structure = s;
    for (const auto& p : pts) ar.points.push_back(p);
    for (int l = 0; l < s.num_lines(); ++l) {
      // Best-fit line through the three normalised points.
      Eigen::Matrix3d m;
      for (int i = 0; i < 3; ++i) m.row(i) = pts[s.points_on(l)[i]].normalized().transpose();
      Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullV);
      ar.lines.push_back(svd.matrixV().col(2));
    }
    RealizationReport rep = verify_realization(ar, options.tol, options.separation);
    if (rep.ok()) return D222Result{std::move(ar), this_seed, k + 1, x, std::move(rep)};
    last = rep.failures.front();
  }
  throw GeometryError("no acceptable D222 realization after " + std::to_string(options.restarts) +
                      " restarts; last failure: " + last);
}

}  // namespace tonnetz

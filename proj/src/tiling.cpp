#include "tonnetz/tiling.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace tonnetz {

namespace {

constexpr double kPi = std::numbers::pi;

double deg(double d) { return d * kPi / 180.0; }

// Position on the dodecagon whose vertex sits at `angle_deg`.
int position_at(double angle_deg) {
  long p = std::lround((105.0 - angle_deg) / 30.0);
  return static_cast<int>(((p % 12) + 12) % 12);
}

std::string kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::Square: return "square";
    case FaceKind::Hexagon: return "hexagon";
    case FaceKind::Dodecagon: return "dodecagon";
  }
  return "?";
}

FaceKind kind_from(const std::string& s) {
  if (s == "square") return FaceKind::Square;
  if (s == "hexagon") return FaceKind::Hexagon;
  if (s == "dodecagon") return FaceKind::Dodecagon;
  throw std::invalid_argument("unknown face kind '" + s + "'");
}

void centroid(const TilingPatch& patch, const Face& f, double& cx, double& cy) {
  cx = cy = 0.0;
  for (int v : f.vertices) {
    cx += patch.vertices[v].x;
    cy += patch.vertices[v].y;
  }
  cx /= f.vertices.size();
  cy /= f.vertices.size();
}

Face ccw_face(const TilingPatch& patch, FaceKind kind, std::vector<int> verts) {
  Face f{kind, verts};
  double cx, cy;
  centroid(patch, f, cx, cy);
  std::sort(f.vertices.begin(), f.vertices.end(), [&](int a, int b) {
    return std::atan2(patch.vertices[a].y - cy, patch.vertices[a].x - cx) <
           std::atan2(patch.vertices[b].y - cy, patch.vertices[b].x - cx);
  });
  return f;
}

}  // namespace

std::vector<std::pair<int, int>> TilingPatch::edges() const {
  std::set<std::pair<int, int>> out;
  for (const Face& f : faces)
    for (size_t i = 0; i < f.vertices.size(); ++i)
      out.insert(std::minmax(f.vertices[i], f.vertices[(i + 1) % f.vertices.size()]));
  return {out.begin(), out.end()};
}

int TilingPatch::count(FaceKind k) const {
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [&](const Face& f) { return f.kind == k; }));
}

std::vector<int> TilingPatch::faces_at(int v) const {
  std::vector<std::pair<double, int>> around;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    if (std::count(faces[i].vertices.begin(), faces[i].vertices.end(), v)) {
      double cx, cy;
      centroid(*this, faces[i], cx, cy);
      around.push_back({std::atan2(cy - vertices[v].y, cx - vertices[v].x), i});
    }
  std::sort(around.begin(), around.end());
  std::vector<int> out;
  for (auto [a, i] : around) out.push_back(i);
  return out;
}

bool TilingPatch::is_interior(int v) const {
  double total = 0.0;
  for (int f : faces_at(v)) total += interior_angle(*this, f, v);
  return std::abs(total - 2 * kPi) < 1e-9;
}

double interior_angle(const TilingPatch& patch, int face, int v) {
  const auto& vs = patch.faces.at(face).vertices;
  auto it = std::find(vs.begin(), vs.end(), v);
  if (it == vs.end()) throw std::invalid_argument("vertex not on face");
  size_t i = it - vs.begin(), n = vs.size();
  const TileVertex& a = patch.vertices[vs[(i + n - 1) % n]];
  const TileVertex& b = patch.vertices[v];
  const TileVertex& c = patch.vertices[vs[(i + 1) % n]];
  double ux = a.x - b.x, uy = a.y - b.y, wx = c.x - b.x, wy = c.y - b.y;
  return std::acos(std::clamp((ux * wx + uy * wy) / (std::hypot(ux, uy) * std::hypot(wx, wy)), -1.0, 1.0));
}

TilingPatch generate_tiling(const TriadGraph& component, int rings) {
  if (rings < 0) throw std::invalid_argument("rings must be non-negative");
  if (component.triads.size() != 12) throw std::invalid_argument("an Archimedean component has 12 chords");
  const double circumradius = 1.0 / (2.0 * std::sin(deg(15)));
  const double inradius = 1.0 / (2.0 * std::tan(deg(15)));
  const double spacing = 2.0 * inradius + 1.0;

  TilingPatch patch;
  patch.rings = rings;
  std::map<std::pair<int, int>, int> cell;  // axial lattice coordinate -> dodecagon index
  std::vector<std::pair<double, double>> centres;
  for (int a = -rings; a <= rings; ++a)
    for (int b = -rings; b <= rings; ++b) {
      if (std::max({std::abs(a), std::abs(b), std::abs(a + b)}) > rings) continue;
      cell[{a, b}] = static_cast<int>(centres.size());
      centres.push_back({spacing * (a + 0.5 * b), spacing * (std::sqrt(3.0) / 2.0 * b)});
    }

  for (size_t k = 0; k < centres.size(); ++k) {
    std::vector<int> ring;
    for (int p = 0; p < 12; ++p) {
      double th = deg(105.0 - 30.0 * p);
      patch.vertices.push_back({centres[k].first + circumradius * std::cos(th),
                                centres[k].second + circumradius * std::sin(th),
                                component.graph.vertex(p).label});
      ring.push_back(static_cast<int>(12 * k + p));
    }
    patch.faces.push_back(ccw_face(patch, FaceKind::Dodecagon, ring));
  }

  // The two vertices of dodecagon k on the edge facing `angle_deg`.
  auto facing = [&](int k, double angle_deg) {
    return std::array<int, 2>{12 * k + position_at(angle_deg + 15), 12 * k + position_at(angle_deg - 15)};
  };
  auto angle_to = [&](int from, double x, double y) {
    return std::atan2(y - centres[from].second, x - centres[from].first) * 180.0 / kPi;
  };

  const std::array<std::pair<int, int>, 3> steps = {{{1, 0}, {0, 1}, {-1, 1}}};
  for (auto [key, k] : cell)
    for (auto [da, db] : steps) {
      auto it = cell.find({key.first + da, key.second + db});
      if (it == cell.end()) continue;
      int n = it->second;
      std::vector<int> verts;
      for (int v : facing(k, angle_to(k, centres[n].first, centres[n].second))) verts.push_back(v);
      for (int v : facing(n, angle_to(n, centres[k].first, centres[k].second))) verts.push_back(v);
      patch.faces.push_back(ccw_face(patch, FaceKind::Square, verts));
    }

  const std::array<std::array<std::pair<int, int>, 3>, 2> triangles = {{
      {{{0, 0}, {1, 0}, {0, 1}}},
      {{{1, 0}, {0, 1}, {1, 1}}},
  }};
  // Anchors run one step past the patch so triangles anchored outside it are seen.
  for (int a = -rings - 1; a <= rings; ++a)
    for (int b = -rings - 1; b <= rings; ++b)
      for (const auto& tri : triangles) {
        std::array<int, 3> ids;
        bool present = true;
        for (int i = 0; i < 3; ++i) {
          auto it = cell.find({a + tri[i].first, b + tri[i].second});
          if (it == cell.end()) present = false;
          else ids[i] = it->second;
        }
        if (!present) continue;
        double gx = 0, gy = 0;
        for (int id : ids) {
          gx += centres[id].first / 3.0;
          gy += centres[id].second / 3.0;
        }
        std::vector<int> verts;
        for (int id : ids)
          for (int v : facing(id, angle_to(id, gx, gy))) verts.push_back(v);
        patch.faces.push_back(ccw_face(patch, FaceKind::Hexagon, verts));
      }

  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (int f = 0; f < static_cast<int>(patch.faces.size()); ++f) {
    const auto& vs = patch.faces[f].vertices;
    for (size_t i = 0; i < vs.size(); ++i) by_edge[std::minmax(vs[i], vs[(i + 1) % vs.size()])].push_back(f);
  }
  std::set<std::pair<int, int>> adj;
  for (const auto& [e, fs] : by_edge)
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = i + 1; j < fs.size(); ++j) adj.insert(std::minmax(fs[i], fs[j]));
  patch.face_adjacency.assign(adj.begin(), adj.end());
  return patch;
}

std::string export_svg(const TilingPatch& patch) {
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& v : patch.vertices) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  const double margin = 1.0, scale = 40.0;
  auto sx = [&](double x) { return (x - minx + margin) * scale; };
  auto sy = [&](double y) { return (maxy - y + margin) * scale; };  // SVG y grows downward

  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (maxx - minx + 2 * margin) * scale
      << "\" height=\"" << (maxy - miny + 2 * margin) * scale << "\">\n"
      << "<style>.dodecagon{fill:#f4e7c5}.hexagon{fill:#c9dbe8}.square{fill:#d9c2d9}"
      << "polygon{stroke:#333;stroke-width:1}text{font:9px sans-serif;text-anchor:middle}</style>\n";
  for (const Face& f : patch.faces) {
    out << "<polygon class=\"" << kind_name(f.kind) << "\" points=\"";
    for (size_t i = 0; i < f.vertices.size(); ++i) {
      const auto& v = patch.vertices[f.vertices[i]];
      out << (i ? " " : "") << sx(v.x) << ',' << sy(v.y);
    }
    out << "\"/>\n";
  }
  for (const auto& v : patch.vertices)
    out << "<text x=\"" << sx(v.x) << "\" y=\"" << sy(v.y) << "\">" << v.label << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

nlohmann::json export_json(const TilingPatch& patch) {
  nlohmann::json j;
  j["rings"] = patch.rings;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : patch.vertices) j["vertices"].push_back({{"x", v.x}, {"y", v.y}, {"label", v.label}});
  j["faces"] = nlohmann::json::array();
  for (const auto& f : patch.faces) j["faces"].push_back({{"kind", kind_name(f.kind)}, {"vertices", f.vertices}});
  j["face_adjacency"] = patch.face_adjacency;
  return j;
}

TilingPatch import_json(const nlohmann::json& j) {
  TilingPatch p;
  p.rings = j.at("rings").get<int>();
  for (const auto& v : j.at("vertices"))
    p.vertices.push_back({v.at("x").get<double>(), v.at("y").get<double>(), v.at("label").get<std::string>()});
  for (const auto& f : j.at("faces"))
    p.faces.push_back({kind_from(f.at("kind").get<std::string>()), f.at("vertices").get<std::vector<int>>()});
  p.face_adjacency = j.at("face_adjacency").get<std::vector<std::pair<int, int>>>();
  return p;
}

}  // namespace tonnetz

#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "tonnetz/builders.h"

namespace tonnetz {

enum class FaceKind { Square = 4, Hexagon = 6, Dodecagon = 12 };

struct TileVertex {
  double x = 0.0;
  double y = 0.0;
  std::string label;
  bool operator==(const TileVertex&) const = default;
};

struct Face {
  FaceKind kind = FaceKind::Dodecagon;
  std::vector<int> vertices;  // counter-clockwise
  bool operator==(const Face&) const = default;
};

struct TilingPatch {
  std::vector<TileVertex> vertices;
  std::vector<Face> faces;
  std::vector<std::pair<int, int>> face_adjacency;  // faces sharing an edge, i < j
  int rings = 0;
  bool operator==(const TilingPatch&) const = default;

  std::vector<std::pair<int, int>> edges() const;  // unique, i < j
  int count(FaceKind k) const;
  // Faces around vertex v, in order of the direction of their centres.
  std::vector<int> faces_at(int v) const;
  // A vertex whose faces close up a full turn.
  bool is_interior(int v) const;
};

// {4,6,12} patch: dodecagons with unit edges on a hexagonal lattice of the
// given radius, squares between neighbouring dodecagons, hexagons where three
// meet. Every dodecagon carries the component's labels, position p sitting at
// angle 105 - 30p degrees.
TilingPatch generate_tiling(const TriadGraph& component, int rings);

// Angle subtended at v by face f, in radians.
double interior_angle(const TilingPatch& patch, int face, int v);

std::string export_svg(const TilingPatch& patch);
nlohmann::json export_json(const TilingPatch& patch);
TilingPatch import_json(const nlohmann::json& j);

}  // namespace tonnetz

#pragma once

#include <array>
#include <string>
#include <vector>

#include "tonnetz/graph.h"
#include "tonnetz/incidence.h"
#include "tonnetz/pitch.h"

namespace tonnetz {

enum class TonnetzKind { Eulerian, Pentatonic, Hexachordal, ArchimedeanMajor, ArchimedeanMinor };

// A graph whose vertices are triads; triads[v] is the chord at vertex v.
struct TriadGraph {
  LabeledGraph graph;
  std::vector<Triad> triads;
  int vertex_of(const Triad& t) const;  // throws GraphError if absent
};

struct EulerianTonnetz : TriadGraph {
  IncidenceStructure structure;  // majors as points, minors as lines
};

// Majors are White vertices 0..11, minors Black 12..23, both by root.
EulerianTonnetz build_eulerian();

// Both share-one-tone components. Vertices are numbered along the circle that
// steps the root up a fourth and alternates quality: component 0 runs
// CM, Fm, BbM, Ebm, ... and component 1 runs DbM, F#m, BM, Em, ...
std::array<TriadGraph, 2> build_archimedean();
// All 24 triads under the share-one-tone rule, coloured like the Eulerian graph.
TriadGraph build_archimedean_full();

enum class EdgeClass { Parallel, Relative, LeadingTone };
std::string to_string(EdgeClass c);
// Throws GraphError unless a and b are Eulerian neighbours.
EdgeClass classify_pair(const Triad& a, const Triad& b);
EdgeClass classify_edge(const TriadGraph& g, int edge_id);
std::vector<int> parallel_edges(const TriadGraph& g);

struct PentatonicTonnetz {
  std::vector<std::string> labels;
  LabeledGraph graph;
  IncidenceStructure structure;  // duads as points, triples as lines
};
PentatonicTonnetz build_pentatonic(const std::vector<std::string>& labels = {"C", "D", "E", "G", "A"});

struct Duad {
  int i = 0, j = 0;  // 0-based, i < j
  bool disjoint(const Duad& o) const { return i != o.i && i != o.j && j != o.i && j != o.j; }
  auto operator<=>(const Duad&) const = default;
};

struct Syntheme {
  std::array<Duad, 3> duads;  // ascending
  bool contains(const Duad& d) const;
  bool shares_duad(const Syntheme& o) const;
  auto operator<=>(const Syntheme&) const = default;
};

struct Total {
  char letter = 'a';
  std::array<int, 5> synthemes{};  // indices into the syntheme list, ascending
};

struct HexachordalTonnetz {
  std::vector<std::string> labels;
  std::vector<Duad> duads;            // lexicographic
  std::vector<Syntheme> synthemes;    // lexicographic
  std::vector<Total> totals;          // lettered a..f
  LabeledGraph graph;
  IncidenceStructure structure;       // duads as points, synthemes as lines

  std::string duad_label(const Duad& d) const;
  std::string syntheme_label(int s) const;  // e.g. "12,34,56"
  int duad_index(const Duad& d) const;
  int syntheme_index(const Syntheme& s) const;
};

// Totals: a is the lexicographically first; every other total shares exactly
// one syntheme with a, and they take letters b..f in the order of that shared
// syntheme within a.
HexachordalTonnetz build_hexachordal(
    const std::vector<std::string>& labels = {"1", "2", "3", "4", "5", "6"});

struct TableRow {
  std::string key;
  std::vector<std::string> cells;
  bool operator==(const TableRow&) const = default;
};

struct SynthemeTables {
  std::vector<TableRow> letters_to_numbers;   // "ab" -> 12 34 56
  std::vector<TableRow> numbers_to_letters;   // "12" -> ab cd ef
  std::vector<TableRow> letter_totals;        // "a" -> the five synthemes of total a
  std::vector<TableRow> number_totals;        // "1" -> letter synthemes for 12..16
};
SynthemeTables syntheme_tables(const HexachordalTonnetz& h);

}  // namespace tonnetz

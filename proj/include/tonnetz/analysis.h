#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tonnetz/builders.h"
#include "tonnetz/graph.h"
#include "tonnetz/pitch.h"

namespace tonnetz {

struct CycleReport {
  Cycle cycle;
  int length = 0;
  int p_count = 0;
  std::string family;  // "3p-hexacycle", with a nickname in brackets when one exists
};

// Number of Parallel edges on a cycle of the Eulerian tonnetz.
int p_count(const EulerianTonnetz& t, const Cycle& c);
std::string family_name(int length, int p);
CycleReport report_cycle(const EulerianTonnetz& t, const Cycle& c);

struct CensusRow {
  int length = 0;
  int p = 0;
  int count = 0;
};
// Rows ordered by length, then p descending. max_length is capped at 14.
std::vector<CensusRow> census(const EulerianTonnetz& t, int max_length);
std::vector<CycleReport> cycles_with(const EulerianTonnetz& t, int length, std::optional<int> p = std::nullopt);

// The single 24-cycle left after removing the parallel edges.
Cycle perimeter_cycle(const EulerianTonnetz& t);

struct ProgressionStep {
  Triad from;
  Triad to;
  bool adjacent = false;
  std::optional<EdgeClass> edge_class;
};

struct ProgressionReport {
  std::vector<Triad> chords;
  std::vector<ProgressionStep> steps;
  bool is_path = false;  // every step adjacent and no chord repeats
  std::vector<CycleReport> containing_cycles;
};
// Containing cycles are searched up to max_length (at most 14).
ProgressionReport validate_progression(const EulerianTonnetz& t, const std::vector<Triad>& prog,
                                       int max_length = 14);

// Vertex half way round an even cycle.
int polar_opposite(const Cycle& c, int v);

struct Spacing {
  bool equal = false;
  int gap = 0;  // common gap when equal
};
Spacing equally_spaced(const Cycle& c, const std::vector<int>& vs);

// Bbm GbM F#m AM C#m EM Em GM Gm BbM, closing back on Bbm.
CycleReport parsifal_cycle(const EulerianTonnetz& t);
std::vector<Triad> parsifal_chords();

std::vector<Triad> triads_in_tetrachord(const PitchClassSet& s);

}  // namespace tonnetz

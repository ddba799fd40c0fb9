#include "tonnetz/pitch.h"

#include <cmath>
#include <sstream>

namespace tonnetz {

namespace {

constexpr std::array<const char*, 12> kMajorSpelling = {
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B"};
constexpr std::array<const char*, 12> kMinorSpelling = {
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};

int letter_value(char c) {
  switch (c) {
    case 'C': return 0;
    case 'D': return 2;
    case 'E': return 4;
    case 'F': return 5;
    case 'G': return 7;
    case 'A': return 9;
    case 'B': return 11;
    default: return -1;
  }
}

}  // namespace

PitchClassSet::PitchClassSet(std::initializer_list<int> pcs) {
  for (int p : pcs) insert(PitchClass(p));
}

PitchClassSet PitchClassSet::from_bits(std::bitset<12> b) {
  PitchClassSet s;
  s.bits_ = b;
  return s;
}

std::vector<int> PitchClassSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 12; ++i)
    if (bits_.test(i)) out.push_back(i);
  return out;
}

std::vector<int> PitchClassSet::interval_pattern(PitchClass from) const {
  std::vector<int> rotated;
  for (int k = 0; k < 12; ++k) {
    PitchClass p = from + k;
    if (contains(p)) rotated.push_back(k);
  }
  std::vector<int> gaps;
  for (size_t i = 0; i < rotated.size(); ++i) {
    int next = i + 1 < rotated.size() ? rotated[i + 1] : 12 + rotated.front();
    gaps.push_back(next - rotated[i]);
  }
  return gaps;
}

PitchClassSet Triad::pitch_classes() const {
  int third = quality == Quality::Major ? 4 : 3;
  PitchClassSet s;
  s.insert(root);
  s.insert(root + third);
  s.insert(root + 7);
  return s;
}

std::string Triad::name() const {
  if (quality == Quality::Major) return std::string(kMajorSpelling[root.value()]) + "M";
  return std::string(kMinorSpelling[root.value()]) + "m";
}

Triad Triad::from_index(int i) {
  return Triad{PitchClass(i % 12), i >= 12 ? Quality::Minor : Quality::Major};
}

Triad parse_triad(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("bad chord name '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.size() > 3) throw fail("expected <A-G>[#|b]<M|m>");
  int v = letter_value(text[0]);
  if (v < 0) throw fail("unknown letter");
  size_t pos = 1;
  if (text.size() == 3) {
    if (text[1] == '#') v += 1;
    else if (text[1] == 'b') v -= 1;
    else throw fail("unknown accidental");
    pos = 2;
  }
  Quality q;
  if (text[pos] == 'M') q = Quality::Major;
  else if (text[pos] == 'm') q = Quality::Minor;
  else throw fail("quality must be M or m");
  return Triad{PitchClass(v), q};
}

std::vector<Triad> parse_progression(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Triad> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_triad(tok));
  return out;
}

std::string pitch_name(PitchClass p) { return kMajorSpelling[p.value()]; }

std::vector<Triad> all_triads() {
  std::vector<Triad> out;
  for (int i = 0; i < 24; ++i) out.push_back(Triad::from_index(i));
  return out;
}

int shared_tones(const Triad& a, const Triad& b) {
  return (a.pitch_classes() & b.pitch_classes()).size();
}

namespace {

std::vector<Triad> opposite_sharing(const Triad& t, int n) {
  Quality other = t.quality == Quality::Major ? Quality::Minor : Quality::Major;
  std::vector<Triad> out;
  for (int r = 0; r < 12; ++r) {
    Triad u{PitchClass(r), other};
    if (shared_tones(t, u) == n) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<Triad> eulerian_neighbors(const Triad& t) { return opposite_sharing(t, 2); }
std::vector<Triad> archimedean_neighbors(const Triad& t) { return opposite_sharing(t, 1); }

std::array<PitchClassSet, 3> diminished_sevenths() {
  std::array<PitchClassSet, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 4; ++k) out[i].insert(PitchClass(i + 3 * k));
  return out;
}

std::array<PitchClassSet, 3> octatonic_scales() {
  auto [x, y, z] = diminished_sevenths();
  return {x | y, y | z, z | x};
}

AugmentedFamily augmented_and_wholetone() {
  AugmentedFamily f;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 3; ++k) f.augmented[r].insert(PitchClass(r + 4 * k));
  int w = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      PitchClassSet h = f.augmented[i] | f.augmented[j];
      f.hexachords.push_back(h);
      // Whole-tone hexachords are the unions of same-parity augmented triads.
      if ((i - j) % 2 == 0) f.whole_tone[w++] = h;
    }
  return f;
}

std::vector<Triad> triads_in_set(const PitchClassSet& s) {
  std::vector<Triad> out;
  for (const Triad& t : all_triads())
    if (t.pitch_classes().subset_of(s)) out.push_back(t);
  return out;
}

double FrequencyRatio::value() const { return std::exp2(k / 5.0); }

std::array<FrequencyRatio, 5> pentatonic_ratios() {
  return {{{0, "C"}, {1, "D"}, {2, "E"}, {3, "G"}, {4, "A"}}};
}

}  // namespace tonnetz

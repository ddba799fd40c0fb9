#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tonnetz {

// Semitones above C, reduced mod 12.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int v) : value_(((v % 12) + 12) % 12) {}
  constexpr int value() const { return value_; }
  constexpr PitchClass operator+(int k) const { return PitchClass(value_ + k); }
  constexpr auto operator<=>(const PitchClass&) const = default;

 private:
  int value_ = 0;
};

enum class Quality { Major, Minor };

class PitchClassSet {
 public:
  PitchClassSet() = default;
  PitchClassSet(std::initializer_list<int> pcs);
  static PitchClassSet from_bits(std::bitset<12> b);

  void insert(PitchClass p) { bits_.set(p.value()); }
  bool contains(PitchClass p) const { return bits_.test(p.value()); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  bool subset_of(const PitchClassSet& o) const { return (bits_ & ~o.bits_).none(); }
  std::vector<int> members() const;  // ascending
  std::bitset<12> bits() const { return bits_; }

  PitchClassSet operator|(const PitchClassSet& o) const { return from_bits(bits_ | o.bits_); }
  PitchClassSet operator&(const PitchClassSet& o) const { return from_bits(bits_ & o.bits_); }
  bool operator==(const PitchClassSet& o) const { return bits_ == o.bits_; }
  bool operator<(const PitchClassSet& o) const { return bits_.to_ulong() < o.bits_.to_ulong(); }

  // Successive differences of the ascending members starting at `from`,
  // wrapping back to `from`.
  std::vector<int> interval_pattern(PitchClass from) const;

 private:
  std::bitset<12> bits_;
};

struct Triad {
  PitchClass root;
  Quality quality = Quality::Major;

  PitchClassSet pitch_classes() const;
  std::string name() const;
  // Dense index: majors 0..11, minors 12..23, by root.
  int index() const { return root.value() + (quality == Quality::Minor ? 12 : 0); }
  static Triad from_index(int i);

  auto operator<=>(const Triad& o) const { return index() <=> o.index(); }
  bool operator==(const Triad& o) const { return index() == o.index(); }
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "<A-G>[#|b]<M|m>", any enharmonic spelling.
Triad parse_triad(std::string_view text);
std::vector<Triad> parse_progression(std::string_view text);
std::string pitch_name(PitchClass p);

std::vector<Triad> all_triads();
int shared_tones(const Triad& a, const Triad& b);
// Opposite-quality triads sharing exactly two tones.
std::vector<Triad> eulerian_neighbors(const Triad& t);
// Opposite-quality triads sharing exactly one tone.
std::vector<Triad> archimedean_neighbors(const Triad& t);

std::array<PitchClassSet, 3> diminished_sevenths();  // X, Y, Z
std::array<PitchClassSet, 3> octatonic_scales();     // O12, O23, O31

struct AugmentedFamily {
  std::array<PitchClassSet, 4> augmented;
  std::vector<PitchClassSet> hexachords;  // pairwise unions, (i,j) lex order
  std::array<PitchClassSet, 2> whole_tone;
};
AugmentedFamily augmented_and_wholetone();

std::vector<Triad> triads_in_set(const PitchClassSet& s);

struct FrequencyRatio {
  int k = 0;  // ratio 2^(k/5)
  std::string label;
  double value() const;
};
std::array<FrequencyRatio, 5> pentatonic_ratios();

}  // namespace tonnetz

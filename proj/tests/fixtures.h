#pragma once

// Published chord sequences and syntheme tables, transcribed by hand.

#include <string>
#include <vector>

#include "tonnetz/builders.h"
#include "tonnetz/graph.h"
#include "tonnetz/pitch.h"

namespace tonnetz::fixtures {

using Chords = std::vector<std::string>;

// The four thrice-parallel hexacycles.
inline const std::vector<Chords> kHexatonic = {
    {"CM", "Cm", "AbM", "G#m", "EM", "Em"},
    {"FM", "Fm", "DbM", "C#m", "AM", "Am"},
    {"BbM", "Bbm", "GbM", "F#m", "DM", "Dm"},
    {"EbM", "Ebm", "BM", "Bm", "GM", "Gm"},
};

inline const Chords kTwiceParallelCM = {"CM", "Am", "FM", "Fm", "AbM", "Cm"};
inline const Chords kTwiceParallelFM = {"FM", "Dm", "BbM", "Bbm", "DbM", "Fm"};
inline const Chords kDecacycle = {"CM", "Am", "FM", "Dm", "BbM", "Bbm", "DbM", "Fm", "AbM", "Cm"};
inline const Chords kTwiceParallelBbM = {"BbM", "Gm", "EbM", "Ebm", "GbM", "Bbm"};
inline const Chords kTetrakaidecacycle = {"CM",  "Am", "FM",  "Dm",  "BbM", "Gm", "EbM",
                                          "Ebm", "GbM", "Bbm", "DbM", "Fm", "AbM", "Cm"};
// Octatonic cycle through CM, from the chords built on O12.
inline const Chords kOctatonicCM = {"CM", "Am", "AM", "F#m", "GbM", "Ebm", "EbM", "Cm"};
inline const Chords kParsifal = {"Bbm", "GbM", "Gbm", "AM", "Dbm", "EM", "Em", "GM", "Gm", "BbM"};

inline const Chords kWagner = {"G#m", "EM"};
inline const Chords kChopin = {"G#m", "BM", "Ebm", "EbM", "Gm", "BbM"};
inline const Chords kTchaikovsky = {"G#m", "AbM", "Cm", "EbM"};

// Resolves enharmonic spellings through the parser.
inline std::vector<int> vertices(const TriadGraph& t, const Chords& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(t.vertex_of(parse_triad(n)));
  return out;
}
inline Cycle cycle(const TriadGraph& t, const Chords& names) {
  return make_cycle(t.graph, vertices(t, names));
}

struct Row {
  std::string key;
  std::vector<std::string> cells;
};

inline const std::vector<Row> kLettersToNumbers = {
    {"ab", {"12", "34", "56"}}, {"ac", {"13", "25", "46"}}, {"ad", {"14", "26", "35"}},
    {"ae", {"15", "24", "36"}}, {"af", {"16", "23", "45"}}, {"bc", {"16", "24", "35"}},
    {"bd", {"15", "23", "46"}}, {"be", {"13", "26", "45"}}, {"bf", {"14", "25", "36"}},
    {"cd", {"12", "36", "45"}}, {"ce", {"14", "23", "56"}}, {"cf", {"15", "26", "34"}},
    {"de", {"16", "25", "34"}}, {"df", {"13", "24", "56"}}, {"ef", {"12", "35", "46"}},
};

inline const std::vector<Row> kNumbersToLetters = {
    {"12", {"ab", "cd", "ef"}}, {"13", {"ac", "be", "df"}}, {"14", {"ad", "bf", "ce"}},
    {"15", {"ae", "bd", "cf"}}, {"16", {"af", "bc", "de"}}, {"23", {"af", "bd", "ce"}},
    {"24", {"ae", "bc", "df"}}, {"25", {"ac", "bf", "de"}}, {"26", {"ad", "be", "cf"}},
    {"34", {"ab", "cf", "de"}}, {"35", {"ad", "bc", "ef"}}, {"36", {"ae", "bf", "cd"}},
    {"45", {"af", "be", "cd"}}, {"46", {"ac", "bd", "ef"}}, {"56", {"ab", "ce", "df"}},
};

inline const std::vector<Row> kLetterTotals = {
    {"a", {"12,34,56", "13,25,46", "14,26,35", "15,24,36", "16,23,45"}},
    {"b", {"12,34,56", "16,24,35", "15,23,46", "13,26,45", "14,25,36"}},
    {"c", {"13,25,46", "16,24,35", "12,36,45", "14,23,56", "15,26,34"}},
    {"d", {"14,26,35", "15,23,46", "12,36,45", "16,25,34", "13,24,56"}},
    {"e", {"15,24,36", "13,26,45", "14,23,56", "16,25,34", "12,35,46"}},
    {"f", {"16,23,45", "14,25,36", "15,26,34", "13,24,56", "12,35,46"}},
};

inline const std::vector<Row> kNumberTotals = {
    {"1", {"ab,cd,ef", "ac,be,df", "ad,bf,ce", "ae,bd,cf", "af,bc,de"}},
    {"2", {"ab,cd,ef", "af,bd,ce", "ae,bc,df", "ac,bf,de", "ad,be,cf"}},
    {"3", {"ab,cf,de", "ad,bc,ef", "ae,bf,cd", "ac,be,df", "af,bd,ce"}},
    {"4", {"af,be,cd", "ac,bd,ef", "ad,bf,ce", "ae,bc,df", "ab,cf,de"}},
    {"5", {"ab,ce,df", "ae,bd,cf", "ac,bf,de", "ad,bc,ef", "af,be,cd"}},
    {"6", {"af,bc,de", "ad,be,cf", "ae,bf,cd", "ac,bd,ef", "ab,ce,df"}},
};

}  // namespace tonnetz::fixtures

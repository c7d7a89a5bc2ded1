#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/word.hpp"

namespace charvar {

// A marked free group: the fundamental group of a surface (closed or punctured)
// presented on free generators, or a plain alphabet such as the Schreier
// generators of a covering subgroup.
//
// Closed surface of genus g:   rank 2g, relator [a1,b1]...[ag,bg].
// Punctured surface (b >= 1):  rank 2g+b-1, free; puncture words
//   c_j = x_{2g+j} for j < b and c_b = ([a1,b1]...[ag,bg] c1...c_{b-1})^{-1}.
struct GroupPresentation {
  int rank = 0;
  std::vector<std::string> names;     // generator names, size == rank
  std::optional<Word> relator;
  std::vector<Word> punctures;        // puncture words (empty for closed/plain)
  int genus = 0;
  int num_punctures = 0;
  bool surface = false;               // true when built by surface_presentation

  bool closed() const { return surface && num_punctures == 0; }
};

inline Word commutator_product(int genus) {
  Word w;
  for (int i = 0; i < genus; ++i)
    w = w * commutator(Word::gen(2 * i + 1), Word::gen(2 * i + 2));
  return w;
}

// Generators a1,b1,...,ag,bg,c1,...,c_{b-1} mapped to indices 1..rank.
inline std::vector<std::string> surface_generator_names(int genus, int punctures) {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  for (int j = 1; j <= punctures - 1; ++j) names.push_back("c" + std::to_string(j));
  return names;
}

inline GroupPresentation surface_presentation(int genus, int punctures) {
  if (genus < 0 || punctures < 0)
    throw Error("InvalidSurface", "genus and puncture count must be nonnegative");
  if (genus == 0 && punctures <= 1)
    throw Error("InvalidSurface", "sphere and disk have trivial fundamental group");

  GroupPresentation p;
  p.genus = genus;
  p.num_punctures = punctures;
  p.surface = true;
  if (punctures == 0) {
    p.rank = 2 * genus;
    p.relator = commutator_product(genus);
  } else {
    p.rank = 2 * genus + punctures - 1;
    Word prefix = commutator_product(genus);
    for (int j = 1; j < punctures; ++j) {
      Word c = Word::gen(2 * genus + j);
      p.punctures.push_back(c);
      prefix = prefix * c;
    }
    p.punctures.push_back(inverse(prefix));
  }
  p.names = surface_generator_names(genus, punctures);
  return p;
}

// Plain free alphabet s1..sk (Schreier generators, auxiliary groups).
inline GroupPresentation plain_alphabet(int rank, const std::string& prefix = "s") {
  GroupPresentation p;
  p.rank = rank;
  for (int i = 1; i <= rank; ++i) p.names.push_back(prefix + std::to_string(i));
  return p;
}

// Attaching word of the surface 2-cell without the last puncture:
// U = [a1,b1]...[ag,bg] c1...c_{b-1}; the last puncture word is U^{-1}.
// For closed surfaces this is the relator.
inline Word boundary_word(const GroupPresentation& p) {
  if (!p.surface) throw Error("NotASurface", "boundary word needs a surface presentation");
  if (p.num_punctures == 0) return *p.relator;
  Word w = commutator_product(p.genus);
  for (int j = 1; j < p.num_punctures; ++j) w = w * Word::gen(2 * p.genus + j);
  return w;
}

inline int euler_characteristic(const GroupPresentation& p) {
  return 2 - 2 * p.genus - p.num_punctures;
}

}  // namespace charvar

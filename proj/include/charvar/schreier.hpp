#pragma once

#include <deque>
#include <vector>

#include "charvar/covering.hpp"

namespace charvar {

// Schreier coset structure for the left cosets gamma_i Delta.
//
// The BFS transversal starts at sheet 1 with gamma_1 = e and scans generators
// in presentation order, positive letters before inverses; the representative
// of a newly reached coset is letter * gamma_i (left multiplication, matching
// gamma gamma_i = gamma_{j_i} delta_i).  The Schreier generator of (x, i) is
//   s_{x,i} = gamma_{sigma(x)(i)}^{-1} x gamma_i,
// trivial ones omitted; nontrivial ones are indexed generator-major.
struct CosetStructure {
  std::vector<Word> transversal;      // size d, transversal[0] = e (sheet 1)
  std::vector<Word> schreier_gens;    // nontrivial Schreier generators, as base words
  GroupPresentation schreier_alphabet;  // plain alphabet s1..sm
  // entry(gen, sheet): target sheet and Schreier index (0 = trivial generator)
  struct Entry {
    int target = 0;
    int schreier_index = 0;  // 1-based into schreier_gens, 0 if trivial
  };
  std::vector<std::vector<Entry>> table;  // [gen-1][sheet-1]

  const Word& rep(int sheet) const { return transversal[static_cast<std::size_t>(sheet - 1)]; }
  const Entry& entry(int gen, int sheet) const {
    return table[static_cast<std::size_t>(gen - 1)][static_cast<std::size_t>(sheet - 1)];
  }
};

inline CosetStructure schreier(const CoveringData& cov) {
  const int d = cov.degree;
  CosetStructure cs;
  cs.transversal.assign(static_cast<std::size_t>(d), Word());
  std::vector<bool> visited(static_cast<std::size_t>(d), false);
  visited[0] = true;
  std::deque<int> queue{1};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int g = 1; g <= cov.base.rank; ++g) {
      for (int sign : {+1, -1}) {
        int j = sign > 0 ? cov.perm(g).apply(i) : cov.perm(g).inverse().apply(i);
        if (!visited[static_cast<std::size_t>(j - 1)]) {
          visited[static_cast<std::size_t>(j - 1)] = true;
          cs.transversal[static_cast<std::size_t>(j - 1)] = Word::gen(g, sign) * cs.rep(i);
          queue.push_back(j);
        }
      }
    }
  }

  cs.table.assign(static_cast<std::size_t>(cov.base.rank),
                  std::vector<CosetStructure::Entry>(static_cast<std::size_t>(d)));
  for (int g = 1; g <= cov.base.rank; ++g) {
    for (int i = 1; i <= d; ++i) {
      int j = cov.perm(g).apply(i);
      Word s = inverse(cs.rep(j)) * Word::gen(g) * cs.rep(i);
      auto& e = cs.table[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(i - 1)];
      e.target = j;
      if (!s.empty()) {
        cs.schreier_gens.push_back(s);
        e.schreier_index = static_cast<int>(cs.schreier_gens.size());
      }
    }
  }
  cs.schreier_alphabet = plain_alphabet(static_cast<int>(cs.schreier_gens.size()));
  return cs;
}

// Reidemeister rewriting of a subgroup word as a word in the Schreier
// generators.  Scanning w right to left from sheet 1, each letter emits the
// Schreier generator (or its inverse) recorded in the table; the emitted
// letters accumulate on the left: w = delta_L ... delta_1.
inline Word factorize(const CoveringData& cov, const CosetStructure& cs, const Word& w) {
  if (apply_word(cov, w, 1) != 1)
    throw Error("NotInSubgroup", "word does not fix sheet 1");
  std::vector<Letter> out_reversed;
  int sheet = 1;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (it->sign > 0) {
      const auto& e = cs.entry(it->gen, sheet);
      if (e.schreier_index != 0) out_reversed.push_back(Letter{e.schreier_index, +1});
      sheet = e.target;
    } else {
      int source = cov.perm(it->gen).inverse().apply(sheet);
      const auto& e = cs.entry(it->gen, source);
      if (e.schreier_index != 0) out_reversed.push_back(Letter{e.schreier_index, -1});
      sheet = source;
    }
  }
  std::vector<Letter> out(out_reversed.rbegin(), out_reversed.rend());
  return Word(std::move(out));
}

// Substitute every Schreier letter by its base-group word.
inline Word expand_schreier_word(const CosetStructure& cs, const Word& w) {
  Word out;
  for (const auto& l : w.letters()) {
    const Word& s = cs.schreier_gens[static_cast<std::size_t>(l.gen - 1)];
    out = out * (l.sign > 0 ? s : inverse(s));
  }
  return out;
}

// One puncture of the covering surface: base puncture j, the cycle of
// sigma(c_j) it comes from, and the loop word lambda = gamma_{i0}^{-1}
// c_j^{len} gamma_{i0} based at the minimal sheet i0 of the cycle.
struct CoverPuncture {
  int base_puncture = 0;       // 1-based
  std::vector<int> cycle;      // sheets, starting at the minimal one
  int ramification = 1;        // cycle length n_y
  Word loop;                   // in base generators (an element of Delta)
  Word loop_schreier;          // the same element in Schreier letters
};

struct CoverTopology {
  int genus_Y = 0;
  std::vector<CoverPuncture> punctures_Y;
};

inline CoverTopology cover_topology(const CoveringData& cov, const CosetStructure& cs) {
  CoverTopology topo;
  for (int j = 1; j <= static_cast<int>(cov.base.punctures.size()); ++j) {
    const Word& cj = cov.base.punctures[static_cast<std::size_t>(j - 1)];
    Perm pj = coset_action(cov, cj);
    for (const auto& cyc : pj.cycles()) {
      CoverPuncture p;
      p.base_puncture = j;
      p.cycle = cyc;
      p.ramification = static_cast<int>(cyc.size());
      const Word& g0 = cs.rep(cyc.front());
      p.loop = inverse(g0) * power(cj, p.ramification) * g0;
      p.loop_schreier = factorize(cov, cs, p.loop);
      topo.punctures_Y.push_back(std::move(p));
    }
  }
  const int chi_X = euler_characteristic(cov.base);
  const int chi_Y = cov.degree * chi_X;
  const int twice_genus = 2 - chi_Y - static_cast<int>(topo.punctures_Y.size());
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw Error("TopologyMismatch", "Riemann-Hurwitz count is not an even genus");
  topo.genus_Y = twice_genus / 2;
  return topo;
}

}  // namespace charvar

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "charvar/presentation.hpp"

namespace charvar {

// Permutation of the sheets {1..d}, stored as a 1-indexed image array.
class Perm {
public:
  Perm() = default;
  static Perm identity(int d) {
    Perm p;
    p.img_.resize(static_cast<std::size_t>(d));
    std::iota(p.img_.begin(), p.img_.end(), 1);
    return p;
  }
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v - 1)])
        throw Error("NotAPermutation", "image array is not a bijection of {1..d}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int sheet) const { return img_[static_cast<std::size_t>(sheet - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (int i = 1; i <= degree(); ++i) p.img_[static_cast<std::size_t>(apply(i) - 1)] = i;
    return p;
  }

  // (a*b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm p;
    p.img_.resize(a.img_.size());
    for (int i = 1; i <= a.degree(); ++i)
      p.img_[static_cast<std::size_t>(i - 1)] = a.apply(b.apply(i));
    return p;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if (apply(i) != i) return false;
    return true;
  }

  // Cycles sorted by minimal element, each starting at its minimal element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
      if (seen[static_cast<std::size_t>(i - 1)]) continue;
      std::vector<int> cyc;
      int j = i;
      do {
        cyc.push_back(j);
        seen[static_cast<std::size_t>(j - 1)] = true;
        j = apply(j);
      } while (j != i);
      out.push_back(std::move(cyc));
    }
    return out;
  }

private:
  std::vector<int> img_;
};

// A branched covering of the base surface, encoded by the permutation
// monodromy of its unramified part: one sheet permutation per generator.
struct CoveringData {
  GroupPresentation base;
  int degree = 1;
  std::vector<Perm> perms;  // perms[i-1] = action of generator x_i on sheets

  const Perm& perm(int gen) const { return perms[static_cast<std::size_t>(gen - 1)]; }
};

// Coset action of a word: sigma(w1 w2) = sigma(w1) o sigma(w2), letters act
// right-to-left on the sheet.
inline int apply_word(const CoveringData& cov, const Word& w, int sheet) {
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    sheet = it->sign > 0 ? cov.perm(it->gen).apply(sheet) : cov.perm(it->gen).inverse().apply(sheet);
  return sheet;
}

inline Perm coset_action(const CoveringData& cov, const Word& w) {
  Perm p = Perm::identity(cov.degree);
  std::vector<int> img(static_cast<std::size_t>(cov.degree));
  for (int i = 1; i <= cov.degree; ++i) img[static_cast<std::size_t>(i - 1)] = apply_word(cov, w, i);
  return Perm(std::move(img));
}

inline bool transitive(const std::vector<Perm>& perms, int degree) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<int> stack{1};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const auto& p : perms) {
      for (int j : {p.apply(i), p.inverse().apply(i)}) {
        if (!seen[static_cast<std::size_t>(j - 1)]) {
          seen[static_cast<std::size_t>(j - 1)] = true;
          ++count;
          stack.push_back(j);
        }
      }
    }
  }
  return count == degree;
}

inline CoveringData validate_covering(const GroupPresentation& base, int degree,
                                      std::vector<Perm> perms) {
  if (degree < 1) throw Error("InvalidDegree", "degree must be >= 1");
  if (static_cast<int>(perms.size()) != base.rank)
    throw Error("AlphabetMismatch", "need one permutation per generator");
  for (const auto& p : perms)
    if (p.degree() != degree) throw Error("InvalidDegree", "permutation degree mismatch");
  if (!transitive(perms, degree))
    throw Error("Intransitive", "sheet permutations do not act transitively");
  CoveringData cov{base, degree, std::move(perms)};
  if (base.relator && !coset_action(cov, *base.relator).is_identity())
    throw Error("RelatorNotKilled", "relator permutation is not the identity");
  return cov;
}

inline CoveringData identity_covering(const GroupPresentation& base) {
  std::vector<Perm> perms(static_cast<std::size_t>(base.rank), Perm::identity(1));
  return validate_covering(base, 1, std::move(perms));
}

}  // namespace charvar

#pragma once

#include <unordered_map>
#include <vector>

#include "charvar/word.hpp"

namespace charvar {

// Element of the integral group ring Z[F], kept in normal form:
// distinct reduced words, nonzero coefficients.
class GroupRingElement {
public:
  GroupRingElement() = default;

  static GroupRingElement unit() { return single(1, Word()); }

  static GroupRingElement single(long coeff, Word w) {
    GroupRingElement e;
    if (coeff != 0) e.terms_.emplace_back(coeff, std::move(w));
    return e;
  }

  const std::vector<std::pair<long, Word>>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  void add_term(long coeff, const Word& w) {
    if (coeff == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->second == w) {
        it->first += coeff;
        if (it->first == 0) terms_.erase(it);
        return;
      }
    }
    terms_.emplace_back(coeff, w);
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [c, w] : o.terms_) add_term(c, w);
    return *this;
  }

  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [c, w] : o.terms_) add_term(-c, w);
    return *this;
  }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [ca, wa] : a.terms_)
      for (const auto& [cb, wb] : b.terms_) out.add_term(ca * cb, wa * wb);
    return out;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [c, w] : a.terms_) {
      bool found = false;
      for (const auto& [c2, w2] : b.terms_)
        if (w2 == w) { found = (c2 == c); break; }
      if (!found) return false;
    }
    return true;
  }

private:
  std::vector<std::pair<long, Word>> terms_;
};

// Fox derivative d w / d x_i.  Axioms: dx_i/dx_i = 1, dx_j/dx_i = 0 (j != i),
// dx_i^{-1}/dx_i = -x_i^{-1}, d(uv)/dx_i = du/dx_i + u dv/dx_i.
// A positive letter x_i after prefix p contributes +p, a negative one -p x_i^{-1}.
inline GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement out;
  Word prefix;
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      if (l.gen == gen) out.add_term(+1, prefix);
      prefix = prefix * Word::gen(l.gen, +1);
    } else {
      prefix = prefix * Word::gen(l.gen, -1);
      if (l.gen == gen) out.add_term(-1, prefix);
    }
  }
  return out;
}

// Fundamental identity of Fox calculus: sum_i (dw/dx_i)(x_i - 1) = w - 1.
inline bool fox_identity_holds(const Word& w, int rank) {
  GroupRingElement lhs;
  for (int i = 1; i <= rank; ++i) {
    GroupRingElement xi_minus_1;
    xi_minus_1.add_term(+1, Word::gen(i));
    xi_minus_1.add_term(-1, Word());
    lhs += fox_derivative(w, i) * xi_minus_1;
  }
  GroupRingElement rhs;
  rhs.add_term(+1, w);
  rhs.add_term(-1, Word());
  return lhs == rhs;
}

}  // namespace charvar

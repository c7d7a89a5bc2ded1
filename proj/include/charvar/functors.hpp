#pragma once

#include <vector>

#include "charvar/matrix_rep.hpp"
#include "charvar/schreier.hpp"

namespace charvar {

// Evaluate a subgroup representation (given on the Schreier alphabet) at any
// element of Delta presented as a word in the base generators.
inline Matrix evaluate_subgroup(const CoveringData& cov, const CosetStructure& cs,
                                const MatrixRep& h, const Word& base_word) {
  return evaluate(h, factorize(cov, cs, base_word));
}

// Induced representation: block (j,i) of ind(h)(x) is h(gamma_j^{-1} x gamma_i)
// when j = sigma(x)(i) and zero otherwise; for a generator x that entry is the
// Schreier generator of (x, i).  Sheet index is the outer block index, blocks
// ordered by the BFS transversal.
inline MatrixRep induce(const CoveringData& cov, const CosetStructure& cs, const MatrixRep& h) {
  if (h.group.rank != static_cast<int>(cs.schreier_gens.size()))
    throw Error("AlphabetMismatch", "representation is not on the Schreier alphabet");
  const int d = cov.degree;
  const Eigen::Index r = h.rank();
  MatrixRep out;
  out.group = cov.base;
  out.tol = h.tol;
  for (int g = 1; g <= cov.base.rank; ++g) {
    Matrix m = Matrix::Zero(d * r, d * r);
    for (int i = 1; i <= d; ++i) {
      const auto& e = cs.entry(g, i);
      Matrix block = e.schreier_index == 0 ? Matrix::Identity(r, r) : h.mat(e.schreier_index);
      m.block(static_cast<Eigen::Index>(e.target - 1) * r, static_cast<Eigen::Index>(i - 1) * r,
              r, r) = block;
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

// Pullback of a base representation to the covering: value on each Schreier
// generator is the holonomy of its base word.  Rank unchanged.
inline MatrixRep restrict_rep(const CoveringData& cov, const CosetStructure& cs,
                              const MatrixRep& rho) {
  MatrixRep out;
  out.group = cs.schreier_alphabet;
  out.tol = rho.tol;
  for (const auto& s : cs.schreier_gens) out.mats.push_back(evaluate(rho, s));
  return out;
}

// Direct image of the trivial flat line bundle: the permutation representation
// of the coset action.
inline MatrixRep trivial_direct_image(const CoveringData& cov, const CosetStructure& cs) {
  return induce(cov, cs, trivial_rep(cs.schreier_alphabet, 1));
}

// Does h extend to the closed covering surface, i.e. is every puncture
// monodromy of Y trivial?
inline bool res_image_check(const CoveringData& cov, const CosetStructure& cs,
                            const CoverTopology& topo, const MatrixRep& h, double tol = 1e-8) {
  const Eigen::Index r = h.rank();
  for (const auto& p : topo.punctures_Y) {
    if (fro(evaluate(h, p.loop_schreier) - Matrix::Identity(r, r)) > tol) return false;
  }
  return true;
}

inline MatrixRep frobenius(const CoveringData& cov, const CosetStructure& cs,
                           const CoverTopology& topo, const MatrixRep& h, double tol = 1e-8) {
  if (!res_image_check(cov, cs, topo, h, tol))
    throw Error("NotOnClosedLocus", "puncture monodromy of the cover is nontrivial");
  return induce(cov, cs, h);
}

inline MatrixRep tensor(const MatrixRep& rho1, const MatrixRep& rho2) {
  if (rho1.group.rank != rho2.group.rank)
    throw Error("AlphabetMismatch", "tensor factors live on different alphabets");
  MatrixRep out;
  out.group = rho1.group;
  out.tol = std::min(rho1.tol, rho2.tol);
  for (int g = 1; g <= rho1.group.rank; ++g) out.mats.push_back(kron(rho1.mat(g), rho2.mat(g)));
  return out;
}

inline MatrixRep direct_sum(const MatrixRep& rho, int copies) {
  const Eigen::Index n = rho.rank();
  MatrixRep out;
  out.group = rho.group;
  out.tol = rho.tol;
  for (int g = 1; g <= rho.group.rank; ++g) {
    Matrix m = Matrix::Zero(n * copies, n * copies);
    for (int c = 0; c < copies; ++c) m.block(c * n, c * n, n, n) = rho.mat(g);
    out.mats.push_back(std::move(m));
  }
  return out;
}

inline MatrixRep direct_sum(const std::vector<MatrixRep>& parts) {
  MatrixRep out;
  out.group = parts.front().group;
  Eigen::Index total = 0;
  for (const auto& p : parts) total += p.rank();
  for (int g = 1; g <= out.group.rank; ++g) {
    Matrix m = Matrix::Zero(total, total);
    Eigen::Index at = 0;
    for (const auto& p : parts) {
      m.block(at, at, p.rank(), p.rank()) = p.mat(g);
      at += p.rank();
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

inline MatrixRep conjugate_rep(const MatrixRep& rho, const Matrix& t) {
  MatrixRep out = rho;
  Matrix tinv = t.inverse();
  for (auto& m : out.mats) m = t * m * tinv;
  return out;
}

// Orbits of the subgroup's coset action on the sheets (the double-coset data
// of the Mackey formula).  The orbit of sheet 1 is always {1}.
inline std::vector<std::vector<int>> mackey_orbits(const CoveringData& cov,
                                                   const CosetStructure& cs) {
  std::vector<Perm> gens;
  for (const auto& s : cs.schreier_gens) gens.push_back(coset_action(cov, s));
  const int d = cov.degree;
  std::vector<int> owner(static_cast<std::size_t>(d), 0);
  std::vector<std::vector<int>> orbits;
  for (int i = 1; i <= d; ++i) {
    if (owner[static_cast<std::size_t>(i - 1)] != 0) continue;
    std::vector<int> orbit{i};
    owner[static_cast<std::size_t>(i - 1)] = static_cast<int>(orbits.size()) + 1;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& p : gens) {
        for (int w : {p.apply(v), p.inverse().apply(v)}) {
          if (owner[static_cast<std::size_t>(w - 1)] == 0) {
            owner[static_cast<std::size_t>(w - 1)] = static_cast<int>(orbits.size()) + 1;
            orbit.push_back(w);
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// The Mackey-formula prediction for restrict(induce(h)): one summand per
// orbit of Delta on the sheets, each the representation induced from the
// stabilizer Delta cap gamma_{i*} Delta gamma_{i*}^{-1} of the minimal sheet
// i* of the orbit, with h transported by gamma_{i*}.
inline MatrixRep mackey_decomposition(const CoveringData& cov, const CosetStructure& cs,
                                      const MatrixRep& h) {
  std::vector<MatrixRep> parts;
  for (const auto& orbit : mackey_orbits(cov, cs)) {
    std::vector<int> pos(static_cast<std::size_t>(cov.degree) + 1, 0);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      pos[static_cast<std::size_t>(orbit[k])] = static_cast<int>(k) + 1;

    std::vector<Perm> sub_perms;
    for (const auto& s : cs.schreier_gens) {
      Perm action = coset_action(cov, s);
      std::vector<int> img(orbit.size());
      for (std::size_t k = 0; k < orbit.size(); ++k)
        img[k] = pos[static_cast<std::size_t>(action.apply(orbit[k]))];
      sub_perms.emplace_back(std::move(img));
    }
    CoveringData sub = validate_covering(cs.schreier_alphabet,
                                         static_cast<int>(orbit.size()), std::move(sub_perms));
    CosetStructure sub_cs = schreier(sub);

    const Word& g0 = cs.rep(orbit.front());
    MatrixRep h_sub;
    h_sub.group = sub_cs.schreier_alphabet;
    h_sub.tol = h.tol;
    for (const auto& t : sub_cs.schreier_gens) {
      Word base_word = inverse(g0) * expand_schreier_word(cs, t) * g0;
      h_sub.mats.push_back(evaluate_subgroup(cov, cs, h, base_word));
    }
    parts.push_back(induce(sub, sub_cs, h_sub));
  }
  return direct_sum(parts);
}

// Wreath zero pattern: exactly one nonzero r x r block per block row/column,
// positioned by the coset action.
inline bool wreath_pattern_ok(const CoveringData& cov, const MatrixRep& ind, int r,
                              double tol = 1e-12) {
  const int d = cov.degree;
  for (int g = 1; g <= cov.base.rank; ++g) {
    const Matrix& m = ind.mat(g);
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (int i = 1; i <= d; ++i) {
      int j = cov.perm(g).apply(i);
      for (int jj = 1; jj <= d; ++jj) {
        double blocknorm = m.block(static_cast<Eigen::Index>(jj - 1) * r,
                                   static_cast<Eigen::Index>(i - 1) * r, r, r)
                               .norm();
        if (jj == j) {
          if (blocknorm == 0.0) return false;
        } else if (blocknorm > tol * scale) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace charvar

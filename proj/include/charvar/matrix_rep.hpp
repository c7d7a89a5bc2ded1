#pragma once

#include <optional>
#include <vector>

#include "charvar/numeric.hpp"
#include "charvar/presentation.hpp"

namespace charvar {

// A matrix representation of a marked free group: one invertible complex
// matrix per generator.  Immutable after construction.
struct MatrixRep {
  GroupPresentation group;
  std::vector<Matrix> mats;  // mats[i-1] = image of generator x_i
  double tol = 1e-8;

  int rank() const { return mats.empty() ? 0 : static_cast<int>(mats.front().rows()); }
  const Matrix& mat(int gen) const { return mats[static_cast<std::size_t>(gen - 1)]; }
};

inline Matrix evaluate(const MatrixRep& rep, const Word& w) {
  const Eigen::Index n = rep.rank();
  Matrix out = Matrix::Identity(n, n);
  for (const auto& l : w.letters()) {
    if (l.gen > static_cast<int>(rep.mats.size()))
      throw Error("AlphabetMismatch", "letter outside representation alphabet");
    if (l.sign > 0)
      out = out * rep.mat(l.gen);
    else
      out = out * rep.mat(l.gen).inverse();
  }
  return out;
}

inline double invertibility_margin(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  return sv(0) == 0.0 ? 0.0 : sv(sv.size() - 1) / sv(0);
}

inline void check_invertible(const MatrixRep& rep, double margin = 1e-12) {
  for (const auto& m : rep.mats)
    if (invertibility_margin(m) <= margin)
      throw Error("SingularGenerator", "generator matrix is numerically singular");
}

inline double relator_residual(const MatrixRep& rep) {
  if (!rep.group.relator) return 0.0;
  const Eigen::Index n = rep.rank();
  return fro(evaluate(rep, *rep.group.relator) - Matrix::Identity(n, n));
}

// Entries are i.i.d. complex Gaussian, resampled until safely invertible.
// Deterministic in the seed.
inline MatrixRep random_rep(const GroupPresentation& pres, int n, Rng& rng) {
  if (pres.relator)
    throw Error("NotFree", "random_rep samples free groups only");
  MatrixRep rep;
  rep.group = pres;
  for (int g = 0; g < pres.rank; ++g) {
    Matrix m;
    do {
      m = rng.cgauss_matrix(n, n);
    } while (invertibility_margin(m) < 1e-3);
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

inline MatrixRep random_rep(const GroupPresentation& pres, int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_rep(pres, n, rng);
}

inline MatrixRep trivial_rep(const GroupPresentation& pres, int n = 1) {
  MatrixRep rep;
  rep.group = pres;
  rep.mats.assign(static_cast<std::size_t>(pres.rank), Matrix::Identity(n, n));
  return rep;
}

// Stacked Sylvester operator for intertwiners S with S rho1(x) = rho2(x) S.
inline Matrix intertwiner_operator(const MatrixRep& rho1, const MatrixRep& rho2) {
  const Eigen::Index n1 = rho1.rank(), n2 = rho2.rank();
  const int k = rho1.group.rank;
  Matrix op(static_cast<Eigen::Index>(k) * n1 * n2, n1 * n2);
  const Matrix id1 = Matrix::Identity(n1, n1), id2 = Matrix::Identity(n2, n2);
  for (int g = 1; g <= k; ++g) {
    // vec(S A - B S) = (A^T (x) I - I (x) B) vec(S)
    op.block(static_cast<Eigen::Index>(g - 1) * n1 * n2, 0, n1 * n2, n1 * n2) =
        kron(rho1.mat(g).transpose(), id2) - kron(id1, rho2.mat(g));
  }
  return op;
}

// Commutant dimension = nullity of the stacked Sylvester operator.
inline int commutant_dimension(const MatrixRep& rep, double rel_tol = 1e-8) {
  Matrix op = intertwiner_operator(rep, rep);
  return static_cast<int>(op.cols()) - numerical_rank(op, rel_tol);
}

inline bool irreducible(const MatrixRep& rep, double rel_tol = 1e-8) {
  return commutant_dimension(rep, rel_tol) == 1;
}

// Searches the intertwiner space for an invertible element; verifies
// S rho1 S^{-1} = rho2 before returning.  None when only singular
// intertwiners exist.
inline std::optional<Matrix> conjugacy_test(const MatrixRep& rho1, const MatrixRep& rho2,
                                            double tol = 1e-8, std::uint64_t seed = 7) {
  if (rho1.rank() != rho2.rank() || rho1.group.rank != rho2.group.rank) return std::nullopt;
  const Eigen::Index n = rho1.rank();
  Matrix basis = nullspace(intertwiner_operator(rho1, rho2));
  if (basis.cols() == 0) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vector coeff(basis.cols());
    if (attempt == 0 && basis.cols() == 1)
      coeff(0) = cplx(1);
    else
      for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = rng.cgauss();
    Matrix s = unvec(basis * coeff, n, n);
    if (invertibility_margin(s) < 1e-8) continue;
    double err = 0.0;
    Matrix sinv = s.inverse();
    for (int g = 1; g <= rho1.group.rank; ++g)
      err = std::max(err, fro(s * rho1.mat(g) * sinv - rho2.mat(g)));
    if (err <= tol * std::max(1.0, fro(rho2.mat(1)))) return s;
  }
  return std::nullopt;
}

inline std::vector<cplx> character_signature(const MatrixRep& rep, const std::vector<Word>& words) {
  std::vector<cplx> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(evaluate(rep, w).trace());
  return out;
}

inline Word random_word(int rank, int max_len, Rng& rng) {
  std::vector<Letter> ls;
  const int len = static_cast<int>(rng.integer(1, static_cast<std::uint64_t>(max_len)));
  for (int t = 0; t < len; ++t) {
    int g = static_cast<int>(rng.integer(1, static_cast<std::uint64_t>(rank)));
    int sign = rng.integer(0, 1) ? +1 : -1;
    ls.push_back(Letter{g, sign});
  }
  return Word(std::move(ls));
}

}  // namespace charvar

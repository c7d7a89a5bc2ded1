#pragma once

#include <vector>

#include "charvar/matrix_rep.hpp"

namespace charvar {

// Constraint on the holonomy of one word: either equality with a fixed matrix
// (relators, trivial leaves) or membership in its conjugacy class, measured by
// characteristic-polynomial coefficients (smooth and permutation-free).
struct WordConstraint {
  Word w;
  Matrix target;
  bool conj_class_only = false;
};

inline WordConstraint relator_constraint(const Word& relator, Eigen::Index n) {
  return WordConstraint{relator, Matrix::Identity(n, n), false};
}

namespace detail {

// Faddeev-LeVerrier: characteristic polynomial coefficients (ascending) and
// the adjugate expansion adj(tI - A) = sum_k M_k t^{n-k}; dc_{n-k}/dA = -M_k^T.
struct CharPolyData {
  std::vector<cplx> coeffs;        // ascending, coeffs[n] = 1
  std::vector<Matrix> adj_terms;   // M_1..M_n
};

inline CharPolyData faddeev_leverrier(const Matrix& a) {
  const Eigen::Index n = a.rows();
  CharPolyData out;
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, cplx(0));
  out.coeffs[static_cast<std::size_t>(n)] = cplx(1);
  Matrix m = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      m = a * m + out.coeffs[static_cast<std::size_t>(n - k + 1)] * Matrix::Identity(n, n);
    }
    out.adj_terms.push_back(m);
    out.coeffs[static_cast<std::size_t>(n - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return out;
}

// Derivative of the word holonomy with respect to each generator matrix,
// as blocks J_g with d vec(eval) = sum_g J_g d vec(M_g).
inline std::vector<Matrix> word_jacobian(const MatrixRep& rep, const Word& w, Matrix* value) {
  const Eigen::Index n = rep.rank();
  const std::size_t len = w.size();
  std::vector<Matrix> suffix(len + 1);
  suffix[len] = Matrix::Identity(n, n);
  auto letter_matrix = [&](const Letter& l) -> Matrix {
    return l.sign > 0 ? rep.mat(l.gen) : rep.mat(l.gen).inverse().eval();
  };
  for (std::size_t t = len; t-- > 0;) suffix[t] = letter_matrix(w[t]) * suffix[t + 1];
  if (value) *value = suffix[0];

  std::vector<Matrix> jac(static_cast<std::size_t>(rep.group.rank),
                          Matrix::Zero(n * n, n * n));
  Matrix prefix = Matrix::Identity(n, n);
  for (std::size_t t = 0; t < len; ++t) {
    const Letter& l = w[t];
    const std::size_t g = static_cast<std::size_t>(l.gen - 1);
    if (l.sign > 0) {
      jac[g] += kron(suffix[t + 1].transpose(), prefix);
    } else {
      Matrix inv = rep.mat(l.gen).inverse();
      // d(M^{-1}) = -M^{-1} dM M^{-1}
      jac[g] -= kron((inv * suffix[t + 1]).transpose(), prefix * inv);
    }
    prefix = prefix * letter_matrix(l);
  }
  return jac;
}

}  // namespace detail

// Gauss-Newton on the stacked residual of all word constraints.  Uses the
// minimal-norm SVD step with backtracking; the seed is returned unchanged
// when it already satisfies every constraint.
inline MatrixRep solve_relator(const MatrixRep& seed, const std::vector<WordConstraint>& constraints,
                               double tol = 1e-10, int max_iters = 200) {
  const Eigen::Index n = seed.rank();
  const int k = seed.group.rank;
  MatrixRep rep = seed;

  auto residual = [&](const MatrixRep& r) -> Vector {
    std::vector<cplx> rows;
    for (const auto& c : constraints) {
      Matrix val = evaluate(r, c.w);
      if (c.conj_class_only) {
        auto lhs = detail::faddeev_leverrier(val).coeffs;
        auto rhs = detail::faddeev_leverrier(c.target).coeffs;
        for (Eigen::Index i = 0; i < n; ++i)
          rows.push_back(lhs[static_cast<std::size_t>(i)] - rhs[static_cast<std::size_t>(i)]);
      } else {
        Vector v = vec(val - c.target);
        for (Eigen::Index i = 0; i < v.size(); ++i) rows.push_back(v(i));
      }
    }
    return Eigen::Map<Vector>(rows.data(), static_cast<Eigen::Index>(rows.size()));
  };

  auto jacobian = [&](const MatrixRep& r, Eigen::Index rows_total) -> Matrix {
    Matrix jac = Matrix::Zero(rows_total, static_cast<Eigen::Index>(k) * n * n);
    Eigen::Index row = 0;
    for (const auto& c : constraints) {
      Matrix val;
      auto blocks = detail::word_jacobian(r, c.w, &val);
      if (c.conj_class_only) {
        auto fl = detail::faddeev_leverrier(val);
        // dc_{n-j}/d vec(val) = -vec(M_j^T)^T for j = 1..n
        Matrix coeff_jac(n, n * n);
        for (Eigen::Index j = 1; j <= n; ++j)
          coeff_jac.row(n - j) = -vec(fl.adj_terms[static_cast<std::size_t>(j - 1)].transpose()).transpose();
        for (int g = 0; g < k; ++g)
          jac.block(row, static_cast<Eigen::Index>(g) * n * n, n, n * n) =
              coeff_jac * blocks[static_cast<std::size_t>(g)];
        row += n;
      } else {
        for (int g = 0; g < k; ++g)
          jac.block(row, static_cast<Eigen::Index>(g) * n * n, n * n, n * n) =
              blocks[static_cast<std::size_t>(g)];
        row += n * n;
      }
    }
    return jac;
  };

  auto pack = [&](const MatrixRep& r) -> Vector {
    Vector v(static_cast<Eigen::Index>(k) * n * n);
    for (int g = 0; g < k; ++g) v.segment(static_cast<Eigen::Index>(g) * n * n, n * n) = vec(r.mats[static_cast<std::size_t>(g)]);
    return v;
  };
  auto unpack = [&](const Vector& v) -> MatrixRep {
    MatrixRep r = rep;
    for (int g = 0; g < k; ++g)
      r.mats[static_cast<std::size_t>(g)] = unvec(v.segment(static_cast<Eigen::Index>(g) * n * n, n * n), n, n);
    return r;
  };

  Vector f = residual(rep);
  for (int iter = 0; iter < max_iters; ++iter) {
    if (f.norm() <= tol) return rep;
    Matrix jac = jacobian(rep, f.size());
    Eigen::JacobiSVD<Matrix> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() == 0 || svd.singularValues()(0) < 1e-14)
      throw Error("SingularJacobian", "Gauss-Newton Jacobian vanishes");
    svd.setThreshold(1e-12);
    Vector step = svd.solve(-f);

    Vector theta = pack(rep);
    double lambda = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      MatrixRep trial = unpack(theta + lambda * step);
      Vector ft = residual(trial);
      if (ft.norm() < (1.0 - 1e-4 * lambda) * f.norm() || ft.norm() <= tol) {
        rep = std::move(trial);
        f = std::move(ft);
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved)
      throw Error("NoConvergence", "Gauss-Newton stalled at residual " + std::to_string(f.norm()));
  }
  if (f.norm() <= tol) return rep;
  throw Error("NoConvergence", "residual " + std::to_string(f.norm()) + " after max iterations");
}

inline MatrixRep perturb(const MatrixRep& rep, double eps, Rng& rng) {
  MatrixRep out = rep;
  for (auto& m : out.mats) m += eps * rng.cgauss_matrix(m.rows(), m.cols());
  return out;
}

}  // namespace charvar

#pragma once

#include <vector>

#include "charvar/group_ring.hpp"
#include "charvar/matrix_rep.hpp"

namespace charvar {

// Twisted 1-cocycle for the Ad local system of a representation: one matrix
// per generator, extended to the group by u(w1 w2) = u(w1) + w1.u(w2) with
// g.m = rho(g) m rho(g)^{-1}.  Tangent-vector convention:
// rho_t(w) = (I + t u(w)) rho(w) + O(t^2).
struct AdCocycle {
  std::vector<Matrix> values;

  const Matrix& value(int gen) const { return values[static_cast<std::size_t>(gen - 1)]; }
};

// Relative (compactly supported) 1-cocycle: a cocycle plus one boundary
// witness per puncture word c_j with u(c_j) = c_j.a_j - a_j.
struct RelCocycle {
  AdCocycle u;
  std::vector<Matrix> witnesses;
};

inline AdCocycle zero_cocycle(const MatrixRep& rep) {
  const Eigen::Index n = rep.rank();
  AdCocycle u;
  u.values.assign(static_cast<std::size_t>(rep.group.rank), Matrix::Zero(n, n));
  return u;
}

inline AdCocycle coboundary(const MatrixRep& rep, const Matrix& m) {
  AdCocycle u;
  for (int g = 1; g <= rep.group.rank; ++g)
    u.values.push_back(rep.mat(g) * m * rep.mat(g).inverse() - m);
  return u;
}

// u(w) = sum_i (dw/dx_i) . u_i, the Fox-calculus evaluation with the group
// ring acting through Ad.  Computed in one pass over the prefix holonomies.
inline Matrix cocycle_eval(const MatrixRep& rep, const AdCocycle& u, const Word& w) {
  const Eigen::Index n = rep.rank();
  Matrix out = Matrix::Zero(n, n);
  Matrix p = Matrix::Identity(n, n), pinv = Matrix::Identity(n, n);
  for (const auto& l : w.letters()) {
    const Matrix& m = rep.mat(l.gen);
    if (l.sign > 0) {
      out += p * u.value(l.gen) * pinv;
      p = p * m;
      pinv = m.inverse() * pinv;
    } else {
      Matrix minv = m.inverse();
      p = p * minv;
      pinv = m * pinv;
      out -= p * u.value(l.gen) * pinv;
    }
  }
  return out;
}

// Ad(rho(g)) as an operator on vec'd matrices: vec(A m A^{-1}).
inline Matrix ad_op(const Matrix& a) {
  return kron(a.inverse().transpose(), a);
}

// The linear operator u -> u(w) on packed cocycles (one n^2 block per generator).
inline Matrix eval_operator(const MatrixRep& rep, const Word& w) {
  const Eigen::Index n = rep.rank();
  const Eigen::Index nn = n * n;
  Matrix op = Matrix::Zero(nn, static_cast<Eigen::Index>(rep.group.rank) * nn);
  Matrix p = Matrix::Identity(n, n), pinv = Matrix::Identity(n, n);
  for (const auto& l : w.letters()) {
    const Matrix& m = rep.mat(l.gen);
    if (l.sign > 0) {
      op.block(0, static_cast<Eigen::Index>(l.gen - 1) * nn, nn, nn) +=
          kron(pinv.transpose(), p);
      p = p * m;
      pinv = m.inverse() * pinv;
    } else {
      Matrix minv = m.inverse();
      p = p * minv;
      pinv = m * pinv;
      op.block(0, static_cast<Eigen::Index>(l.gen - 1) * nn, nn, nn) -=
          kron(pinv.transpose(), p);
    }
  }
  return op;
}

inline Vector pack(const AdCocycle& u) {
  const Eigen::Index nn = u.values.front().size();
  Vector v(static_cast<Eigen::Index>(u.values.size()) * nn);
  for (std::size_t g = 0; g < u.values.size(); ++g)
    v.segment(static_cast<Eigen::Index>(g) * nn, nn) = vec(u.values[g]);
  return v;
}

inline AdCocycle unpack_cocycle(const MatrixRep& rep, const Vector& v) {
  const Eigen::Index n = rep.rank();
  AdCocycle u;
  for (int g = 0; g < rep.group.rank; ++g)
    u.values.push_back(unvec(v.segment(static_cast<Eigen::Index>(g) * n * n, n * n), n, n));
  return u;
}

inline AdCocycle axpy(const cplx& c, const AdCocycle& x, const AdCocycle& y) {
  AdCocycle out = y;
  for (std::size_t g = 0; g < out.values.size(); ++g) out.values[g] += c * x.values[g];
  return out;
}

inline AdCocycle scale(const cplx& c, const AdCocycle& x) {
  AdCocycle out = x;
  for (auto& m : out.values) m *= c;
  return out;
}

// The Poisson operators P and Q: forget the witnesses, H^1_c -> H^1.
inline AdCocycle natural_map(const RelCocycle& xi) { return xi.u; }

inline double witness_residual(const MatrixRep& rep, const RelCocycle& xi,
                               const std::vector<Word>& puncture_words) {
  double worst = 0.0;
  for (std::size_t j = 0; j < puncture_words.size(); ++j) {
    Matrix c = evaluate(rep, puncture_words[j]);
    Matrix lhs = cocycle_eval(rep, xi.u, puncture_words[j]);
    Matrix rhs = c * xi.witnesses[j] * c.inverse() - xi.witnesses[j];
    worst = std::max(worst, fro(lhs - rhs));
  }
  return worst;
}

}  // namespace charvar

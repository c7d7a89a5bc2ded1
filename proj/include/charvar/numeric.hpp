#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace charvar {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline double fro(const Matrix& m) { return m.norm(); }

// vec in column-major order, matching vec(AXB) = (B^T (x) A) vec(X).
inline Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

// Kronecker product a (x) b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Numerical rank with a relative singular-value threshold.
inline int numerical_rank(const Matrix& m, double rel_tol = 1e-8) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

// Orthonormal basis of the (right) null space, ordered by singular vectors.
inline Matrix nullspace(const Matrix& m, double rel_tol = 1e-8) {
  if (m.rows() == 0 || m.size() == 0) return Matrix::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int r = 0;
  if (sv.size() > 0 && sv(0) > 0.0)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rel_tol * sv(0)) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

// Orthonormal basis of the orthogonal complement of col(span) inside
// col(within); columns of `within` must be orthonormal.
inline Matrix complement_within(const Matrix& within, const Matrix& span, double rel_tol = 1e-8) {
  if (within.cols() == 0 || span.cols() == 0) return within;
  Matrix coords = within.adjoint() * span;
  Matrix comp = nullspace(coords.adjoint(), rel_tol);
  return within * comp;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gauss() { return normal_(engine_); }
  cplx cgauss() { return cplx(normal_(engine_), normal_(engine_)); }
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  std::uint64_t fork() { return engine_(); }

  Matrix cgauss_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cgauss();
    return m;
  }

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Coefficients of det(tI - A), ascending in t, computed from eigenvalues.
inline std::vector<cplx> char_poly(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> es(a, false);
  const auto& ev = es.eigenvalues();
  std::vector<cplx> c{cplx(1)};
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    std::vector<cplx> next(c.size() + 1, cplx(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= ev(k) * c[i];
    }
    c = std::move(next);
  }
  return c;
}

// Substitute t -> t^m in an ascending-coefficient polynomial.
inline std::vector<cplx> poly_substitute_power(const std::vector<cplx>& p, int m) {
  std::vector<cplx> out((p.size() - 1) * static_cast<std::size_t>(m) + 1, cplx(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i * static_cast<std::size_t>(m)] = p[i];
  return out;
}

inline std::vector<cplx> poly_multiply(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace charvar

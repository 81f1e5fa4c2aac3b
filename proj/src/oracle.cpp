// oracle.cpp

#include "amspec/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace amspec {

namespace {

double spectral_scale(const FiniteMatrix& a) {
  return std::max(1.0, a.cwiseAbs().maxCoeff() * static_cast<double>(a.rows()));
}

// Orthogonal projector onto the range, with singular values under
// rank_tol * sigma_max treated as zero.
FiniteMatrix range_projector(const FiniteMatrix& a, double rank_tol) {
  Eigen::JacobiSVD<FiniteMatrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return FiniteMatrix::Zero(a.rows(), a.rows());
  const double cut = rank_tol * s[0];
  Eigen::Index rank = 0;
  while (rank < s.size() && s[rank] > cut) ++rank;
  const FiniteMatrix ur = svd.matrixU().leftCols(rank);
  return ur * ur.adjoint();
}

}  // namespace

bool is_hermitian(const FiniteMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * spectral_scale(a);
}

EigenResult hermitian_eigen(const FiniteMatrix& a) {
  if (!is_hermitian(a)) throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<FiniteMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SvdResult svd_of(const FiniteMatrix& a) {
  Eigen::JacobiSVD<FiniteMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

double operator_norm_fd(const FiniteMatrix& a) {
  const auto s = svd_of(a).singular_values;
  return s.size() ? s[0] : 0.0;
}

double min_modulus_fd(const FiniteMatrix& a) {
  const auto s = svd_of(a).singular_values;
  return s.size() ? s[s.size() - 1] : 0.0;
}

FiniteMatrix pseudoinverse_fd(const FiniteMatrix& a, double rank_tol) {
  Eigen::JacobiSVD<FiniteMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return FiniteMatrix::Zero(a.cols(), a.rows());
  const double cut = rank_tol * s[0];
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cut) inv[i] = 1.0 / s[i];
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

double MoorePenroseReport::max_residual() const {
  return std::max({penrose1, penrose2, penrose3, penrose4, double_pinv, adjoint_swap, gram,
                   gram_adj, range_match, kernel_match});
}

MoorePenroseReport check_moore_penrose(const FiniteMatrix& a, double rank_tol) {
  const FiniteMatrix x = pseudoinverse_fd(a, rank_tol);
  MoorePenroseReport r;
  const auto norm_of = [](const FiniteMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; };
  // Backward-error grading: every residual is reported relative to the
  // natural scale of its identity times the conditioning of the instance
  // (products through X cost a factor kappa = ||A|| ||X||, the formed Gram
  // matrices cost kappa^2), so one tolerance grades all instances and the
  // checks stay sharp for well-conditioned matrices.
  const double na = std::max(norm_of(a), 1e-300);
  const double nx = std::max(norm_of(x), 1e-300);
  const double kappa = std::max(1.0, operator_norm_fd(a) * operator_norm_fd(x));
  r.penrose1 = norm_of(a * x * a - a) / (na * kappa);
  r.penrose2 = norm_of(x * a * x - x) / (nx * kappa);
  r.penrose3 = norm_of(FiniteMatrix((a * x).adjoint()) - a * x) / kappa;
  r.penrose4 = norm_of(FiniteMatrix((x * a).adjoint()) - x * a) / kappa;
  r.double_pinv = norm_of(pseudoinverse_fd(x, rank_tol) - a) / (na * kappa);
  r.adjoint_swap = norm_of(pseudoinverse_fd(a.adjoint(), rank_tol) - x.adjoint()) / (nx * kappa);
  r.gram = norm_of(pseudoinverse_fd(a.adjoint() * a, rank_tol) - x * x.adjoint()) /
           (nx * nx * kappa * kappa);
  r.gram_adj = norm_of(pseudoinverse_fd(a * a.adjoint(), rank_tol) - x.adjoint() * x) /
               (nx * nx * kappa * kappa);
  r.range_match =
      norm_of(range_projector(x, rank_tol) - range_projector(a.adjoint(), rank_tol)) / kappa;
  r.kernel_match =
      norm_of(range_projector(x.adjoint(), rank_tol) - range_projector(a, rank_tol)) / kappa;
  return r;
}

bool is_hyponormal_fd(const FiniteMatrix& a, double tol) {
  const FiniteMatrix d = a.adjoint() * a - a * a.adjoint();
  Eigen::SelfAdjointEigenSolver<FiniteMatrix> solver(d);
  const double scale = std::max(1.0, operator_norm_fd(a));
  return solver.eigenvalues().minCoeff() >= -tol * scale * scale;
}

ParanormalCheck check_paranormal_fd(const FiniteMatrix& a, int grid, double tol) {
  ParanormalCheck out;
  const FiniteMatrix a2 = a * a;
  const FiniteMatrix gram = a.adjoint() * a;
  const FiniteMatrix gram2 = a2.adjoint() * a2;
  const Eigen::Index n = a.rows();
  const auto s = svd_of(a).singular_values;
  const double smax = s.size() ? s[0] : 0.0;
  if (smax == 0.0) return out;  // zero matrix is paranormal
  const double hi = smax * smax;
  const double lo = std::max(s[s.size() - 1] * s[s.size() - 1], hi * 1e-8);
  const double scale = std::max(1.0, hi * hi);
  for (int i = 0; i < grid; ++i) {
    const double t = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
    const double lambda = lo * std::pow(hi / lo, t);
    const FiniteMatrix m =
        gram2 - 2.0 * lambda * gram + lambda * lambda * FiniteMatrix::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<FiniteMatrix> solver(m);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < out.worst) {
      out.worst = min_eig;
      out.witness = solver.eigenvectors().col(0);
    }
  }
  out.worst /= scale;
  if (out.worst < -tol) {
    out.holds = false;
    const Eigen::VectorXcd& x = out.witness;
    const double tx = (a * x).squaredNorm();
    out.witness_violation = tx - (a2 * x).norm() * x.norm();
  }
  return out;
}

bool kernels_symmetric_fd(const FiniteMatrix& a, double rank_tol) {
  // N(A) = N(A*) iff the range projectors of A* and A coincide.
  const FiniteMatrix p = range_projector(a.adjoint(), rank_tol);
  const FiniteMatrix q = range_projector(a, rank_tol);
  if (p.rows() != q.rows()) return false;
  return (p - q).cwiseAbs().maxCoeff() <= 1e-8;
}

SpectralEqualityReport check_spectral_equalities(const FiniteMatrix& a) {
  SpectralEqualityReport r;
  const auto eig_sorted = [](const FiniteMatrix& m) {
    Eigen::SelfAdjointEigenSolver<FiniteMatrix> solver(m);
    std::vector<double> v(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  };
  const auto left = eig_sorted(a.adjoint() * a);
  const auto right = eig_sorted(a * a.adjoint());
  // Compare the nonzero spectra with multiplicity: after descending sort the
  // leading min(n, m) entries line up and the overhang must vanish.
  const std::size_t common = std::min(left.size(), right.size());
  for (std::size_t i = 0; i < common; ++i)
    r.max_gap = std::max(r.max_gap, std::abs(left[i] - right[i]));
  for (std::size_t i = common; i < left.size(); ++i)
    r.max_gap = std::max(r.max_gap, std::abs(left[i]));
  for (std::size_t i = common; i < right.size(); ++i)
    r.max_gap = std::max(r.max_gap, std::abs(right[i]));
  // m(T)^2 = min sigma(T*T) and ||T||^2 = max sigma(T*T).
  const auto s = svd_of(a).singular_values;
  if (s.size() && !left.empty() && !right.empty()) {
    const double smax = s[0], smin = s[s.size() - 1];
    r.max_gap = std::max(r.max_gap, std::abs(smax * smax - left.front()));
    // The Gram matrix without zero padding carries sigma_min^2 as its
    // smallest eigenvalue; that is A*A when cols <= rows, else AA*.
    const double tail_eig = a.cols() <= a.rows() ? left.back() : right.back();
    r.max_gap = std::max(r.max_gap, std::abs(smin * smin - tail_eig));
  }
  return r;
}

}  // namespace amspec

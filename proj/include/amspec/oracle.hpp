// oracle.hpp — Finite-dimensional numerics used to cross-validate the
// symbolic layer: Hermitian eigensolves, SVD, Moore-Penrose checks and
// paranormality/hyponormality probes on truncations.

#pragma once

#include "amspec/models.hpp"

#include <complex>

namespace amspec {

bool is_hermitian(const FiniteMatrix& a, double tol = 1e-12);

struct EigenResult {
  Eigen::VectorXd values;  // ascending
  FiniteMatrix vectors;    // matching columns
};
EigenResult hermitian_eigen(const FiniteMatrix& a);  // throws std::invalid_argument

struct SvdResult {
  Eigen::VectorXd singular_values;  // descending
  FiniteMatrix u, v;
};
SvdResult svd_of(const FiniteMatrix& a);

double operator_norm_fd(const FiniteMatrix& a);  // largest singular value
double min_modulus_fd(const FiniteMatrix& a);    // smallest singular value

// Moore-Penrose inverse via SVD; singular values below rank_tol * sigma_max
// are treated as zero.
FiniteMatrix pseudoinverse_fd(const FiniteMatrix& a, double rank_tol = 1e-10);

// Residuals of the four Penrose identities plus the standard pseudoinverse
// calculus: double inversion, adjoint swap, Gram factorizations and the
// range/kernel identifications. Each residual is normalized by the natural
// scale of its identity times the conditioning ||A|| ||X|| it costs to
// evaluate (kappa^2 for the formed Gram matrices), so pass(tol) grades
// backward error uniformly across instances.
struct MoorePenroseReport {
  double penrose1 = 0;       // ||A X A - A||
  double penrose2 = 0;       // ||X A X - X||
  double penrose3 = 0;       // ||(A X)* - A X||
  double penrose4 = 0;       // ||(X A)* - X A||
  double double_pinv = 0;    // ||pinv(X) - A||
  double adjoint_swap = 0;   // ||pinv(A*) - X*||
  double gram = 0;           // ||pinv(A* A) - X X*||
  double gram_adj = 0;       // ||pinv(A A*) - X* X||
  double range_match = 0;    // ||P_range(X) - P_range(A*)||
  double kernel_match = 0;   // ||P_range(X*) - P_range(A)||
  double max_residual() const;
  bool pass(double tol) const { return max_residual() <= tol; }
};
MoorePenroseReport check_moore_penrose(const FiniteMatrix& a, double rank_tol = 1e-10);

// T*T - TT* >= -tol * scale as a Hermitian form.
bool is_hyponormal_fd(const FiniteMatrix& a, double tol = 1e-10);

// Paranormality probe: ||Tx||^2 <= ||T^2 x|| ||x|| for all x, equivalently
// (T^2)*(T^2) - 2 lambda T*T + lambda^2 I >= 0 for every lambda > 0. The grid
// covers the only relevant window [sigma_min^2, sigma_max^2] log-spaced.
struct ParanormalCheck {
  bool holds = true;
  double worst = 0;             // most negative grid eigenvalue (scaled)
  Eigen::VectorXcd witness;     // eigenvector at the worst violation
  double witness_violation = 0; // ||Tx||^2 - ||T^2 x|| ||x|| at the witness
};
ParanormalCheck check_paranormal_fd(const FiniteMatrix& a, int grid = 64, double tol = 1e-10);

// N(A) == N(A*) as subspaces, via rank-revealing SVD projectors.
bool kernels_symmetric_fd(const FiniteMatrix& a, double rank_tol = 1e-10);

// sigma(A*A) \ {0} == sigma(AA*) \ {0} with multiplicity, plus the norm and
// minimum-modulus squares; max_gap is the worst absolute mismatch.
struct SpectralEqualityReport {
  double max_gap = 0;
  bool pass(double tol) const { return max_gap <= tol; }
};
SpectralEqualityReport check_spectral_equalities(const FiniteMatrix& a);

}  // namespace amspec

// test_oracle.cpp — finite-dimensional numeric oracle: eigen/SVD wrappers,
// Moore-Penrose residuals, hyponormality, paranormality and the spectral
// equalities for A*A vs AA*.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "amspec/generators.hpp"
#include "amspec/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace amspec;

namespace {

FiniteMatrix jordan2() {
  FiniteMatrix j = FiniteMatrix::Zero(2, 2);
  j(0, 1) = 1.0;
  return j;
}

FiniteMatrix nilpotent_shift(Eigen::Index n) {
  FiniteMatrix j = FiniteMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) j(i + 1, i) = 1.0;
  return j;
}

}  // namespace

TEST_CASE("hermitian_eigen orders eigenvalues ascending with unitary vectors") {
  FiniteMatrix a(2, 2);
  a << 2.0, 1.0, 1.0, 2.0;
  CHECK(is_hermitian(a));
  const EigenResult e = hermitian_eigen(a);
  REQUIRE(e.values.size() == 2);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
  // vectors diagonalize: A V = V diag(values)
  const FiniteMatrix residual =
      a * e.vectors - e.vectors * e.values.cast<std::complex<double>>().asDiagonal();
  CHECK(residual.cwiseAbs().maxCoeff() < 1e-14);
  CHECK((e.vectors.adjoint() * e.vectors - FiniteMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-14);

  CHECK_FALSE(is_hermitian(jordan2()));
  CHECK_THROWS_AS(hermitian_eigen(jordan2()), std::invalid_argument);
}

TEST_CASE("hermitian_eigen of a diagonal truncation recovers the exact entries") {
  const PositiveDiagonalModel m = make_positive_model(
      {{Rational(3), Multiplicity::finite(2)}},
      {TailSequence(TailRule{Rational(1), TailDirection::FromBelow, Rational(1), 1, 2})});
  const FiniteMatrix a = truncate(m, 8);
  const EigenResult e = hermitian_eigen(a);
  auto ents = entries(m, 8);
  std::vector<double> expect;
  for (const auto& q : ents) expect.push_back(to_double(q));
  std::sort(expect.begin(), expect.end());
  for (int i = 0; i < 8; ++i) CHECK(e.values[i] == doctest::Approx(expect[i]).epsilon(1e-14));
}

TEST_CASE("svd_of sorts singular values descending") {
  FiniteMatrix a = FiniteMatrix::Zero(2, 2);
  a(0, 1) = 2.0;  // rank one, sigma = {2, 0}
  const SvdResult s = svd_of(a);
  CHECK(s.singular_values[0] == doctest::Approx(2.0));
  CHECK(s.singular_values[1] == doctest::Approx(0.0));
  CHECK(operator_norm_fd(a) == doctest::Approx(2.0));
  CHECK(min_modulus_fd(a) == doctest::Approx(0.0));

  // rectangular: sigma of [[3, 0, 0], [0, 4, 0]] is {4, 3}
  FiniteMatrix r = FiniteMatrix::Zero(2, 3);
  r(0, 0) = 3.0;
  r(1, 1) = 4.0;
  CHECK(operator_norm_fd(r) == doctest::Approx(4.0));
  CHECK(min_modulus_fd(r) == doctest::Approx(3.0));
}

TEST_CASE("pseudoinverse_fd inverts the nonzero part only") {
  FiniteMatrix a = FiniteMatrix::Zero(2, 2);
  a(0, 0) = 2.0;
  const FiniteMatrix x = pseudoinverse_fd(a);
  CHECK(x(0, 0).real() == doctest::Approx(0.5));
  CHECK(std::abs(x(0, 1)) + std::abs(x(1, 0)) + std::abs(x(1, 1)) == doctest::Approx(0.0));
  // pinv of the zero matrix is the zero matrix (transposed shape)
  const FiniteMatrix z = pseudoinverse_fd(FiniteMatrix::Zero(2, 3));
  CHECK(z.rows() == 3);
  CHECK(z.cols() == 2);
  CHECK(z.cwiseAbs().maxCoeff() == 0.0);
  // tiny singular values below rank_tol * sigma_max are zeroed, not inverted
  FiniteMatrix near = FiniteMatrix::Zero(2, 2);
  near(0, 0) = 1.0;
  near(1, 1) = 1e-14;
  const FiniteMatrix xn = pseudoinverse_fd(near, 1e-10);
  CHECK(xn(1, 1).real() == 0.0);
}

TEST_CASE("check_moore_penrose passes a backward-error grade on all shapes") {
  Rng rng(2026);
  const FiniteMatrix shapes[] = {
      random_matrix(rng, 5, 5),                       // square generic
      random_matrix(rng, 6, 3),                       // tall
      random_matrix(rng, 3, 6),                       // wide
      random_matrix(rng, 5, 2) * random_matrix(rng, 2, 5),  // rank deficient
  };
  for (const FiniteMatrix& a : shapes) {
    const MoorePenroseReport r = check_moore_penrose(a);
    CHECK(r.pass(1e-8));
    CHECK(r.max_residual() >= 0.0);
  }
  // a singular Hermitian PSD block
  Rng rng2(7);
  const FiniteMatrix g = random_matrix(rng2, 6, 4);
  CHECK(check_moore_penrose(FiniteMatrix(g * g.adjoint())).pass(1e-8));
}

TEST_CASE("hyponormality: normal matrices pass, the Jordan block fails") {
  Rng rng(11);
  const FiniteMatrix n = random_normal_matrix(rng, 5);
  CHECK(is_hyponormal_fd(n));
  // J* J - J J* = diag(-1, 1) has a negative eigenvalue
  CHECK_FALSE(is_hyponormal_fd(jordan2()));
}

TEST_CASE("paranormality: J2 violates with a strict witness, normals never do") {
  const ParanormalCheck bad = check_paranormal_fd(jordan2());
  CHECK_FALSE(bad.holds);
  CHECK(bad.worst < -1e-6);
  // at the witness x: ||Tx||^2 - ||T^2 x|| ||x|| must be genuinely positive,
  // here T^2 = 0 and ||T e_2|| = 1
  CHECK(bad.witness_violation > 0.1);

  Rng rng(13);
  const ParanormalCheck good = check_paranormal_fd(random_normal_matrix(rng, 5));
  CHECK(good.holds);

  // a longer nilpotent shift also fails
  CHECK_FALSE(check_paranormal_fd(nilpotent_shift(4)).holds);
  // the zero matrix is paranormal
  CHECK(check_paranormal_fd(FiniteMatrix::Zero(3, 3)).holds);
}

TEST_CASE("kernel symmetry: N(A) == N(A*) for normals, not for J2") {
  Rng rng(17);
  FiniteMatrix n = random_normal_matrix(rng, 4);
  CHECK(kernels_symmetric_fd(n));
  // a PSD matrix with nontrivial kernel is still symmetric in this sense
  const FiniteMatrix g = random_matrix(rng, 4, 2);
  CHECK(kernels_symmetric_fd(FiniteMatrix(g * g.adjoint())));
  // for J2, N(A) = span e1 but N(A*) = span e2
  CHECK_FALSE(kernels_symmetric_fd(jordan2()));
}

TEST_CASE("sigma(A*A) and sigma(AA*) agree away from zero") {
  Rng rng(19);
  const std::vector<std::pair<int, int>> dims = {{4, 4}, {3, 5}, {6, 2}};
  for (const auto& [rows, cols] : dims) {
    const FiniteMatrix a = random_matrix(rng, rows, cols);
    const SpectralEqualityReport r = check_spectral_equalities(a);
    CHECK(r.pass(1e-8));
  }
  CHECK(check_spectral_equalities(jordan2()).pass(1e-12));
}

// scalar.hpp — Eigenvalue multiplicities and exact polar complex scalars.

#pragma once

#include "amspec/rational.hpp"

#include <complex>
#include <cstdint>

namespace amspec {

// A spectral multiplicity: a positive finite count, or infinite.
class Multiplicity {
 public:
  static Multiplicity finite(std::int64_t count);
  static Multiplicity infinite();

  bool is_infinite() const { return infinite_; }
  std::int64_t count() const;  // throws std::logic_error when infinite

  Multiplicity operator+(const Multiplicity& other) const;
  bool operator==(const Multiplicity& other) const = default;

 private:
  Multiplicity() = default;
  bool infinite_ = false;
  std::int64_t count_ = 1;
};

bool approximately_unit(std::complex<double> z, double tol = 1e-9);

// A complex scalar in exact polar form: value = modulus * phase with |phase| = 1.
// The modulus is an exact rational; the phase is a unit double pair carried
// verbatim, so scalars stay exact under conjugation, reciprocal and modulus.
// A zero modulus forces phase (1, 0) so equality is well defined.
struct Scalar {
  Rational modulus;                       // >= 0
  std::complex<double> phase{1.0, 0.0};   // |phase| == 1 (within 1e-9)

  Scalar() : modulus(0) {}
  Scalar(Rational mod, std::complex<double> ph);
  static Scalar real(const Rational& value);  // phase 1 or -1 by sign

  std::complex<double> approx() const;
  bool is_real() const;
  Rational real_value() const;  // throws std::logic_error unless is_real()
  Scalar conjugate() const;

  // The scalar pseudoinverse map: nonzero values invert (phase conjugates),
  // zero stays zero.
  Scalar pseudo_reciprocal() const;

  bool operator==(const Scalar& other) const;
};

// Deterministic total order: modulus first, then phase lexicographically.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace amspec

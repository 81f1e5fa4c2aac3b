// scalar.cpp

#include "amspec/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace amspec {

Multiplicity Multiplicity::finite(std::int64_t count) {
  if (count < 1) throw std::invalid_argument("Multiplicity: finite count must be >= 1");
  Multiplicity m;
  m.infinite_ = false;
  m.count_ = count;
  return m;
}

Multiplicity Multiplicity::infinite() {
  Multiplicity m;
  m.infinite_ = true;
  m.count_ = 0;
  return m;
}

std::int64_t Multiplicity::count() const {
  if (infinite_) throw std::logic_error("Multiplicity: count() on infinite multiplicity");
  return count_;
}

Multiplicity Multiplicity::operator+(const Multiplicity& other) const {
  if (infinite_ || other.infinite_) return infinite();
  return finite(count_ + other.count_);
}

bool approximately_unit(std::complex<double> z, double tol) {
  return std::abs(std::abs(z) - 1.0) <= tol;
}

Scalar::Scalar(Rational mod, std::complex<double> ph) : modulus(std::move(mod)), phase(ph) {
  if (modulus < 0) throw std::invalid_argument("Scalar: negative modulus");
  if (modulus == 0) {
    phase = {1.0, 0.0};
    return;
  }
  if (!approximately_unit(phase)) throw std::invalid_argument("Scalar: phase is not a unit complex number");
}

Scalar Scalar::real(const Rational& value) {
  if (value >= 0) return Scalar(value, {1.0, 0.0});
  return Scalar(-value, {-1.0, 0.0});
}

std::complex<double> Scalar::approx() const { return to_double(modulus) * phase; }

bool Scalar::is_real() const {
  return phase.imag() == 0.0 && (phase.real() == 1.0 || phase.real() == -1.0);
}

Rational Scalar::real_value() const {
  if (!is_real()) throw std::logic_error("Scalar: real_value() on a non-real scalar");
  return phase.real() > 0 ? modulus : -modulus;
}

Scalar Scalar::conjugate() const { return Scalar(modulus, std::conj(phase)); }

Scalar Scalar::pseudo_reciprocal() const {
  if (modulus == 0) return Scalar();
  return Scalar(1 / modulus, std::conj(phase));
}

bool Scalar::operator==(const Scalar& other) const {
  return modulus == other.modulus && phase.real() == other.phase.real() &&
         phase.imag() == other.phase.imag();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.modulus != b.modulus) return a.modulus < b.modulus;
  if (a.phase.real() != b.phase.real()) return a.phase.real() < b.phase.real();
  return a.phase.imag() < b.phase.imag();
}

}  // namespace amspec

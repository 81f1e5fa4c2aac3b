// tail.cpp

#include "amspec/tail.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace amspec {

namespace {

constexpr std::int64_t kIndexGuard = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t checked_index(const BigInt& n) {
  if (n > kIndexGuard) throw std::domain_error("tail index exceeds the representable range");
  return n.convert_to<std::int64_t>();
}

}  // namespace

Rational TailRule::term(std::int64_t n) const {
  if (n < start_index) throw std::invalid_argument("TailRule::term: index before start_index");
  const Rational step = coefficient / rational_pow(Rational(n), static_cast<long>(exponent));
  return direction == TailDirection::FromAbove ? Rational(limit + step) : Rational(limit - step);
}

void TailRule::validate() const {
  if (limit < 0) throw std::invalid_argument("TailRule: negative limit");
  if (coefficient <= 0) throw std::invalid_argument("TailRule: coefficient must be positive");
  if (exponent < 1) throw std::invalid_argument("TailRule: exponent must be a positive integer");
  if (start_index < 1) throw std::invalid_argument("TailRule: start_index must be >= 1");
  if (direction == TailDirection::FromBelow && term(start_index) < 0)
    throw std::invalid_argument("TailRule: first term is negative");
}

TailSequence::TailSequence(TailRule rule) : rule_(std::move(rule)) { validate(); }

TailSequence::TailSequence(TailRule rule, int power, Rational offset, int sign)
    : rule_(std::move(rule)), power_(power), offset_(std::move(offset)), sign_(sign) {
  validate();
}

void TailSequence::validate() const {
  rule_.validate();
  if (power_ == 0) throw std::invalid_argument("TailSequence: power must be nonzero");
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("TailSequence: sign must be +1 or -1");
  if (offset_ < 0) throw std::invalid_argument("TailSequence: negative offset");
  if (power_ < 0) {
    const Rational base_inf =
        rule_.direction == TailDirection::FromAbove ? rule_.limit : rule_.term(rule_.start_index);
    if (base_inf <= 0)
      throw std::invalid_argument("TailSequence: negative power needs strictly positive base terms");
  }
  if (value(rule_.start_index) < 0 || limit() < 0)
    throw std::invalid_argument("TailSequence: values must stay nonnegative");
}

Rational TailSequence::value(std::int64_t n) const {
  const Rational base = rule_.term(n);
  return offset_ + sign_ * rational_pow(base, power_);
}

Rational TailSequence::limit() const {
  return offset_ + sign_ * rational_pow(rule_.limit, power_);
}

bool TailSequence::increasing() const { return value(rule_.start_index) < limit(); }

Rational TailSequence::inf_value() const {
  return increasing() ? value(rule_.start_index) : limit();
}

bool TailSequence::inf_attained() const { return increasing(); }

Rational TailSequence::sup_value() const {
  return increasing() ? limit() : value(rule_.start_index);
}

bool TailSequence::sup_attained() const { return !increasing(); }

std::optional<std::int64_t> TailSequence::index_of(const Rational& v) const {
  const Rational w = (v - offset_) * sign_;  // candidate for base^power
  Rational base;
  if (power_ > 0) {
    if (w < 0) return std::nullopt;
    const auto root = exact_kth_root(w, static_cast<unsigned>(power_));
    if (!root) return std::nullopt;
    base = *root;
  } else {
    if (w <= 0) return std::nullopt;
    const auto root = exact_kth_root(1 / w, static_cast<unsigned>(-power_));
    if (!root) return std::nullopt;
    base = *root;
  }
  // Solve rule.term(n) == base for integral n >= start_index.
  Rational step;  // coefficient / n^exponent
  if (rule_.direction == TailDirection::FromAbove) {
    if (base <= rule_.limit) return std::nullopt;
    step = base - rule_.limit;
  } else {
    if (base >= rule_.limit) return std::nullopt;
    step = rule_.limit - base;
  }
  const Rational npow = rule_.coefficient / step;  // n^exponent
  if (boost::multiprecision::denominator(npow) != 1) return std::nullopt;
  const BigInt body = boost::multiprecision::numerator(npow);
  const BigInt root = integer_kth_root(body, rule_.exponent);
  if (boost::multiprecision::pow(root, rule_.exponent) != body) return std::nullopt;
  const std::int64_t n = checked_index(root);
  if (n < rule_.start_index) return std::nullopt;
  return n;
}

namespace {

// Largest n >= start satisfying a monotone predicate that is true on a finite
// prefix; returns start - 1 when already false at start.
template <typename Pred>
std::int64_t last_true_index(std::int64_t start, Pred pred) {
  if (!pred(start)) return start - 1;
  std::int64_t lo = start;
  std::int64_t step = 1;
  while (step < kIndexGuard && pred(lo + step)) {
    lo += step;
    step *= 2;
  }
  if (step >= kIndexGuard) throw std::domain_error("tail search exceeds the representable range");
  std::int64_t hi = lo + step;  // pred(lo) true, pred(hi) false
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

TailSequence::Count TailSequence::count_above(const Rational& v, bool strict) const {
  const Rational l = limit();
  if (increasing()) {
    // Values fill [value(start), l) from below; anything under the limit is
    // exceeded by a full tail of terms.
    if (v < l) return {true, 0};
    return {false, 0};
  }
  if (v < l) return {true, 0};
  if (v == l) return {true, 0};  // every term sits strictly above the limit
  const auto pred = [&](std::int64_t n) {
    const Rational val = value(n);
    return strict ? val > v : val >= v;
  };
  const std::int64_t last = last_true_index(rule_.start_index, pred);
  return {false, last - rule_.start_index + 1};
}

TailSequence::Count TailSequence::count_below(const Rational& v, bool strict) const {
  const Rational l = limit();
  if (increasing()) {
    if (v > l) return {true, 0};
    if (v == l) return {true, 0};  // every term sits strictly below the limit
    const auto pred = [&](std::int64_t n) {
      const Rational val = value(n);
      return strict ? val < v : val <= v;
    };
    const std::int64_t last = last_true_index(rule_.start_index, pred);
    return {false, last - rule_.start_index + 1};
  }
  if (v > l) return {true, 0};
  return {false, 0};
}

TailSequence TailSequence::with_start(std::int64_t n) const {
  if (n < rule_.start_index) throw std::invalid_argument("TailSequence: with_start before start_index");
  TailRule r = rule_;
  r.start_index = n;
  return TailSequence(std::move(r), power_, offset_, sign_);
}

TailSequence TailSequence::pseudo_reciprocal() const {
  if (offset_ != 0)
    throw std::domain_error("TailSequence: pseudo_reciprocal needs offset 0");
  if (inf_value() <= 0)
    throw std::domain_error("TailSequence: pseudo_reciprocal needs strictly positive values");
  return TailSequence(rule_, -power_, Rational(0), 1);
}

TailSequence TailSequence::squared() const {
  if (offset_ != 0) throw std::domain_error("TailSequence: squared needs offset 0");
  return TailSequence(rule_, 2 * power_, Rational(0), 1);
}

}  // namespace amspec

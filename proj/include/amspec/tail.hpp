// tail.hpp — Symbolic monotone tail sequences with exact term arithmetic.

#pragma once

#include "amspec/rational.hpp"

#include <cstdint>
#include <optional>

namespace amspec {

enum class TailDirection { FromAbove, FromBelow };

// Closed-form rule for the tail of a diagonal:
//   term(n) = limit + coefficient / n^exponent   (FromAbove)
//   term(n) = limit - coefficient / n^exponent   (FromBelow)
// for n >= start_index. Integer exponents keep every term rational, so
// membership and counting questions have exact answers.
struct TailRule {
  Rational limit;             // >= 0
  TailDirection direction = TailDirection::FromBelow;
  Rational coefficient;       // > 0
  unsigned exponent = 1;      // >= 1
  std::int64_t start_index = 1;

  Rational term(std::int64_t n) const;
  void validate() const;  // throws std::invalid_argument
  bool operator==(const TailRule& other) const = default;
};

// A tail sequence as consumed by models and spectrum reports:
//
//   value(n) = offset + sign * rule.term(n)^power
//
// Plain model tails have power 1, offset 0, sign +1. The extensions arise
// from derived operators: pseudoinverses negate the power, squares double it
// and compact-part extraction (beta - value) introduces an offset and sign.
// Every value must be >= 0 and the sequence is strictly monotone.
class TailSequence {
 public:
  explicit TailSequence(TailRule rule);
  TailSequence(TailRule rule, int power, Rational offset, int sign);

  const TailRule& rule() const { return rule_; }
  int power() const { return power_; }
  const Rational& offset() const { return offset_; }
  int sign() const { return sign_; }
  std::int64_t start_index() const { return rule_.start_index; }
  bool is_plain() const { return power_ == 1 && offset_ == 0 && sign_ == 1; }

  Rational value(std::int64_t n) const;  // n >= start_index
  Rational limit() const;                // exact limit as n -> infinity
  bool increasing() const;

  Rational inf_value() const;  // infimum over n >= start_index
  bool inf_attained() const;   // true iff the infimum is a term (else it is the limit)
  Rational sup_value() const;
  bool sup_attained() const;

  // The unique n >= start_index with value(n) == v, when it exists.
  std::optional<std::int64_t> index_of(const Rational& v) const;

  struct Count {
    bool infinite = false;
    std::int64_t count = 0;
  };
  // How many n >= start_index satisfy value(n) > v (or >= v when !strict).
  Count count_above(const Rational& v, bool strict) const;
  Count count_below(const Rational& v, bool strict) const;

  TailSequence with_start(std::int64_t n) const;  // drop terms before n

  // value -> 1/value; requires offset 0 and all values > 0.
  TailSequence pseudo_reciprocal() const;
  // value -> value^2; requires offset 0.
  TailSequence squared() const;

  bool operator==(const TailSequence& other) const = default;

 private:
  void validate() const;

  TailRule rule_;
  int power_ = 1;
  Rational offset_{0};
  int sign_ = 1;
};

}  // namespace amspec

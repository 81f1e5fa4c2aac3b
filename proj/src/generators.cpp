// generators.cpp

#include "amspec/generators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace amspec {

namespace {

std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

}  // namespace

Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
  const long den = static_cast<long>(pick(rng, 1, max_den));
  const long num = static_cast<long>(pick(rng, lo * den, hi * den));
  return Rational(num, den);
}

std::complex<double> random_unit_phase(Rng& rng) {
  switch (pick(rng, 0, 4)) {
    case 0: return {1.0, 0.0};
    case 1: return {-1.0, 0.0};
    case 2: return {0.0, 1.0};
    case 3: return {0.0, -1.0};
    default: {
      const double theta = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
      return {std::cos(theta), std::sin(theta)};
    }
  }
}

TailSequence random_tail(Rng& rng, bool increasing, const Rational& limit) {
  TailRule rule;
  rule.limit = limit;
  rule.exponent = static_cast<unsigned>(pick(rng, 1, 3));
  rule.start_index = pick(rng, 1, 5);
  if (increasing) {
    rule.direction = TailDirection::FromBelow;
    // first term limit - c/n0^p must stay >= 0
    const Rational cap = limit * rational_pow(Rational(rule.start_index), rule.exponent);
    const Rational theta = random_rational(rng, 1, 16, 16) / 16;  // in (0, 1]
    rule.coefficient = cap * theta;
    if (rule.coefficient == 0) rule.coefficient = cap;  // defensive, cap > 0 for limit > 0
  } else {
    rule.direction = TailDirection::FromAbove;
    rule.coefficient = random_rational(rng, 1, 3, 8);
    if (rule.coefficient <= 0) rule.coefficient = Rational(1, 2);
  }
  return TailSequence(rule);
}

PositiveDiagonalModel random_am_positive_model(Rng& rng) {
  std::vector<PositiveCell> cells;
  std::vector<TailSequence> tails;
  if (chance(rng, 0.15)) {
    // beta = 0: an infinite kernel plus finitely many positive entries.
    cells.push_back({Rational(0), Multiplicity::infinite()});
    const std::int64_t extra = pick(rng, 0, 3);
    for (std::int64_t i = 0; i < extra; ++i)
      cells.push_back({random_rational(rng, 1, 4, 6), Multiplicity::finite(pick(rng, 1, 3))});
    return make_positive_model(std::move(cells), std::move(tails));
  }
  const Rational beta = random_rational(rng, 1, 4, 4);
  const std::int64_t tail_count = pick(rng, 0, 2);
  for (std::int64_t i = 0; i < tail_count; ++i) tails.push_back(random_tail(rng, true, beta));
  std::int64_t infinite_cells = pick(rng, 0, 1);
  if (tail_count == 0 && infinite_cells == 0) infinite_cells = 1;
  for (std::int64_t i = 0; i < infinite_cells; ++i)
    cells.push_back({beta, Multiplicity::infinite()});
  const std::int64_t extra = pick(rng, 0, 3);
  for (std::int64_t i = 0; i < extra; ++i) {
    // anywhere in [0, 2 beta], finite multiplicity
    const Rational v = beta * random_rational(rng, 0, 2, 8);
    cells.push_back({v < 0 ? Rational(0) : v, Multiplicity::finite(pick(rng, 1, 3))});
  }
  return make_positive_model(std::move(cells), std::move(tails));
}

PositiveDiagonalModel random_positive_model(Rng& rng) {
  const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
  if (roll < 0.5) return random_am_positive_model(rng);
  if (roll < 0.72) {
    // a decreasing tail on top of an otherwise fine model
    PositiveDiagonalModel base = random_am_positive_model(rng);
    const Rational beta = essential_values(base).front();
    std::vector<TailSequence> tails = base.tails;
    if (beta == 0 || chance(rng, 0.3))
      tails.push_back(random_tail(rng, false, Rational(0)));  // open range as well
    else
      tails.push_back(random_tail(rng, false, beta));
    return make_positive_model(base.cells, std::move(tails));
  }
  if (roll < 0.92) {
    // two separated essential values
    const Rational b1 = random_rational(rng, 1, 3, 4);
    const Rational b2 = b1 + random_rational(rng, 1, 2, 4);
    std::vector<TailSequence> tails;
    std::vector<PositiveCell> cells;
    if (chance(rng, 0.5)) {
      tails.push_back(random_tail(rng, true, b1));
      tails.push_back(random_tail(rng, chance(rng, 0.5), b2));
    } else {
      tails.push_back(random_tail(rng, true, b2));
      cells.push_back({b1, Multiplicity::infinite()});
    }
    if (chance(rng, 0.5)) cells.push_back({b2 * 2, Multiplicity::finite(pick(rng, 1, 2))});
    return make_positive_model(std::move(cells), std::move(tails));
  }
  // wild: several tails of both directions
  std::vector<TailSequence> tails;
  const std::int64_t n = pick(rng, 1, 3);
  for (std::int64_t i = 0; i < n; ++i) {
    const Rational l = random_rational(rng, 0, 3, 4);
    tails.push_back(l == 0 ? random_tail(rng, false, l) : random_tail(rng, chance(rng, 0.5), l));
  }
  std::vector<PositiveCell> cells;
  if (chance(rng, 0.5))
    cells.push_back({random_rational(rng, 0, 4, 4), Multiplicity::finite(pick(rng, 1, 3))});
  return make_positive_model(std::move(cells), std::move(tails));
}

namespace {

NormalDiagonalModel attach_phases(Rng& rng, const PositiveDiagonalModel& m) {
  NormalDiagonalModel out;
  out.cells.reserve(m.cells.size());
  for (const auto& c : m.cells)
    out.cells.push_back({Scalar(c.value, c.value == 0 ? std::complex<double>{1.0, 0.0}
                                                      : random_unit_phase(rng)),
                         c.mult});
  out.tails.reserve(m.tails.size());
  for (const auto& t : m.tails) out.tails.push_back({t, random_unit_phase(rng)});
  return out;
}

}  // namespace

NormalDiagonalModel random_normal_am_model(Rng& rng) {
  return attach_phases(rng, random_am_positive_model(rng));
}

NormalDiagonalModel random_normal_model(Rng& rng) {
  return attach_phases(rng, random_positive_model(rng));
}

ShiftedDiagonalModel random_shifted_model(Rng& rng) {
  return make_shifted_model(pick(rng, 1, 3), random_positive_model(rng));
}

MeasureSpaceModel random_measure_model(Rng& rng) {
  std::vector<MeasureCell> cells;
  std::vector<MeasureTail> tails;
  const std::int64_t nc = pick(rng, 1, 3);
  for (std::int64_t i = 0; i < nc; ++i) {
    MeasureCell c;
    c.label = "cell" + std::to_string(i);
    c.kind = chance(rng, 0.4) ? CellKind::Diffuse : CellKind::Atom;
    c.weight = random_rational(rng, 1, 4, 4);
    const Rational mod = random_rational(rng, 0, 3, 4);
    c.symbol = Scalar(mod < 0 ? Rational(0) : mod, random_unit_phase(rng));
    cells.push_back(std::move(c));
  }
  const std::int64_t nt = pick(rng, 0, 2);
  for (std::int64_t i = 0; i < nt; ++i) {
    const Rational l = random_rational(rng, 0, 3, 4);
    const bool up = l != 0 && chance(rng, 0.6);
    tails.push_back({random_tail(rng, up, l), random_unit_phase(rng)});
  }
  if (tails.empty() &&
      std::none_of(cells.begin(), cells.end(),
                   [](const MeasureCell& c) { return c.kind == CellKind::Diffuse; }))
    cells.front().kind = CellKind::Diffuse;
  return make_measure_model(std::move(cells), std::move(tails));
}

RestrictionSpec random_restriction(Rng& rng, const PositiveDiagonalModel& m) {
  RestrictionSpec spec;
  spec.cell_keep.assign(m.cells.size(), std::nullopt);
  spec.tail_keep.assign(m.tails.size(), RestrictionSpec::TailKeep{});
  bool nonempty = false;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    if (!chance(rng, 0.6)) continue;
    const auto& mult = m.cells[i].mult;
    if (mult.is_infinite())
      spec.cell_keep[i] = chance(rng, 0.5) ? Multiplicity::infinite()
                                           : Multiplicity::finite(pick(rng, 1, 4));
    else
      spec.cell_keep[i] = Multiplicity::finite(pick(rng, 1, mult.count()));
    nonempty = true;
  }
  for (std::size_t t = 0; t < m.tails.size(); ++t) {
    const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
    auto& keep = spec.tail_keep[t];
    if (roll < 0.3) continue;  // drop
    if (roll < 0.75) {
      keep.kind = RestrictionSpec::TailKeep::Kind::From;
      keep.from = m.tails[t].start_index() + pick(rng, 0, 5);
    } else {
      keep.kind = RestrictionSpec::TailKeep::Kind::Indices;
      const std::int64_t count = pick(rng, 1, 4);
      std::set<std::int64_t> chosen;
      while (static_cast<std::int64_t>(chosen.size()) < count)
        chosen.insert(m.tails[t].start_index() + pick(rng, 0, 8));
      keep.indices.assign(chosen.begin(), chosen.end());
    }
    nonempty = true;
  }
  if (!nonempty) {
    if (!m.tails.empty()) {
      spec.tail_keep[0].kind = RestrictionSpec::TailKeep::Kind::From;
      spec.tail_keep[0].from = m.tails[0].start_index();
    } else {
      spec.cell_keep[0] = m.cells[0].mult;
    }
  }
  return spec;
}

FiniteMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
  std::normal_distribution<double> dist(0.0, 1.0);
  FiniteMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = scale * std::complex<double>(dist(rng), dist(rng));
  return a;
}

FiniteMatrix random_hermitian_psd(Rng& rng, Eigen::Index n, double scale) {
  const FiniteMatrix b = random_matrix(rng, n, n, scale);
  return b * b.adjoint() / static_cast<double>(n);
}

FiniteMatrix random_normal_matrix(Rng& rng, Eigen::Index n, double scale) {
  const FiniteMatrix b = random_matrix(rng, n, n, 1.0);
  const Eigen::HouseholderQR<FiniteMatrix> qr(b);
  const FiniteMatrix q = qr.householderQ();
  FiniteMatrix d = FiniteMatrix::Zero(n, n);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = scale * std::complex<double>(dist(rng), dist(rng));
  return q * d * q.adjoint();
}

}  // namespace amspec

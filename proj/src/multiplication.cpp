// multiplication.cpp

#include "amspec/multiplication.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace amspec {

namespace {

constexpr int kLevelBudget = 32;

std::string tail_member_label(std::size_t slot, std::int64_t n) {
  return "tail[" + std::to_string(slot) + "] n=" + std::to_string(n);
}

// Ascending (want_min) or descending peel of attained level sets of |f|.
ExhaustionTrace peel_levels(const MeasureSpaceModel& m, bool want_min) {
  ExhaustionTrace trace;
  std::vector<bool> cell_alive(m.cells.size(), true);
  std::vector<std::int64_t> cursor;  // current first index per tail
  cursor.reserve(m.tails.size());
  for (const auto& t : m.tails) cursor.push_back(t.seq.start_index());

  for (int round = 0;; ++round) {
    bool any = false;
    Rational level(0);
    const auto feed = [&](const Rational& v) {
      if (!any || (want_min ? v < level : v > level)) level = v;
      any = true;
    };
    for (std::size_t i = 0; i < m.cells.size(); ++i)
      if (cell_alive[i]) feed(m.cells[i].symbol.modulus);
    for (std::size_t t = 0; t < m.tails.size(); ++t) {
      const TailSequence cur = m.tails[t].seq.with_start(cursor[t]);
      feed(want_min ? cur.inf_value() : cur.sup_value());
    }
    if (!any) {
      trace.complete = true;
      return trace;
    }
    if (round == kLevelBudget) {
      trace.truncated = true;
      return trace;
    }

    ExhaustionTrace::Level lv{level, {}};
    for (std::size_t i = 0; i < m.cells.size(); ++i)
      if (cell_alive[i] && m.cells[i].symbol.modulus == level) {
        lv.members.push_back(m.cells[i].label);
        cell_alive[i] = false;
      }
    for (std::size_t t = 0; t < m.tails.size(); ++t) {
      const TailSequence cur = m.tails[t].seq.with_start(cursor[t]);
      const bool attains = want_min ? cur.inf_attained() : cur.sup_attained();
      const Rational extremum = want_min ? cur.inf_value() : cur.sup_value();
      if (attains && extremum == level) {
        lv.members.push_back(tail_member_label(t, cursor[t]));
        ++cursor[t];  // the extremum of a monotone tail is its first term
      }
    }
    if (lv.members.empty()) {
      trace.failure = "the level at " + format_rational(level) +
                      " is only approached, never attained";
      return trace;
    }
    trace.levels.push_back(std::move(lv));
  }
}

void require_infinite_measure_model(const MeasureSpaceModel& m) {
  if (!m.tails.empty()) return;
  for (const auto& c : m.cells)
    if (c.kind == CellKind::Diffuse) return;
  throw std::invalid_argument("classification requires an infinite-dimensional model");
}

std::vector<Rational> essential_moduli(const MeasureSpaceModel& m) {
  std::vector<Rational> ess;
  for (const auto& c : m.cells)
    if (c.kind == CellKind::Diffuse) ess.push_back(c.symbol.modulus);
  for (const auto& t : m.tails) ess.push_back(t.seq.limit());
  std::sort(ess.begin(), ess.end());
  ess.erase(std::unique(ess.begin(), ess.end()), ess.end());
  return ess;
}

}  // namespace

void validate_model(const MeasureSpaceModel& m) {
  if (m.cells.empty() && m.tails.empty())
    throw std::invalid_argument("MeasureSpaceModel: model must have at least one component");
  std::set<std::string> labels;
  for (const auto& c : m.cells) {
    if (c.label.empty()) throw std::invalid_argument("MeasureSpaceModel: empty cell label");
    if (!labels.insert(c.label).second)
      throw std::invalid_argument("MeasureSpaceModel: duplicate cell label '" + c.label + "'");
    if (c.weight <= 0) throw std::invalid_argument("MeasureSpaceModel: cell weight must be positive");
  }
  for (const auto& t : m.tails)
    if (!approximately_unit(t.phase))
      throw std::invalid_argument("MeasureSpaceModel: tail phase is not a unit complex number");
}

MeasureSpaceModel make_measure_model(std::vector<MeasureCell> cells,
                                     std::vector<MeasureTail> tails) {
  MeasureSpaceModel m{std::move(cells), std::move(tails)};
  validate_model(m);
  return m;
}

Rational ess_inf_abs(const MeasureSpaceModel& m) {
  validate_model(m);
  bool first = true;
  Rational best(0);
  for (const auto& c : m.cells) {
    if (first || c.symbol.modulus < best) best = c.symbol.modulus;
    first = false;
  }
  for (const auto& t : m.tails) {
    const Rational v = t.seq.inf_value();
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Rational ess_sup_abs(const MeasureSpaceModel& m) {
  validate_model(m);
  bool first = true;
  Rational best(0);
  for (const auto& c : m.cells) {
    if (first || c.symbol.modulus > best) best = c.symbol.modulus;
    first = false;
  }
  for (const auto& t : m.tails) {
    const Rational v = t.seq.sup_value();
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

Rational min_modulus_mult(const MeasureSpaceModel& m) { return ess_inf_abs(m); }

MultAttainment is_min_attaining_mult(const MeasureSpaceModel& m) {
  MultAttainment out;
  out.min_modulus = ess_inf_abs(m);
  for (std::size_t i = 0; i < m.cells.size(); ++i)
    if (m.cells[i].symbol.modulus == out.min_modulus) {
      out.attained = true;
      out.witness = m.cells[i].label;
      return out;
    }
  for (std::size_t t = 0; t < m.tails.size(); ++t)
    if (m.tails[t].seq.inf_attained() && m.tails[t].seq.inf_value() == out.min_modulus) {
      out.attained = true;
      out.witness = tail_member_label(t, m.tails[t].seq.start_index());
      return out;
    }
  return out;
}

NormalDiagonalModel to_diagonal(const MeasureSpaceModel& m) {
  validate_model(m);
  std::vector<NormalCell> cells;
  cells.reserve(m.cells.size());
  for (const auto& c : m.cells)
    cells.push_back({c.symbol, c.kind == CellKind::Diffuse ? Multiplicity::infinite()
                                                           : Multiplicity::finite(1)});
  std::vector<NormalTail> tails;
  tails.reserve(m.tails.size());
  for (const auto& t : m.tails) tails.push_back({t.seq, t.phase});
  return make_normal_model(std::move(cells), std::move(tails));
}

MultAMClassification classify_am_mult(const MeasureSpaceModel& m) {
  validate_model(m);
  require_infinite_measure_model(m);
  MultAMClassification out;
  const auto ess = essential_moduli(m);
  if (ess.size() != 1) {
    out.reason = AMReason::EssentialSpectrumNotSingleton;
  } else {
    out.is_am = true;
    for (const auto& t : m.tails)
      if (!t.seq.increasing()) {
        out.is_am = false;
        out.reason = AMReason::InfinitelyManyEigenvaluesAboveMe;
        break;
      }
  }
  out.trace = peel_levels(m, /*want_min=*/true);
  return out;
}

MultANClassification classify_an_mult(const MeasureSpaceModel& m) {
  validate_model(m);
  require_infinite_measure_model(m);
  MultANClassification out;
  const auto ess = essential_moduli(m);
  if (ess.size() != 1) {
    out.reason = ANReason::EssentialSpectrumNotSingleton;
  } else {
    out.is_an = true;
    for (const auto& t : m.tails)
      if (t.seq.increasing()) {
        out.is_an = false;
        out.reason = ANReason::InfinitelyManyEigenvaluesBelowMe;
        break;
      }
  }
  out.trace = peel_levels(m, /*want_min=*/false);
  return out;
}

}  // namespace amspec

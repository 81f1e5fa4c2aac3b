// models.cpp

#include "amspec/models.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace amspec {

namespace {

struct Layout {
  std::int64_t finite_prefix = 0;
  std::vector<std::size_t> finite_cells;    // cell positions, declaration order
  std::vector<std::size_t> infinite_cells;  // cell positions, declaration order
  std::int64_t tails = 0;
  std::int64_t streams() const { return static_cast<std::int64_t>(infinite_cells.size()) + tails; }
};

Layout layout_of(const std::vector<Multiplicity>& mults, std::size_t tail_count) {
  Layout l;
  l.tails = static_cast<std::int64_t>(tail_count);
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i].is_infinite()) {
      l.infinite_cells.push_back(i);
    } else {
      l.finite_cells.push_back(i);
      l.finite_prefix += mults[i].count();
    }
  }
  return l;
}

std::vector<Multiplicity> cell_mults(const PositiveDiagonalModel& m) {
  std::vector<Multiplicity> v;
  v.reserve(m.cells.size());
  for (const auto& c : m.cells) v.push_back(c.mult);
  return v;
}

std::vector<Multiplicity> cell_mults(const NormalDiagonalModel& m) {
  std::vector<Multiplicity> v;
  v.reserve(m.cells.size());
  for (const auto& c : m.cells) v.push_back(c.mult);
  return v;
}

// Entry at canonical position i, resolved through cell/tail accessors.
template <typename CellValue, typename TailValue>
auto entry_at(const Layout& l, std::int64_t i, CellValue cell_value, TailValue tail_value,
              const std::vector<Multiplicity>& mults) {
  if (i < l.finite_prefix) {
    std::int64_t acc = 0;
    for (std::size_t pos : l.finite_cells) {
      acc += mults[pos].count();
      if (i < acc) return cell_value(pos);
    }
  }
  const std::int64_t s = l.streams();
  if (s == 0) throw std::invalid_argument("entries: index beyond a finite-dimensional model");
  const std::int64_t off = i - l.finite_prefix;
  const std::int64_t j = off % s;
  const std::int64_t rep = off / s;
  if (j < static_cast<std::int64_t>(l.infinite_cells.size()))
    return cell_value(l.infinite_cells[static_cast<std::size_t>(j)]);
  return tail_value(static_cast<std::size_t>(j - static_cast<std::int64_t>(l.infinite_cells.size())), rep);
}

std::int64_t first_index_impl(const Layout& l, const std::vector<Multiplicity>& mults,
                              std::size_t cell) {
  if (!mults[cell].is_infinite()) {
    std::int64_t acc = 0;
    for (std::size_t pos : l.finite_cells) {
      if (pos == cell) return acc;
      acc += mults[pos].count();
    }
    throw std::logic_error("cell_first_index: cell not found");
  }
  const auto it = std::find(l.infinite_cells.begin(), l.infinite_cells.end(), cell);
  return l.finite_prefix + static_cast<std::int64_t>(it - l.infinite_cells.begin());
}

std::int64_t tail_index_impl(const Layout& l, std::size_t tail, std::int64_t rep) {
  const std::int64_t j = static_cast<std::int64_t>(l.infinite_cells.size() + tail);
  return l.finite_prefix + rep * l.streams() + j;
}

}  // namespace

// --------------------------------------------------------------------------
// Construction and validation
// --------------------------------------------------------------------------

void validate_model(const PositiveDiagonalModel& m) {
  if (m.cells.empty() && m.tails.empty())
    throw std::invalid_argument("PositiveDiagonalModel: model must have at least one component");
  for (const auto& c : m.cells)
    if (c.value < 0) throw std::invalid_argument("PositiveDiagonalModel: negative cell value");
  for (const auto& t : m.tails)
    if (t.value(t.start_index()) == 0)
      throw std::invalid_argument("PositiveDiagonalModel: tail term equal to zero; split it into a cell");
}

PositiveDiagonalModel make_positive_model(std::vector<PositiveCell> cells,
                                          std::vector<TailSequence> tails) {
  PositiveDiagonalModel m;
  m.cells = std::move(cells);
  for (auto& t : tails) {
    if (t.value(t.start_index()) == 0) {
      m.cells.push_back({Rational(0), Multiplicity::finite(1)});
      m.tails.push_back(t.with_start(t.start_index() + 1));
    } else {
      m.tails.push_back(std::move(t));
    }
  }
  validate_model(m);
  return m;
}

void validate_model(const NormalDiagonalModel& m) {
  if (m.cells.empty() && m.tails.empty())
    throw std::invalid_argument("NormalDiagonalModel: model must have at least one component");
  for (const auto& t : m.tails) {
    if (!approximately_unit(t.phase))
      throw std::invalid_argument("NormalDiagonalModel: tail phase is not a unit complex number");
    if (t.seq.value(t.seq.start_index()) == 0)
      throw std::invalid_argument("NormalDiagonalModel: tail term equal to zero; split it into a cell");
  }
}

NormalDiagonalModel make_normal_model(std::vector<NormalCell> cells,
                                      std::vector<NormalTail> tails) {
  NormalDiagonalModel m;
  m.cells = std::move(cells);
  for (auto& t : tails) {
    if (t.seq.value(t.seq.start_index()) == 0) {
      m.cells.push_back({Scalar(), Multiplicity::finite(1)});
      m.tails.push_back({t.seq.with_start(t.seq.start_index() + 1), t.phase});
    } else {
      m.tails.push_back(std::move(t));
    }
  }
  validate_model(m);
  return m;
}

NormalDiagonalModel as_normal(const PositiveDiagonalModel& m) {
  NormalDiagonalModel n;
  n.cells.reserve(m.cells.size());
  for (const auto& c : m.cells) n.cells.push_back({Scalar(c.value, {1.0, 0.0}), c.mult});
  n.tails.reserve(m.tails.size());
  for (const auto& t : m.tails) n.tails.push_back({t, {1.0, 0.0}});
  return n;
}

void validate_model(const ShiftedDiagonalModel& m) {
  if (m.shift_order < 1)
    throw std::invalid_argument("ShiftedDiagonalModel: shift_order must be >= 1");
  validate_model(m.diag);
}

ShiftedDiagonalModel make_shifted_model(std::int64_t shift_order, PositiveDiagonalModel diag) {
  ShiftedDiagonalModel m{shift_order, std::move(diag)};
  validate_model(m);
  return m;
}

// --------------------------------------------------------------------------
// Enumeration and truncation
// --------------------------------------------------------------------------

bool finite_dimensional(const PositiveDiagonalModel& m) {
  if (!m.tails.empty()) return false;
  return std::none_of(m.cells.begin(), m.cells.end(),
                      [](const PositiveCell& c) { return c.mult.is_infinite(); });
}

bool finite_dimensional(const NormalDiagonalModel& m) {
  if (!m.tails.empty()) return false;
  return std::none_of(m.cells.begin(), m.cells.end(),
                      [](const NormalCell& c) { return c.mult.is_infinite(); });
}

std::int64_t finite_dimension(const PositiveDiagonalModel& m) {
  if (!finite_dimensional(m)) throw std::logic_error("finite_dimension: model is infinite-dimensional");
  std::int64_t d = 0;
  for (const auto& c : m.cells) d += c.mult.count();
  return d;
}

std::vector<Rational> entries(const PositiveDiagonalModel& m, std::int64_t n) {
  const Layout l = layout_of(cell_mults(m), m.tails.size());
  const auto mults = cell_mults(m);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    out.push_back(entry_at(
        l, i, [&](std::size_t pos) { return m.cells[pos].value; },
        [&](std::size_t t, std::int64_t rep) { return m.tails[t].value(m.tails[t].start_index() + rep); },
        mults));
  return out;
}

std::vector<Scalar> entries(const NormalDiagonalModel& m, std::int64_t n) {
  const Layout l = layout_of(cell_mults(m), m.tails.size());
  const auto mults = cell_mults(m);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    out.push_back(entry_at(
        l, i, [&](std::size_t pos) { return m.cells[pos].value; },
        [&](std::size_t t, std::int64_t rep) {
          return Scalar(m.tails[t].seq.value(m.tails[t].seq.start_index() + rep), m.tails[t].phase);
        },
        mults));
  return out;
}

std::int64_t cell_first_index(const PositiveDiagonalModel& m, std::size_t cell) {
  const auto mults = cell_mults(m);
  return first_index_impl(layout_of(mults, m.tails.size()), mults, cell);
}

std::int64_t tail_term_index(const PositiveDiagonalModel& m, std::size_t tail, std::int64_t n) {
  const std::int64_t start = m.tails[tail].start_index();
  if (n < start) throw std::invalid_argument("tail_term_index: index before tail start");
  return tail_index_impl(layout_of(cell_mults(m), m.tails.size()), tail, n - start);
}

std::int64_t cell_first_index(const NormalDiagonalModel& m, std::size_t cell) {
  const auto mults = cell_mults(m);
  return first_index_impl(layout_of(mults, m.tails.size()), mults, cell);
}

std::int64_t tail_term_index(const NormalDiagonalModel& m, std::size_t tail, std::int64_t n) {
  const std::int64_t start = m.tails[tail].seq.start_index();
  if (n < start) throw std::invalid_argument("tail_term_index: index before tail start");
  return tail_index_impl(layout_of(cell_mults(m), m.tails.size()), tail, n - start);
}

FiniteMatrix truncate(const PositiveDiagonalModel& m, std::int64_t n) {
  const auto ent = entries(m, n);
  FiniteMatrix a = FiniteMatrix::Zero(n, n);
  for (std::int64_t i = 0; i < n; ++i) a(i, i) = to_double(ent[static_cast<std::size_t>(i)]);
  return a;
}

FiniteMatrix truncate(const NormalDiagonalModel& m, std::int64_t n) {
  const auto ent = entries(m, n);
  FiniteMatrix a = FiniteMatrix::Zero(n, n);
  for (std::int64_t i = 0; i < n; ++i) a(i, i) = ent[static_cast<std::size_t>(i)].approx();
  return a;
}

FiniteMatrix truncate(const ShiftedDiagonalModel& m, std::int64_t n) {
  const std::int64_t k = m.shift_order;
  FiniteMatrix a = FiniteMatrix::Zero(n, n);
  if (n > k) {
    const auto ent = entries(m.diag, n - k);
    for (std::int64_t i = 0; i + k < n; ++i) a(i + k, i) = to_double(ent[static_cast<std::size_t>(i)]);
  }
  return a;
}

FiniteMatrix truncate(const CoShiftedDiagonalModel& m, std::int64_t n) {
  return truncate(ShiftedDiagonalModel{m.shift_order, m.diag}, n).adjoint();
}

// --------------------------------------------------------------------------
// Functionals
// --------------------------------------------------------------------------

Rational operator_norm(const PositiveDiagonalModel& m) {
  validate_model(m);
  bool first = true;
  Rational best(0);
  for (const auto& c : m.cells) {
    if (first || c.value > best) best = c.value;
    first = false;
  }
  for (const auto& t : m.tails) {
    const Rational s = t.sup_value();
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

Rational operator_norm(const NormalDiagonalModel& m) {
  validate_model(m);
  bool first = true;
  Rational best(0);
  for (const auto& c : m.cells) {
    if (first || c.value.modulus > best) best = c.value.modulus;
    first = false;
  }
  for (const auto& t : m.tails) {
    const Rational s = t.seq.sup_value();
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

Rational operator_norm(const ShiftedDiagonalModel& m) { return operator_norm(m.diag); }

Rational min_modulus(const PositiveDiagonalModel& m) {
  validate_model(m);
  bool first = true;
  Rational best(0);
  for (const auto& c : m.cells) {
    if (first || c.value < best) best = c.value;
    first = false;
  }
  for (const auto& t : m.tails) {
    const Rational s = t.inf_value();
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

Rational min_modulus(const NormalDiagonalModel& m) { return min_modulus(modulus(m)); }

Rational min_modulus(const ShiftedDiagonalModel& m) { return min_modulus(m.diag); }

MinAttainment is_min_attaining(const PositiveDiagonalModel& m) {
  MinAttainment r;
  r.min_modulus = min_modulus(m);
  const auto mults = cell_mults(m);
  const Layout l = layout_of(mults, m.tails.size());
  // Scan in canonical-index order: finite cells, infinite cells, tails.
  for (std::size_t pos : l.finite_cells)
    if (m.cells[pos].value == r.min_modulus) {
      r.attained = true;
      r.witness_index = first_index_impl(l, mults, pos);
      return r;
    }
  for (std::size_t pos : l.infinite_cells)
    if (m.cells[pos].value == r.min_modulus) {
      r.attained = true;
      r.witness_index = first_index_impl(l, mults, pos);
      return r;
    }
  for (std::size_t t = 0; t < m.tails.size(); ++t)
    if (m.tails[t].inf_attained() && m.tails[t].inf_value() == r.min_modulus) {
      r.attained = true;
      r.witness_index = tail_index_impl(l, t, 0);
      return r;
    }
  return r;
}

MinAttainment is_min_attaining(const NormalDiagonalModel& m) { return is_min_attaining(modulus(m)); }

bool range_closed(const PositiveDiagonalModel& m) {
  return std::none_of(m.tails.begin(), m.tails.end(),
                      [](const TailSequence& t) { return t.limit() == 0; });
}

bool range_closed(const NormalDiagonalModel& m) {
  return std::none_of(m.tails.begin(), m.tails.end(),
                      [](const NormalTail& t) { return t.seq.limit() == 0; });
}

bool range_closed(const ShiftedDiagonalModel& m) { return range_closed(m.diag); }

// --------------------------------------------------------------------------
// Derived operators
// --------------------------------------------------------------------------

PositiveDiagonalModel adjoint(const PositiveDiagonalModel& m) { return m; }

NormalDiagonalModel adjoint(const NormalDiagonalModel& m) {
  NormalDiagonalModel out;
  out.cells.reserve(m.cells.size());
  for (const auto& c : m.cells) out.cells.push_back({c.value.conjugate(), c.mult});
  out.tails.reserve(m.tails.size());
  for (const auto& t : m.tails) out.tails.push_back({t.seq, std::conj(t.phase)});
  return out;
}

CoShiftedDiagonalModel adjoint(const ShiftedDiagonalModel& m) { return {m.shift_order, m.diag}; }

ShiftedDiagonalModel adjoint(const CoShiftedDiagonalModel& m) { return {m.shift_order, m.diag}; }

PositiveDiagonalModel pseudoinverse(const PositiveDiagonalModel& m) {
  if (!range_closed(m))
    throw std::domain_error(
        "pseudoinverse: unbounded inverse, the diagonal accumulates at 0 (range not closed)");
  std::vector<PositiveCell> cells;
  cells.reserve(m.cells.size());
  for (const auto& c : m.cells)
    cells.push_back({c.value == 0 ? Rational(0) : 1 / c.value, c.mult});
  std::vector<TailSequence> tails;
  tails.reserve(m.tails.size());
  for (const auto& t : m.tails) tails.push_back(t.pseudo_reciprocal());
  return make_positive_model(std::move(cells), std::move(tails));
}

NormalDiagonalModel pseudoinverse(const NormalDiagonalModel& m) {
  if (!range_closed(m))
    throw std::domain_error(
        "pseudoinverse: unbounded inverse, the diagonal accumulates at 0 (range not closed)");
  std::vector<NormalCell> cells;
  cells.reserve(m.cells.size());
  for (const auto& c : m.cells) cells.push_back({c.value.pseudo_reciprocal(), c.mult});
  std::vector<NormalTail> tails;
  tails.reserve(m.tails.size());
  for (const auto& t : m.tails) tails.push_back({t.seq.pseudo_reciprocal(), std::conj(t.phase)});
  return make_normal_model(std::move(cells), std::move(tails));
}

CoShiftedDiagonalModel pseudoinverse(const ShiftedDiagonalModel& m) {
  return {m.shift_order, pseudoinverse(m.diag)};
}

ShiftedDiagonalModel pseudoinverse(const CoShiftedDiagonalModel& m) {
  return {m.shift_order, pseudoinverse(m.diag)};
}

PositiveDiagonalModel square(const PositiveDiagonalModel& m) {
  std::vector<PositiveCell> cells;
  cells.reserve(m.cells.size());
  for (const auto& c : m.cells) cells.push_back({c.value * c.value, c.mult});
  std::vector<TailSequence> tails;
  tails.reserve(m.tails.size());
  for (const auto& t : m.tails) tails.push_back(t.squared());
  return make_positive_model(std::move(cells), std::move(tails));
}

GramPair gram_pair(const ShiftedDiagonalModel& m) {
  GramPair g{square(m.diag), square(m.diag)};
  auto cells = g.t_tstar.cells;
  cells.push_back({Rational(0), Multiplicity::finite(m.shift_order)});
  g.t_tstar = make_positive_model(std::move(cells), g.t_tstar.tails);
  return g;
}

PositiveDiagonalModel modulus(const NormalDiagonalModel& m) {
  std::vector<PositiveCell> cells;
  cells.reserve(m.cells.size());
  for (const auto& c : m.cells) cells.push_back({c.value.modulus, c.mult});
  std::vector<TailSequence> tails;
  tails.reserve(m.tails.size());
  for (const auto& t : m.tails) tails.push_back(t.seq);
  return make_positive_model(std::move(cells), std::move(tails));
}

PositiveDiagonalModel modulus(const ShiftedDiagonalModel& m) { return m.diag; }

PositiveDiagonalModel direct_sum(const PositiveDiagonalModel& a, const PositiveDiagonalModel& b) {
  std::vector<PositiveCell> cells = a.cells;
  cells.insert(cells.end(), b.cells.begin(), b.cells.end());
  std::vector<TailSequence> tails = a.tails;
  tails.insert(tails.end(), b.tails.begin(), b.tails.end());
  return make_positive_model(std::move(cells), std::move(tails));
}

NormalDiagonalModel direct_sum(const NormalDiagonalModel& a, const NormalDiagonalModel& b) {
  std::vector<NormalCell> cells = a.cells;
  cells.insert(cells.end(), b.cells.begin(), b.cells.end());
  std::vector<NormalTail> tails = a.tails;
  tails.insert(tails.end(), b.tails.begin(), b.tails.end());
  return make_normal_model(std::move(cells), std::move(tails));
}

// --------------------------------------------------------------------------
// Restrictions
// --------------------------------------------------------------------------

PositiveDiagonalModel restrict_model(const PositiveDiagonalModel& m, const RestrictionSpec& spec) {
  if (spec.cell_keep.size() != m.cells.size() || spec.tail_keep.size() != m.tails.size())
    throw std::invalid_argument("restrict_model: spec shape does not match the model");
  std::vector<PositiveCell> cells;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    const auto& keep = spec.cell_keep[i];
    if (!keep) continue;
    if (!m.cells[i].mult.is_infinite()) {
      if (keep->is_infinite() || keep->count() > m.cells[i].mult.count())
        throw std::invalid_argument("restrict_model: kept multiplicity exceeds the cell");
    }
    cells.push_back({m.cells[i].value, *keep});
  }
  std::vector<TailSequence> tails;
  for (std::size_t t = 0; t < m.tails.size(); ++t) {
    const auto& keep = spec.tail_keep[t];
    const auto& seq = m.tails[t];
    switch (keep.kind) {
      case RestrictionSpec::TailKeep::Kind::Drop:
        break;
      case RestrictionSpec::TailKeep::Kind::From:
        tails.push_back(seq.with_start(std::max(keep.from, seq.start_index())));
        break;
      case RestrictionSpec::TailKeep::Kind::Indices: {
        for (std::int64_t n : keep.indices) {
          if (n < seq.start_index())
            throw std::invalid_argument("restrict_model: tail index before start");
          cells.push_back({seq.value(n), Multiplicity::finite(1)});
        }
        break;
      }
    }
  }
  if (cells.empty() && tails.empty())
    throw std::invalid_argument("restrict_model: empty restriction");
  return make_positive_model(std::move(cells), std::move(tails));
}

}  // namespace amspec

// classify.cpp

#include "amspec/classify.hpp"

#include "amspec/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace amspec {

std::string to_string(AMReason r) {
  switch (r) {
    case AMReason::OK: return "OK";
    case AMReason::EssentialSpectrumNotSingleton: return "EssentialSpectrumNotSingleton";
    case AMReason::InfinitelyManyEigenvaluesAboveMe: return "InfinitelyManyEigenvaluesAboveMe";
  }
  return "?";
}

std::string to_string(ANReason r) {
  switch (r) {
    case ANReason::OK: return "OK";
    case ANReason::EssentialSpectrumNotSingleton: return "EssentialSpectrumNotSingleton";
    case ANReason::InfinitelyManyEigenvaluesBelowMe: return "InfinitelyManyEigenvaluesBelowMe";
  }
  return "?";
}

std::vector<Rational> essential_values(const PositiveDiagonalModel& m) {
  std::vector<Rational> out;
  for (const auto& c : m.cells)
    if (c.mult.is_infinite()) out.push_back(c.value);
  for (const auto& t : m.tails) out.push_back(t.limit());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_infinite_dimensional(const PositiveDiagonalModel& m) {
  validate_model(m);
  if (finite_dimensional(m))
    throw std::invalid_argument("classification requires an infinite-dimensional model");
}

// beta - value as a tail sequence; plain increasing tails simplify to a plain
// rule decreasing to 0.
TailSequence compact_part_tail(const TailSequence& t, const Rational& beta) {
  if (t.is_plain() && t.rule().direction == TailDirection::FromBelow && t.rule().limit == beta)
    return TailSequence(
        TailRule{Rational(0), TailDirection::FromAbove, t.rule().coefficient, t.rule().exponent,
                 t.rule().start_index});
  return TailSequence(t.rule(), t.power(), Rational(beta - t.offset()), -t.sign());
}

AMDecomposition build_decomposition(const PositiveDiagonalModel& m, const Rational& beta) {
  std::vector<PositiveCell> k_cells;
  std::vector<PositiveCell> f_cells;
  k_cells.reserve(m.cells.size());
  f_cells.reserve(m.cells.size() + 1);
  for (const auto& c : m.cells) {
    k_cells.push_back({c.value <= beta ? Rational(beta - c.value) : Rational(0), c.mult});
    f_cells.push_back({c.value > beta ? Rational(c.value - beta) : Rational(0), c.mult});
  }
  std::vector<TailSequence> k_tails;
  k_tails.reserve(m.tails.size());
  for (const auto& t : m.tails) k_tails.push_back(compact_part_tail(t, beta));
  if (!m.tails.empty()) f_cells.push_back({Rational(0), Multiplicity::infinite()});
  AMDecomposition d;
  d.beta = beta;
  d.compact_part = make_positive_model(std::move(k_cells), std::move(k_tails));
  d.finite_part = make_positive_model(std::move(f_cells), {});
  return d;
}

}  // namespace

AMClassification classify_am_positive(const PositiveDiagonalModel& m) {
  require_infinite_dimensional(m);
  AMClassification out;
  const std::vector<Rational> ess = essential_values(m);
  if (ess.size() != 1) {
    out.reason = AMReason::EssentialSpectrumNotSingleton;
    return out;
  }
  const Rational beta = ess.front();
  for (const auto& t : m.tails)
    if (!t.increasing()) {
      // the whole tail sits strictly above its limit beta
      out.reason = AMReason::InfinitelyManyEigenvaluesAboveMe;
      return out;
    }
  out.is_am = true;
  out.reason = AMReason::OK;
  out.decomposition = build_decomposition(m, beta);
  return out;
}

ANClassification classify_an_positive(const PositiveDiagonalModel& m) {
  require_infinite_dimensional(m);
  ANClassification out;
  const std::vector<Rational> ess = essential_values(m);
  if (ess.size() != 1) {
    out.reason = ANReason::EssentialSpectrumNotSingleton;
    return out;
  }
  for (const auto& t : m.tails)
    if (t.increasing()) {
      // the whole tail sits strictly below its limit alpha
      out.reason = ANReason::InfinitelyManyEigenvaluesBelowMe;
      return out;
    }
  out.is_an = true;
  return out;
}

DualityReport check_duality_am_an(const PositiveDiagonalModel& m) {
  DualityReport r;
  r.am = classify_am_positive(m).is_am;
  r.closed_range = range_closed(m);
  if (r.closed_range) r.an_of_pseudoinverse = classify_an_positive(pseudoinverse(m)).is_an;
  r.consistent = r.am == (r.closed_range && r.an_of_pseudoinverse.value_or(false));
  return r;
}

AdjointTransferReport classify_am_adjoint_transfer(const ShiftedDiagonalModel& m) {
  validate_model(m);
  const GramPair g = gram_pair(m);
  AdjointTransferReport r;
  r.ess_gram = essential_values(g.tstar_t);
  r.ess_gram_adj = essential_values(g.t_tstar);
  r.ess_equal = r.ess_gram == r.ess_gram_adj;
  r.gram = classify_am_positive(g.tstar_t);
  r.gram_adj = classify_am_positive(g.t_tstar);
  r.verdicts_agree = r.gram.is_am == r.gram_adj.is_am;
  return r;
}

AMClassification classify_am_normal(const NormalDiagonalModel& m) {
  return classify_am_positive(modulus(m));
}

SpectralDecomposition spectral_decomposition_normal(const NormalDiagonalModel& m) {
  const AMClassification cls = classify_am_normal(m);
  if (!cls.is_am)
    throw std::domain_error("spectral_decomposition_normal: model is not AM (" +
                            to_string(cls.reason) + ")");
  SpectralDecomposition d;
  std::map<Rational, SpectralDecomposition::FixedBlock> blocks;
  for (std::size_t s = 0; s < m.cells.size(); ++s) {
    const auto& c = m.cells[s];
    auto& b = blocks[c.value.modulus];
    b.beta = c.value.modulus;
    b.cells.push_back({s, c.value.phase, c.mult});
  }
  d.families.reserve(m.tails.size());
  for (std::size_t t = 0; t < m.tails.size(); ++t) {
    const auto& tail = m.tails[t];
    SpectralDecomposition::TailFamilyBlock fam{t, tail.seq, tail.phase, {}};
    for (auto& [beta, b] : blocks)
      if (const auto n = tail.seq.index_of(beta)) {
        b.tail_terms.push_back({t, *n, tail.phase});
        fam.extracted.push_back(*n);
      }
    std::sort(fam.extracted.begin(), fam.extracted.end());
    d.families.push_back(std::move(fam));
  }
  d.fixed.reserve(blocks.size());
  for (auto& [beta, b] : blocks) d.fixed.push_back(std::move(b));
  return d;
}

NormalDiagonalModel reconstruct(const SpectralDecomposition& d) {
  std::size_t cell_count = 0;
  for (const auto& b : d.fixed) cell_count += b.cells.size();
  std::vector<std::optional<NormalCell>> cells(cell_count);
  for (const auto& b : d.fixed) {
    for (const auto& member : b.cells) {
      if (member.cell_slot >= cell_count || cells[member.cell_slot])
        throw std::invalid_argument("reconstruct: cell slots must be a bijection");
      cells[member.cell_slot] = NormalCell{Scalar(b.beta, member.phase), member.mult};
    }
    for (const auto& term : b.tail_terms) {
      if (term.tail_slot >= d.families.size())
        throw std::invalid_argument("reconstruct: tail term references an unknown family");
      const auto& fam = d.families[term.tail_slot];
      if (!std::binary_search(fam.extracted.begin(), fam.extracted.end(), term.index))
        throw std::invalid_argument("reconstruct: tail term not marked extracted in its family");
      if (fam.seq.value(term.index) != b.beta)
        throw std::invalid_argument("reconstruct: tail term modulus differs from its block");
    }
  }
  NormalDiagonalModel out;
  out.cells.reserve(cell_count);
  for (auto& c : cells) {
    if (!c) throw std::invalid_argument("reconstruct: missing cell slot");
    out.cells.push_back(*c);
  }
  std::vector<std::optional<NormalTail>> tails(d.families.size());
  for (const auto& fam : d.families) {
    if (fam.tail_slot >= tails.size() || tails[fam.tail_slot])
      throw std::invalid_argument("reconstruct: tail slots must be a bijection");
    tails[fam.tail_slot] = NormalTail{fam.seq, fam.phase};
  }
  out.tails.reserve(tails.size());
  for (auto& t : tails) out.tails.push_back(*t);
  validate_model(out);
  return out;
}

AMClassification direct_sum_am(const FiniteMatrix& s, const PositiveDiagonalModel& m) {
  const EigenResult eig = hermitian_eigen(s);
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  std::vector<PositiveCell> cells = m.cells;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda < -1e-9 * scale)
      throw std::invalid_argument("direct_sum_am: the finite block is not positive semidefinite");
    cells.push_back({rational_from_double(std::max(lambda, 0.0)), Multiplicity::finite(1)});
  }
  return classify_am_positive(make_positive_model(std::move(cells), m.tails));
}

std::optional<RestrictionSpec> non_attaining_restriction(const PositiveDiagonalModel& m) {
  for (std::size_t t = 0; t < m.tails.size(); ++t) {
    if (m.tails[t].increasing()) continue;
    RestrictionSpec spec;
    spec.cell_keep.assign(m.cells.size(), std::nullopt);
    spec.tail_keep.assign(m.tails.size(), {});
    spec.tail_keep[t].kind = RestrictionSpec::TailKeep::Kind::From;
    spec.tail_keep[t].from = m.tails[t].start_index();
    return spec;
  }
  return std::nullopt;
}

}  // namespace amspec

// report.cpp — Description-to-report pipeline with exact sections and
// finite-section numeric cross-checks.

#include "amspec/report.hpp"

#include "amspec/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace amspec {

namespace {

constexpr std::int64_t kOracleCap = 256;  // dense factorizations stay fast

Json options_json(const PipelineOptions& opt) {
  Json j = Json::object();
  j["truncation"] = opt.truncation;
  j["tolerance"] = opt.tolerance;
  j["emit_witness"] = opt.emit_witness;
  j["timing"] = opt.timing;
  return j;
}

Json rational_list_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(rational_to_json(q));
  return arr;
}

Json scalar_list_json(const std::vector<Scalar>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

Json point_family_json(const PointFamily& f) {
  Json j = Json::object();
  if (const auto* pv = std::get_if<PointValue>(&f)) {
    j["type"] = "value";
    j["value"] = scalar_to_json(pv->value);
    j["multiplicity"] = multiplicity_to_json(pv->mult);
  } else {
    const auto& pt = std::get<PointTail>(f);
    j["type"] = "family";
    j["sequence"] = tail_to_json(pt.seq);
    j["phase"] = phase_to_json(pt.phase);
    j["term_multiplicity"] = pt.term_mult;
    Json excluded = Json::array();
    for (auto n : pt.excluded) excluded.push_back(n);
    j["excluded"] = std::move(excluded);
  }
  return j;
}

std::int64_t oracle_dimension(const PipelineOptions& opt, std::optional<std::int64_t> finite_dim) {
  std::int64_t n = std::clamp<std::int64_t>(opt.truncation, 1, kOracleCap);
  if (finite_dim) n = std::min(n, *finite_dim);
  return n;
}

double sv_tolerance(const PipelineOptions& opt, double scale) {
  return std::max(opt.tolerance, 1e-12) * std::max(1.0, scale);
}

double penrose_tolerance(const PipelineOptions& opt, double scale) {
  return std::max(opt.tolerance, 1e-8) * std::max(1.0, scale);
}

// Finite sections of diagonal models have the leading entry moduli as their
// singular values; compare the numeric factorization against the exact list.
Json oracle_section_diagonal(const FiniteMatrix& a, const std::vector<Rational>& moduli,
                             const Rational& exact_norm, const Rational& exact_min,
                             const PipelineOptions& opt) {
  Json j = Json::object();
  j["dimension"] = static_cast<std::int64_t>(a.rows());
  const double scale = to_double(exact_norm);
  const auto svd = svd_of(a);
  std::vector<double> expected;
  expected.reserve(moduli.size());
  for (const auto& q : moduli) expected.push_back(to_double(q));
  std::sort(expected.begin(), expected.end(), std::greater<>());
  double max_err = 0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    max_err = std::max(max_err,
                       std::abs(svd.singular_values[static_cast<Eigen::Index>(i)] - expected[i]));
  const double tol = sv_tolerance(opt, scale);
  j["singular_value_max_error"] = max_err;
  j["singular_values_consistent"] = max_err <= tol;
  const double norm_fs = operator_norm_fd(a);
  const double min_fs = min_modulus_fd(a);
  j["norm"] = Json{{"exact", to_double(exact_norm)},
                   {"finite_section", norm_fs},
                   {"consistent", norm_fs <= to_double(exact_norm) + tol}};
  j["min_modulus"] = Json{{"exact", to_double(exact_min)},
                          {"finite_section", min_fs},
                          {"consistent", min_fs >= to_double(exact_min) - tol}};
  const auto mp = check_moore_penrose(a);
  j["moore_penrose"] = Json{{"max_residual", mp.max_residual()},
                            {"pass", mp.pass(penrose_tolerance(opt, scale))}};
  j["hyponormal_finite_section"] = is_hyponormal_fd(a);
  return j;
}

Json classification_finite_dimensional() {
  Json j = Json::object();
  j["finite_dimensional"] = true;
  j["am"] = Json{{"verdict", true}, {"reason", "finite-dimensional"}};
  j["an"] = Json{{"verdict", true}, {"reason", "finite-dimensional"}};
  return j;
}

// Entrywise identity T = beta - K + F on cells and sampled tail terms, plus
// the structural side conditions ||K|| <= beta and disjoint supports.
Json decomposition_json(const PositiveDiagonalModel& m, const AMDecomposition& d) {
  Json j = Json::object();
  j["beta"] = rational_to_json(d.beta);
  j["compact_part"] = emit_model(d.compact_part);
  j["finite_part"] = emit_model(d.finite_part);

  bool recomposed = d.compact_part.cells.size() >= m.cells.size() &&
                    d.finite_part.cells.size() >= m.cells.size() &&
                    d.compact_part.tails.size() == m.tails.size();
  bool orthogonal = true;
  if (recomposed) {
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
      const auto& k = d.compact_part.cells[i];
      const auto& f = d.finite_part.cells[i];
      if (k.mult != m.cells[i].mult || f.mult != m.cells[i].mult ||
          Rational(d.beta - k.value + f.value) != m.cells[i].value)
        recomposed = false;
      if (k.value != 0 && f.value != 0) orthogonal = false;
    }
    for (std::size_t i = m.cells.size(); i < d.finite_part.cells.size() && recomposed; ++i)
      if (d.finite_part.cells[i].value != 0) orthogonal = false;
    for (std::size_t t = 0; t < m.tails.size() && recomposed; ++t) {
      const auto& orig = m.tails[t];
      const auto& comp = d.compact_part.tails[t];
      const std::int64_t lo = std::max(orig.start_index(), comp.start_index());
      for (std::int64_t n = lo; n < lo + 24; ++n)
        if (Rational(d.beta - comp.value(n)) != orig.value(n)) {
          recomposed = false;
          break;
        }
    }
  }
  j["recomposition_exact"] = recomposed;
  j["parts_orthogonal"] = orthogonal;
  j["compact_norm_within_beta"] = operator_norm(d.compact_part) <= d.beta;
  j["finite_rank"] = [&] {
    std::int64_t rank = 0;
    for (const auto& c : d.finite_part.cells)
      if (c.value != 0) rank += static_cast<std::int64_t>(c.mult.count());
    return rank;
  }();
  return j;
}

template <typename Model>
Json pseudoinverse_section(const Model& m, const SpectrumReport& spec) {
  Json j = Json::object();
  try {
    const Model pinv = pseudoinverse(m);
    j["defined"] = true;
    j["model"] = emit_model(pinv);
    j["involution_exact"] = pseudoinverse(pinv) == m;
    j["spectral_map_exact"] =
        spectrum_equal(spectrum_of_diagonal(pinv), map_spectrum_pseudoinverse(spec));
  } catch (const std::domain_error& e) {
    j["defined"] = false;
    j["error"] = e.what();
    bool map_rejects = false;
    try {
      (void)map_spectrum_pseudoinverse(spec);
    } catch (const std::domain_error&) {
      map_rejects = true;
    }
    j["spectral_map_rejects"] = map_rejects;
  }
  return j;
}

Json duality_section(const PositiveDiagonalModel& m) {
  const DualityReport r = check_duality_am_an(m);
  Json j = Json::object();
  j["am"] = r.am;
  j["range_closed"] = r.closed_range;
  j["an_of_pseudoinverse"] = r.an_of_pseudoinverse ? Json(*r.an_of_pseudoinverse) : Json(nullptr);
  j["consistent"] = r.consistent;
  return j;
}

Json restriction_section(const PositiveDiagonalModel& m, const PipelineOptions& opt) {
  Json j = Json::object();
  const auto spec = non_attaining_restriction(m);
  j["non_attaining_subspace_exists"] = spec.has_value();
  if (spec) {
    const PositiveDiagonalModel r = restrict_model(m, *spec);
    const MinAttainment att = is_min_attaining(r);
    j["restricted_min_modulus"] = rational_to_json(att.min_modulus);
    j["restricted_attained"] = att.attained;
    if (opt.emit_witness) j["spec"] = emit_restriction(*spec);
  }
  return j;
}

Json exact_section_positive(const PositiveDiagonalModel& m, const PipelineOptions& opt) {
  Json j = Json::object();
  const bool finite = finite_dimensional(m);
  j["finite_dimensional"] = finite;
  j["operator_norm"] = rational_to_json(operator_norm(m));
  const MinAttainment att = is_min_attaining(m);
  j["min_modulus"] = rational_to_json(att.min_modulus);
  j["min_modulus_attained"] = att.attained;
  if (opt.emit_witness && att.witness_index) j["min_modulus_witness"] = *att.witness_index;
  j["essential_min_modulus"] = finite ? Json(nullptr) : rational_to_json(essential_min_modulus(m));
  j["essential_values"] = rational_list_json(essential_values(m));
  j["range_closed"] = range_closed(m);
  return j;
}

std::vector<Rational> leading_moduli(const PositiveDiagonalModel& m, std::int64_t n) {
  return entries(m, n);
}

std::vector<Rational> leading_moduli(const NormalDiagonalModel& m, std::int64_t n) {
  std::vector<Rational> out;
  for (const auto& s : entries(m, n)) out.push_back(s.modulus);
  return out;
}

Json pipeline_positive(const PositiveDiagonalModel& m, const PipelineOptions& opt) {
  Json j = Json::object();
  const bool finite = finite_dimensional(m);
  j["exact"] = exact_section_positive(m, opt);
  j["spectrum"] = emit_spectrum(spectrum_of_diagonal(m));
  if (finite) {
    j["classification"] = classification_finite_dimensional();
  } else {
    Json cls = Json::object();
    cls["finite_dimensional"] = false;
    const AMClassification am = classify_am_positive(m);
    const ANClassification an = classify_an_positive(m);
    cls["am"] = emit_am(am);
    cls["an"] = emit_an(an);
    j["classification"] = std::move(cls);
    if (am.decomposition) j["decomposition"] = decomposition_json(m, *am.decomposition);
    j["duality"] = duality_section(m);
  }
  j["pseudoinverse"] = pseudoinverse_section(m, spectrum_of_diagonal(m));
  j["restriction"] = restriction_section(m, opt);
  const std::int64_t n = oracle_dimension(
      opt, finite ? std::optional<std::int64_t>(finite_dimension(m)) : std::nullopt);
  j["oracle"] =
      oracle_section_diagonal(truncate(m, n), leading_moduli(m, n), operator_norm(m),
                              min_modulus(m), opt);
  return j;
}

Json spectral_decomposition_json(const NormalDiagonalModel& m, const SpectralDecomposition& d) {
  Json j = Json::object();
  Json fixed = Json::array();
  for (const auto& b : d.fixed) {
    Json jb = Json::object();
    jb["beta"] = rational_to_json(b.beta);
    Json cells = Json::array();
    for (const auto& c : b.cells)
      cells.push_back(Json{{"cell", static_cast<std::int64_t>(c.cell_slot)},
                           {"phase", phase_to_json(c.phase)},
                           {"multiplicity", multiplicity_to_json(c.mult)}});
    jb["cells"] = std::move(cells);
    Json terms = Json::array();
    for (const auto& t : b.tail_terms)
      terms.push_back(Json{{"tail", static_cast<std::int64_t>(t.tail_slot)},
                           {"index", t.index},
                           {"phase", phase_to_json(t.phase)}});
    jb["tail_terms"] = std::move(terms);
    fixed.push_back(std::move(jb));
  }
  j["fixed"] = std::move(fixed);
  Json families = Json::array();
  for (const auto& f : d.families) {
    Json jf = Json::object();
    jf["tail"] = static_cast<std::int64_t>(f.tail_slot);
    jf["sequence"] = tail_to_json(f.seq);
    jf["phase"] = phase_to_json(f.phase);
    Json extracted = Json::array();
    for (auto n : f.extracted) extracted.push_back(n);
    jf["extracted"] = std::move(extracted);
    families.push_back(std::move(jf));
  }
  j["families"] = std::move(families);
  j["reconstruction_exact"] = reconstruct(d) == m;
  return j;
}

Json pipeline_normal(const NormalDiagonalModel& m, const PipelineOptions& opt) {
  Json j = Json::object();
  const PositiveDiagonalModel mod = modulus(m);
  const bool finite = finite_dimensional(m);
  Json exact = Json::object();
  exact["finite_dimensional"] = finite;
  exact["operator_norm"] = rational_to_json(operator_norm(m));
  const MinAttainment att = is_min_attaining(m);
  exact["min_modulus"] = rational_to_json(att.min_modulus);
  exact["min_modulus_attained"] = att.attained;
  if (opt.emit_witness && att.witness_index) exact["min_modulus_witness"] = *att.witness_index;
  exact["essential_min_modulus"] =
      finite ? Json(nullptr) : rational_to_json(essential_min_modulus(m));
  exact["range_closed"] = range_closed(m);
  j["exact"] = std::move(exact);
  const SpectrumReport spec = spectrum_of_diagonal(m);
  j["spectrum"] = emit_spectrum(spec);
  if (finite) {
    j["classification"] = classification_finite_dimensional();
  } else {
    Json cls = Json::object();
    cls["finite_dimensional"] = false;
    const AMClassification am = classify_am_normal(m);
    cls["am"] = emit_am(am);
    cls["an"] = emit_an(classify_an_positive(mod));
    j["classification"] = std::move(cls);
    if (am.is_am) j["spectral_decomposition"] = spectral_decomposition_json(m, spectral_decomposition_normal(m));
  }
  j["pseudoinverse"] = pseudoinverse_section(m, spec);
  const std::int64_t n = oracle_dimension(
      opt, finite ? std::optional<std::int64_t>(finite_dimension(mod)) : std::nullopt);
  j["oracle"] = oracle_section_diagonal(truncate(m, n), leading_moduli(m, n), operator_norm(m),
                                        min_modulus(m), opt);
  return j;
}

Json pipeline_shifted(const ShiftedDiagonalModel& m, const PipelineOptions& opt) {
  Json j = Json::object();
  const bool finite = finite_dimensional(m.diag);
  Json exact = Json::object();
  exact["shift_order"] = m.shift_order;
  exact["finite_dimensional_diagonal"] = finite;
  exact["operator_norm"] = rational_to_json(operator_norm(m));
  exact["min_modulus"] = rational_to_json(min_modulus(m));
  const MinAttainment att = is_min_attaining(m.diag);
  exact["min_modulus_attained"] = att.attained;
  exact["range_closed"] = range_closed(m);
  j["exact"] = std::move(exact);

  if (finite) {
    j["gram"] = Json{{"finite_dimensional", true}};
  } else {
    const AdjointTransferReport r = classify_am_adjoint_transfer(m);
    Json g = Json::object();
    g["essential"] = rational_list_json(r.ess_gram);
    g["essential_adjoint"] = rational_list_json(r.ess_gram_adj);
    g["essential_equal"] = r.ess_equal;
    g["am"] = emit_am(r.gram);
    g["am_adjoint"] = emit_am(r.gram_adj);
    g["verdicts_agree"] = r.verdicts_agree;
    j["gram"] = std::move(g);
  }

  Json pinv_section = Json::object();
  try {
    const CoShiftedDiagonalModel pinv = pseudoinverse(m);
    pinv_section["defined"] = true;
    pinv_section["model"] = Json{{"form", "co_shift"},
                                 {"shift_order", pinv.shift_order},
                                 {"diagonal", emit_model(pinv.diag)}};
    pinv_section["involution_exact"] = pseudoinverse(pinv) == m;
  } catch (const std::domain_error& e) {
    pinv_section["defined"] = false;
    pinv_section["error"] = e.what();
  }
  j["pseudoinverse"] = std::move(pinv_section);

  const std::int64_t n = oracle_dimension(
      opt, finite ? std::optional<std::int64_t>(finite_dimension(m.diag) + m.shift_order)
                  : std::nullopt);
  const FiniteMatrix a = truncate(m, n);
  Json oracle = Json::object();
  oracle["dimension"] = n;
  const double scale = to_double(operator_norm(m));
  const double norm_fs = operator_norm_fd(a);
  oracle["norm"] = Json{{"exact", to_double(operator_norm(m))},
                        {"finite_section", norm_fs},
                        {"consistent", norm_fs <= to_double(operator_norm(m)) + sv_tolerance(opt, scale)}};
  const auto mp = check_moore_penrose(a);
  oracle["moore_penrose"] = Json{{"max_residual", mp.max_residual()},
                                 {"pass", mp.pass(penrose_tolerance(opt, scale))}};
  const auto se = check_spectral_equalities(a);
  oracle["spectral_equality_gap"] = se.max_gap;
  oracle["spectral_equality_pass"] = se.pass(sv_tolerance(opt, scale * scale));
  oracle["hyponormal_finite_section"] = is_hyponormal_fd(a);
  j["oracle"] = std::move(oracle);
  return j;
}

Json mult_classification_json(const MeasureSpaceModel& m) {
  Json j = Json::object();
  const bool infinite =
      !m.tails.empty() || std::any_of(m.cells.begin(), m.cells.end(), [](const MeasureCell& c) {
        return c.kind == CellKind::Diffuse;
      });
  j["finite_dimensional"] = !infinite;
  if (!infinite) {
    j["am"] = Json{{"verdict", true}, {"reason", "finite-dimensional"}};
    j["an"] = Json{{"verdict", true}, {"reason", "finite-dimensional"}};
    return j;
  }
  const MultAMClassification am = classify_am_mult(m);
  const MultANClassification an = classify_an_mult(m);
  j["am"] = Json{{"verdict", am.is_am}, {"reason", to_string(am.reason)}, {"trace", emit_trace(am.trace)}};
  j["an"] = Json{{"verdict", an.is_an}, {"reason", to_string(an.reason)}, {"trace", emit_trace(an.trace)}};
  return j;
}

Json pipeline_multiplication(const MeasureSpaceModel& m, const PipelineOptions& opt) {
  Json j = Json::object();
  Json exact = Json::object();
  exact["ess_inf_abs"] = rational_to_json(ess_inf_abs(m));
  exact["ess_sup_abs"] = rational_to_json(ess_sup_abs(m));
  exact["min_modulus"] = rational_to_json(min_modulus_mult(m));
  const MultAttainment att = is_min_attaining_mult(m);
  exact["min_modulus_attained"] = att.attained;
  if (opt.emit_witness && att.attained) exact["min_modulus_witness"] = att.witness;
  j["exact"] = std::move(exact);
  j["classification"] = mult_classification_json(m);

  const NormalDiagonalModel diag = to_diagonal(m);
  j["diagonal_model"] = emit_model(diag);
  const SpectrumReport spec = spectrum_of_diagonal(diag);
  j["spectrum"] = emit_spectrum(spec);

  Json agree = Json::object();
  const bool infinite = !finite_dimensional(diag);
  if (infinite) {
    const PositiveDiagonalModel mod = modulus(diag);
    agree["am_matches"] = classify_am_mult(m).is_am == classify_am_normal(diag).is_am;
    agree["an_matches"] = classify_an_mult(m).is_an == classify_an_positive(mod).is_an;
  } else {
    agree["finite_dimensional"] = true;
  }
  agree["min_modulus_matches"] = min_modulus_mult(m) == min_modulus(diag);
  agree["attainment_matches"] = att.attained == is_min_attaining(diag).attained;
  j["diagonal_agreement"] = std::move(agree);

  const std::int64_t n = oracle_dimension(
      opt, finite_dimensional(diag) ? std::optional<std::int64_t>(finite_dimension(modulus(diag)))
                                    : std::nullopt);
  j["oracle"] = oracle_section_diagonal(truncate(diag, n), leading_moduli(diag, n),
                                        operator_norm(diag), min_modulus(diag), opt);
  return j;
}

Json pipeline_matrix(const FiniteMatrix& a, const PipelineOptions& opt) {
  Json j = Json::object();
  j["exact"] = Json{{"rows", static_cast<std::int64_t>(a.rows())},
                    {"cols", static_cast<std::int64_t>(a.cols())},
                    {"finite_dimensional", true}};
  j["classification"] = classification_finite_dimensional();
  Json oracle = Json::object();
  const double scale = std::max(1.0, operator_norm_fd(a));
  oracle["operator_norm"] = operator_norm_fd(a);
  oracle["min_modulus"] = min_modulus_fd(a);
  oracle["hermitian"] = is_hermitian(a, 1e-12 * scale);
  if (is_hermitian(a, 1e-12 * scale) && a.rows() <= 16) {
    Json vals = Json::array();
    const auto eig = hermitian_eigen(a);
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) vals.push_back(eig.values[i]);
    oracle["eigenvalues"] = std::move(vals);
  }
  const auto mp = check_moore_penrose(a);
  oracle["moore_penrose"] = Json{{"max_residual", mp.max_residual()},
                                 {"pass", mp.pass(penrose_tolerance(opt, scale))}};
  oracle["hyponormal"] = is_hyponormal_fd(a);
  const auto pn = check_paranormal_fd(a);
  oracle["paranormal"] = Json{{"holds", pn.holds}, {"worst", pn.worst}};
  oracle["kernels_symmetric"] = kernels_symmetric_fd(a);
  const auto se = check_spectral_equalities(a);
  oracle["spectral_equality_gap"] = se.max_gap;
  oracle["spectral_equality_pass"] = se.pass(sv_tolerance(opt, scale * scale));
  j["oracle"] = std::move(oracle);
  return j;
}

Json pipeline_direct_sum(const OperatorDescription& d, const PipelineOptions& opt) {
  std::vector<const PositiveDiagonalModel*> positives;
  std::vector<NormalDiagonalModel> normals;
  const FiniteMatrix* block = nullptr;
  Json summary = Json::array();
  for (const auto& s : d.summands) {
    Json js = Json::object();
    js["kind"] = to_string(s.kind);
    if (!s.name.empty()) js["name"] = s.name;
    summary.push_back(std::move(js));
    switch (s.kind) {
      case DescriptionKind::PositiveDiagonal:
        positives.push_back(&*s.positive);
        normals.push_back(as_normal(*s.positive));
        break;
      case DescriptionKind::NormalDiagonal:
        normals.push_back(*s.normal);
        break;
      case DescriptionKind::FiniteMatrixBlock:
        if (block) throw SchemaError("direct_sum: at most one finite matrix block is supported");
        block = &*s.matrix;
        break;
      default:
        throw SchemaError(
            "direct_sum: summands must be positive_diagonal, normal_diagonal or finite_matrix");
    }
  }
  Json j = Json::object();
  j["summands"] = std::move(summary);

  if (block != nullptr) {
    if (positives.empty() || positives.size() + 1 != d.summands.size())
      throw SchemaError(
          "direct_sum: a finite matrix block combines with positive diagonal summands only");
    PositiveDiagonalModel merged = *positives.front();
    for (std::size_t i = 1; i < positives.size(); ++i) merged = direct_sum(merged, *positives[i]);
    AMClassification sum_am;
    try {
      sum_am = direct_sum_am(*block, merged);
    } catch (const std::invalid_argument& e) {
      throw ModelInvariantError(std::string("direct_sum: ") + e.what());
    }
    Json sec = Json::object();
    sec["sum"] = emit_am(sum_am);
    if (finite_dimensional(merged)) {
      sec["diagonal_part_finite_dimensional"] = true;
      sec["transfer_consistent"] = sum_am.is_am;
    } else {
      const AMClassification diag_am = classify_am_positive(merged);
      sec["diagonal_part"] = emit_am(diag_am);
      sec["transfer_consistent"] = sum_am.is_am == diag_am.is_am;
    }
    j["finite_block"] = std::move(sec);
    return j;
  }

  if (normals.empty()) throw SchemaError("direct_sum: needs at least one diagonal summand");
  NormalDiagonalModel merged = normals.front();
  for (std::size_t i = 1; i < normals.size(); ++i) merged = direct_sum(merged, normals[i]);
  j["merged_model"] = emit_model(merged);

  std::vector<SpectrumReport> parts;
  parts.reserve(normals.size());
  for (const auto& nmodel : normals) parts.push_back(spectrum_of_diagonal(nmodel));
  SpectrumReport folded = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) folded = spectrum_of_direct_sum(folded, parts[i]);
  const SpectrumReport direct = spectrum_of_diagonal(merged);
  j["spectrum"] = emit_spectrum(direct);
  j["summand_union_consistent"] = spectrum_equal(folded, direct);
  Json pairs = Json::array();
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      pairs.push_back(Json{{"first", static_cast<std::int64_t>(a)},
                           {"second", static_cast<std::int64_t>(b)},
                           {"disjoint", spectra_disjoint(parts[a], parts[b])}});
  j["pairwise_disjoint"] = std::move(pairs);

  if (finite_dimensional(merged)) {
    j["classification"] = classification_finite_dimensional();
  } else {
    Json cls = Json::object();
    cls["finite_dimensional"] = false;
    cls["am"] = emit_am(classify_am_normal(merged));
    cls["an"] = emit_an(classify_an_positive(modulus(merged)));
    j["classification"] = std::move(cls);
  }
  const std::int64_t n = oracle_dimension(
      opt, finite_dimensional(merged)
               ? std::optional<std::int64_t>(finite_dimension(modulus(merged)))
               : std::nullopt);
  j["oracle"] = oracle_section_diagonal(truncate(merged, n), leading_moduli(merged, n),
                                        operator_norm(merged), min_modulus(merged), opt);
  return j;
}

}  // namespace

Json emit_spectrum(const SpectrumReport& r) {
  Json j = Json::object();
  Json point = Json::array();
  for (const auto& f : r.point) point.push_back(point_family_json(f));
  j["point"] = std::move(point);
  j["continuous"] = scalar_list_json(r.continuous);
  j["essential"] = scalar_list_json(r.essential);
  Json discrete = Json::array();
  for (const auto& f : r.discrete) discrete.push_back(point_family_json(f));
  j["discrete"] = std::move(discrete);
  return j;
}

Json emit_am(const AMClassification& c) {
  Json j = Json::object();
  j["verdict"] = c.is_am;
  j["reason"] = to_string(c.reason);
  if (c.decomposition) {
    j["beta"] = rational_to_json(c.decomposition->beta);
    j["compact_part"] = emit_model(c.decomposition->compact_part);
    j["finite_part"] = emit_model(c.decomposition->finite_part);
  }
  return j;
}

Json emit_an(const ANClassification& c) {
  Json j = Json::object();
  j["verdict"] = c.is_an;
  j["reason"] = to_string(c.reason);
  return j;
}

Json emit_trace(const ExhaustionTrace& t) {
  Json j = Json::object();
  Json levels = Json::array();
  for (const auto& lvl : t.levels) {
    Json jl = Json::object();
    jl["value"] = rational_to_json(lvl.value);
    Json members = Json::array();
    for (const auto& m : lvl.members) members.push_back(m);
    jl["members"] = std::move(members);
    levels.push_back(std::move(jl));
  }
  j["levels"] = std::move(levels);
  j["complete"] = t.complete;
  j["truncated"] = t.truncated;
  if (!t.failure.empty()) j["failure"] = t.failure;
  return j;
}

Json emit_restriction(const RestrictionSpec& spec) {
  Json j = Json::object();
  Json cells = Json::array();
  for (const auto& keep : spec.cell_keep)
    cells.push_back(keep ? multiplicity_to_json(*keep) : Json("drop"));
  j["cell_keep"] = std::move(cells);
  Json tails = Json::array();
  for (const auto& keep : spec.tail_keep) {
    Json jt = Json::object();
    switch (keep.kind) {
      case RestrictionSpec::TailKeep::Kind::Drop:
        jt["kind"] = "drop";
        break;
      case RestrictionSpec::TailKeep::Kind::From:
        jt["kind"] = "from";
        jt["from"] = keep.from;
        break;
      case RestrictionSpec::TailKeep::Kind::Indices: {
        jt["kind"] = "indices";
        Json idx = Json::array();
        for (auto n : keep.indices) idx.push_back(n);
        jt["indices"] = std::move(idx);
        break;
      }
    }
    tails.push_back(std::move(jt));
  }
  j["tail_keep"] = std::move(tails);
  return j;
}

Json run_pipeline(const OperatorDescription& d, const PipelineOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  if (opt.truncation < 1) throw SchemaError("options: truncation must be at least 1");
  if (!(opt.tolerance > 0) || !std::isfinite(opt.tolerance))
    throw SchemaError("options: tolerance must be a positive finite number");
  Json j = Json::object();
  j["schema_version"] = "1";
  j["kind"] = to_string(d.kind);
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.notes.empty()) j["notes"] = d.notes;
  j["options"] = options_json(opt);
  Json body;
  switch (d.kind) {
    case DescriptionKind::PositiveDiagonal:
      body = pipeline_positive(*d.positive, opt);
      break;
    case DescriptionKind::NormalDiagonal:
      body = pipeline_normal(*d.normal, opt);
      break;
    case DescriptionKind::ShiftedDiagonal:
      body = pipeline_shifted(*d.shifted, opt);
      break;
    case DescriptionKind::Multiplication:
      body = pipeline_multiplication(*d.measure, opt);
      break;
    case DescriptionKind::FiniteMatrixBlock:
      body = pipeline_matrix(*d.matrix, opt);
      break;
    case DescriptionKind::DirectSum:
      body = pipeline_direct_sum(d, opt);
      break;
  }
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = std::move(it.value());
  if (opt.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    j["timing"] = Json{{"seconds", elapsed.count()}};
  }
  return j;
}

}  // namespace amspec

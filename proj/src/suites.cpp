// suites.cpp — Randomized property suites.

#include "amspec/suites.hpp"

#include "amspec/classify.hpp"
#include "amspec/generators.hpp"
#include "amspec/oracle.hpp"
#include "amspec/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace amspec {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

struct Recorder {
  SuiteResult& out;
  void fail(const std::string& note, const Json& counterexample) {
    ++out.failures;
    if (out.notes.size() < kMaxCounterexamples) {
      out.notes.push_back(note);
      out.counterexamples.push_back(counterexample);
    }
  }
};

Json positive_json(const PositiveDiagonalModel& m) { return emit_model(m); }

// --- constructor-roundtrip --------------------------------------------------

void trial_constructor_roundtrip(Rng& rng, Recorder& rec) {
  const OperatorDescription d = random_description(rng);
  const Json first = emit_description(d);
  OperatorDescription parsed;
  try {
    parsed = parse_description(first);
  } catch (const std::exception& e) {
    rec.fail(std::string("emitted description failed to parse: ") + e.what(), first);
    return;
  }
  const Json second = emit_description(parsed);
  if (first.dump() != second.dump()) {
    rec.fail("emit/parse/emit is not the identity", Json{{"first", first}, {"second", second}});
    return;
  }
  // Text round trip with indentation must land on the same document.
  const OperatorDescription reparsed = parse_description_text(first.dump(2));
  if (emit_description(reparsed).dump() != first.dump())
    rec.fail("indented text round trip drifted", first);
}

// --- am-duality ---------------------------------------------------------------

void trial_am_duality(Rng& rng, Recorder& rec) {
  const bool targeted = rng() % 2 == 0;
  const PositiveDiagonalModel m =
      targeted ? random_am_positive_model(rng) : random_positive_model(rng);
  if (finite_dimensional(m)) return;
  const Json dump = positive_json(m);
  const DualityReport duality = check_duality_am_an(m);
  if (!duality.consistent) {
    rec.fail("duality: AM does not match closed range plus AN of the pseudoinverse", dump);
    return;
  }
  const AMClassification am = classify_am_positive(m);
  if (targeted && !am.is_am) {
    rec.fail("targeted generator produced a non-AM model: " + to_string(am.reason), dump);
    return;
  }
  if (!am.is_am) {
    if (am.reason == AMReason::OK) rec.fail("non-AM verdict with reason OK", dump);
    if (am.decomposition) rec.fail("non-AM verdict carries a decomposition", dump);
    return;
  }
  if (!am.decomposition) {
    rec.fail("AM verdict without a decomposition", dump);
    return;
  }
  const AMDecomposition& d = *am.decomposition;
  if (operator_norm(d.compact_part) > d.beta) {
    rec.fail("compact part exceeds beta in norm", dump);
    return;
  }
  // The three models share one canonical enumeration; the identity
  // T = beta - K + F must hold entry by entry.
  const std::int64_t n = 64;
  const auto tm = entries(m, n);
  const auto tk = entries(d.compact_part, n);
  const auto tf = entries(d.finite_part, n);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (Rational(d.beta - tk[u] + tf[u]) != tm[u]) {
      rec.fail("decomposition identity fails at canonical index " + std::to_string(i), dump);
      return;
    }
    if (tk[u] != 0 && tf[u] != 0) {
      rec.fail("compact and finite parts overlap at canonical index " + std::to_string(i), dump);
      return;
    }
  }
}

// --- pseudoinverse-spectrum ---------------------------------------------------

template <typename Model>
void pseudoinverse_trial_body(const Model& m, const Json& dump, Recorder& rec) {
  const SpectrumReport spec = spectrum_of_diagonal(m);
  const bool closed = range_closed(m);
  bool map_rejected = false;
  SpectrumReport mapped;
  try {
    mapped = map_spectrum_pseudoinverse(spec);
  } catch (const std::domain_error&) {
    map_rejected = true;
  }
  try {
    const Model pinv = pseudoinverse(m);
    if (!closed) {
      rec.fail("pseudoinverse defined although the range is not closed", dump);
      return;
    }
    if (map_rejected) {
      rec.fail("spectral map rejected a closed-range model", dump);
      return;
    }
    if (!spectrum_equal(spectrum_of_diagonal(pinv), mapped)) {
      rec.fail("sigma(pseudoinverse) differs from the mapped spectrum", dump);
      return;
    }
    if (pseudoinverse(pinv) != m) {
      rec.fail("double pseudoinversion is not the identity", dump);
      return;
    }
    const Rational mm = min_modulus(m);
    if (mm > 0 && Rational(min_modulus(pinv) * operator_norm(m)) != 1)
      rec.fail("m(T+) is not 1/||T|| for an injective model", dump);
    if (mm == 0 && min_modulus(pinv) != 0)
      rec.fail("pseudoinverse of a model with kernel lost the kernel", dump);
  } catch (const std::domain_error&) {
    if (closed) {
      rec.fail("pseudoinverse threw although the range is closed", dump);
      return;
    }
    if (!map_rejected) rec.fail("model rejected the pseudoinverse but the spectral map did not", dump);
  }
}

void trial_pseudoinverse_spectrum(Rng& rng, Recorder& rec) {
  if (rng() % 2 == 0) {
    const PositiveDiagonalModel m = random_positive_model(rng);
    pseudoinverse_trial_body(m, emit_model(m), rec);
  } else {
    const NormalDiagonalModel m = random_normal_model(rng);
    pseudoinverse_trial_body(m, emit_model(m), rec);
  }
}

// --- moore-penrose --------------------------------------------------------------

void trial_moore_penrose(Rng& rng, Recorder& rec) {
  FiniteMatrix a;
  std::string shape;
  switch (rng() % 4) {
    case 0: {
      const Eigen::Index r = 2 + rng() % 7, c = 2 + rng() % 7;
      a = random_matrix(rng, r, c, 2.0);
      shape = "dense rectangular";
      break;
    }
    case 1: {
      const Eigen::Index r = 3 + rng() % 6, c = 3 + rng() % 6;
      const Eigen::Index k = 1 + rng() % static_cast<std::uint64_t>(std::min(r, c) - 1);
      a = random_matrix(rng, r, k) * random_matrix(rng, k, c);
      shape = "rank deficient";
      break;
    }
    case 2: {
      const PositiveDiagonalModel m = random_positive_model(rng);
      a = truncate(m, 6 + static_cast<std::int64_t>(rng() % 35));
      shape = "positive diagonal section";
      break;
    }
    default: {
      const ShiftedDiagonalModel m = random_shifted_model(rng);
      a = truncate(m, 6 + static_cast<std::int64_t>(rng() % 35));
      shape = "shifted section";
      break;
    }
  }
  const auto mp = check_moore_penrose(a);
  const double tol = 1e-8 * std::max(1.0, operator_norm_fd(a));
  if (!mp.pass(tol))
    rec.fail("Moore-Penrose residual " + std::to_string(mp.max_residual()) + " on " + shape,
             emit_matrix(a));
}

// --- gram-spectra ----------------------------------------------------------------

void trial_gram_spectra(Rng& rng, Recorder& rec) {
  const ShiftedDiagonalModel m = random_shifted_model(rng);
  if (finite_dimensional(m.diag)) return;
  Json dump = Json{{"shift_order", m.shift_order}, {"diagonal", emit_model(m.diag)}};
  const AdjointTransferReport r = classify_am_adjoint_transfer(m);
  if (!r.ess_equal) {
    rec.fail("essential spectra of T*T and TT* differ", dump);
    return;
  }
  if (!r.verdicts_agree) {
    rec.fail("AM verdicts of T*T and TT* differ", dump);
    return;
  }
  const GramPair gp = gram_pair(m);
  const std::int64_t n = 40;
  const auto diag_entries = entries(m.diag, n);
  const auto gram_entries = entries(gp.tstar_t, n);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (gram_entries[u] != Rational(diag_entries[u] * diag_entries[u])) {
      rec.fail("T*T entries are not the squared diagonal", dump);
      return;
    }
  }
  const FiniteMatrix a = truncate(m, 48);
  const auto se = check_spectral_equalities(a);
  const double scale = std::max(1.0, operator_norm_fd(a));
  if (!se.pass(1e-8 * scale * scale))
    rec.fail("finite section: sigma(A*A) and sigma(AA*) disagree away from zero", dump);
}

// --- normal-decomposition ---------------------------------------------------------

void trial_normal_decomposition(Rng& rng, Recorder& rec) {
  const bool targeted = rng() % 2 == 0;
  const NormalDiagonalModel m =
      targeted ? random_normal_am_model(rng) : random_normal_model(rng);
  if (finite_dimensional(m)) return;
  const Json dump = emit_model(m);
  const AMClassification am = classify_am_normal(m);
  if (targeted && !am.is_am) {
    rec.fail("targeted normal generator produced a non-AM model", dump);
    return;
  }
  if (am.is_am) {
    const SpectralDecomposition d = spectral_decomposition_normal(m);
    if (reconstruct(d) != m) {
      rec.fail("spectral decomposition does not reconstruct the model", dump);
      return;
    }
    for (std::size_t i = 1; i < d.fixed.size(); ++i)
      if (!(d.fixed[i - 1].beta < d.fixed[i].beta)) {
        rec.fail("fixed blocks are not strictly ascending in beta", dump);
        return;
      }
  } else {
    try {
      (void)spectral_decomposition_normal(m);
      rec.fail("non-AM model produced a spectral decomposition", dump);
    } catch (const std::domain_error&) {
    }
  }
}

// --- multiplication ---------------------------------------------------------------

void trial_multiplication(Rng& rng, Recorder& rec) {
  const MeasureSpaceModel m = random_measure_model(rng);
  const Json dump = emit_model(m);
  const NormalDiagonalModel diag = to_diagonal(m);
  if (min_modulus_mult(m) != min_modulus(diag)) {
    rec.fail("ess inf |f| differs from the diagonal minimum modulus", dump);
    return;
  }
  const MultAttainment att = is_min_attaining_mult(m);
  if (att.attained != is_min_attaining(diag).attained) {
    rec.fail("attainment verdicts differ between measure and diagonal form", dump);
    return;
  }
  if (finite_dimensional(diag)) return;
  const MultAMClassification am = classify_am_mult(m);
  const MultANClassification an = classify_an_mult(m);
  if (am.is_am != classify_am_normal(diag).is_am) {
    rec.fail("AM verdicts differ between measure and diagonal form", dump);
    return;
  }
  if (an.is_an != classify_an_positive(modulus(diag)).is_an) {
    rec.fail("AN verdicts differ between measure and diagonal form", dump);
    return;
  }
  for (std::size_t i = 1; i < am.trace.levels.size(); ++i)
    if (!(am.trace.levels[i - 1].value < am.trace.levels[i].value)) {
      rec.fail("exhaustion levels are not strictly ascending", dump);
      return;
    }
  for (std::size_t i = 1; i < an.trace.levels.size(); ++i)
    if (!(an.trace.levels[i - 1].value > an.trace.levels[i].value)) {
      rec.fail("descending exhaustion levels are not strictly descending", dump);
      return;
    }
  if (am.is_am && !am.trace.failure.empty())
    rec.fail("AM verdict with a failed exhaustion level", dump);
  if (am.trace.complete && am.trace.truncated)
    rec.fail("exhaustion cannot be both complete and truncated", dump);
}

// --- paranormal-hyponormal -----------------------------------------------------

void trial_paranormal_hyponormal(Rng& rng, Recorder& rec) {
  FiniteMatrix a;
  std::string shape;
  switch (rng() % 3) {
    case 0:
      a = random_normal_matrix(rng, 3 + rng() % 14, 2.0);
      shape = "normal";
      break;
    case 1:
      a = random_matrix(rng, 3 + rng() % 10, 3 + rng() % 10);
      if (a.rows() != a.cols()) a = a.topLeftCorner(std::min(a.rows(), a.cols()),
                                                    std::min(a.rows(), a.cols()));
      shape = "dense";
      break;
    default: {
      const Eigen::Index n = 3 + rng() % 10;
      a = FiniteMatrix::Zero(n, n);
      for (Eigen::Index i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
      shape = "nilpotent jordan";
      break;
    }
  }
  const double scale = std::max(1.0, operator_norm_fd(a));
  const bool hypo = is_hyponormal_fd(a);
  const ParanormalCheck pn = check_paranormal_fd(a);
  if (shape == "normal") {
    if (!hypo) {
      rec.fail("normal matrix flagged non-hyponormal", emit_matrix(a));
      return;
    }
    if (!pn.holds) {
      rec.fail("normal matrix flagged non-paranormal", emit_matrix(a));
      return;
    }
    if (!kernels_symmetric_fd(a)) {
      rec.fail("normal matrix with asymmetric kernels", emit_matrix(a));
      return;
    }
  }
  if (shape == "nilpotent jordan") {
    if (hypo || pn.holds) {
      rec.fail("nilpotent jordan block passed a positivity probe", emit_matrix(a));
      return;
    }
  }
  if (hypo) {
    // Hyponormal implies paranormal and N(A) inside N(A*).
    if (!pn.holds) {
      rec.fail("hyponormal matrix flagged non-paranormal (" + shape + ")", emit_matrix(a));
      return;
    }
    const FiniteMatrix comm = a.adjoint() * a - a * a.adjoint();
    if (comm.norm() > 1e-6 * scale * scale)
      rec.fail("finite hyponormal matrix with a visible self-commutator", emit_matrix(a));
  }
  if (!pn.holds && pn.worst < -1e-6) {
    if (hypo) {
      rec.fail("clear paranormality violation on a hyponormal matrix", emit_matrix(a));
      return;
    }
    if (!(pn.witness_violation > 0))
      rec.fail("paranormality witness does not violate the inequality (" + shape + ")",
               emit_matrix(a));
  }
}

// --- restriction-attainment -------------------------------------------------------

void trial_restriction_attainment(Rng& rng, Recorder& rec) {
  const PositiveDiagonalModel am_model = random_am_positive_model(rng);
  const Json am_dump = emit_model(am_model);
  if (non_attaining_restriction(am_model)) {
    rec.fail("AM model reported a non-attaining coordinate subspace", am_dump);
    return;
  }
  const RestrictionSpec spec = random_restriction(rng, am_model);
  const PositiveDiagonalModel r = restrict_model(am_model, spec);
  const MinAttainment att = is_min_attaining(r);
  if (!att.attained) {
    rec.fail("a restriction of an AM model does not attain its minimum modulus",
             Json{{"model", am_dump}, {"restriction", emit_restriction(spec)}});
    return;
  }
  if (!finite_dimensional(r) && !classify_am_positive(r).is_am) {
    rec.fail("an infinite restriction of an AM model is not AM",
             Json{{"model", am_dump}, {"restriction", emit_restriction(spec)}});
    return;
  }

  const PositiveDiagonalModel mixed = random_positive_model(rng);
  const auto witness = non_attaining_restriction(mixed);
  const bool has_decreasing =
      std::any_of(mixed.tails.begin(), mixed.tails.end(),
                  [](const TailSequence& t) { return !t.increasing(); });
  if (witness.has_value() != has_decreasing) {
    rec.fail("non-attaining witness exists iff some tail decreases", emit_model(mixed));
    return;
  }
  if (witness) {
    const PositiveDiagonalModel w = restrict_model(mixed, *witness);
    const MinAttainment watt = is_min_attaining(w);
    if (watt.attained)
      rec.fail("witness restriction attains its minimum modulus", emit_model(mixed));
    else if (watt.witness_index)
      rec.fail("non-attained minimum carries a witness index", emit_model(mixed));
  }
}

// --- report-pipeline ----------------------------------------------------------------

const std::vector<std::string>& must_hold_keys() {
  static const std::vector<std::string> keys = {
      "consistent",          "pass",
      "singular_values_consistent", "verdicts_agree",
      "essential_equal",     "recomposition_exact",
      "parts_orthogonal",    "compact_norm_within_beta",
      "involution_exact",    "spectral_map_exact",
      "spectral_map_rejects", "reconstruction_exact",
      "transfer_consistent", "summand_union_consistent",
      "am_matches",          "an_matches",
      "min_modulus_matches", "attainment_matches",
      "spectral_equality_pass"};
  return keys;
}

void collect_false_checks(const Json& j, const std::string& path, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string sub = path.empty() ? it.key() : path + "." + it.key();
      const auto& keys = must_hold_keys();
      if (it.value().is_boolean() && !it.value().get<bool>() &&
          std::find(keys.begin(), keys.end(), it.key()) != keys.end())
        out.push_back(sub);
      collect_false_checks(it.value(), sub, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      collect_false_checks(j[i], path + "[" + std::to_string(i) + "]", out);
  }
}

void trial_report_pipeline(Rng& rng, Recorder& rec) {
  const OperatorDescription d = random_description(rng);
  PipelineOptions opt;
  opt.truncation = 48;
  Json first, second;
  try {
    first = run_pipeline(d, opt);
    second = run_pipeline(d, opt);
  } catch (const std::exception& e) {
    rec.fail(std::string("pipeline threw: ") + e.what(), emit_description(d));
    return;
  }
  if (first.dump() != second.dump()) {
    rec.fail("pipeline output is not deterministic", emit_description(d));
    return;
  }
  std::vector<std::string> broken;
  collect_false_checks(first, "", broken);
  if (!broken.empty())
    rec.fail("cross-check failed at " + broken.front(),
             Json{{"description", emit_description(d)}, {"report", first}});
}

using TrialFn = std::function<void(Rng&, Recorder&)>;

const std::vector<std::pair<std::string, TrialFn>>& suite_table() {
  static const std::vector<std::pair<std::string, TrialFn>> table = {
      {"constructor-roundtrip", trial_constructor_roundtrip},
      {"am-duality", trial_am_duality},
      {"pseudoinverse-spectrum", trial_pseudoinverse_spectrum},
      {"moore-penrose", trial_moore_penrose},
      {"gram-spectra", trial_gram_spectra},
      {"normal-decomposition", trial_normal_decomposition},
      {"multiplication", trial_multiplication},
      {"paranormal-hyponormal", trial_paranormal_hyponormal},
      {"restriction-attainment", trial_restriction_attainment},
      {"report-pipeline", trial_report_pipeline},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::int64_t trials) {
  const TrialFn* fn = nullptr;
  for (const auto& [key, value] : suite_table())
    if (key == name) fn = &value;
  if (fn == nullptr) throw SchemaError("suite: unknown name \"" + name + "\"");
  if (trials < 1) throw SchemaError("suite: trials must be at least 1");
  SuiteResult out;
  out.name = name;
  out.trials = trials;
  const auto started = std::chrono::steady_clock::now();
  Recorder rec{out};
  for (std::int64_t i = 0; i < trials; ++i) {
    Rng rng(seed + static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ULL);
    try {
      (*fn)(rng, rec);
    } catch (const std::exception& e) {
      rec.fail(std::string("trial threw: ") + e.what(),
               Json{{"trial", i}, {"seed", seed}});
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  out.seconds = elapsed.count();
  return out;
}

}  // namespace amspec

// spectrum.cpp

#include "amspec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace amspec {

namespace {

bool phase_equal(std::complex<double> a, std::complex<double> b) {
  return a.real() == b.real() && a.imag() == b.imag();
}

bool phase_less(std::complex<double> a, std::complex<double> b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Scalar family_limit(const PointTail& t) { return Scalar(t.seq.limit(), t.phase); }

// Index n with phase * seq(n) == v and n not excluded.
std::optional<std::int64_t> family_index_of(const PointTail& t, const Scalar& v) {
  std::optional<std::int64_t> n;
  if (v.modulus == 0) {
    n = t.seq.index_of(Rational(0));
  } else {
    if (!phase_equal(t.phase, v.phase)) return std::nullopt;
    n = t.seq.index_of(v.modulus);
  }
  if (!n) return std::nullopt;
  if (std::find(t.excluded.begin(), t.excluded.end(), *n) != t.excluded.end()) return std::nullopt;
  return n;
}

bool tail_less(const PointTail& a, const PointTail& b) {
  if (!phase_equal(a.phase, b.phase)) return phase_less(a.phase, b.phase);
  const Rational la = a.seq.limit(), lb = b.seq.limit();
  if (la != lb) return la < lb;
  const Rational fa = a.seq.value(a.seq.start_index()), fb = b.seq.value(b.seq.start_index());
  if (fa != fb) return fa < fb;
  const auto& ra = a.seq.rule();
  const auto& rb = b.seq.rule();
  if (ra.limit != rb.limit) return ra.limit < rb.limit;
  if (ra.direction != rb.direction) return ra.direction < rb.direction;
  if (ra.coefficient != rb.coefficient) return ra.coefficient < rb.coefficient;
  if (ra.exponent != rb.exponent) return ra.exponent < rb.exponent;
  if (ra.start_index != rb.start_index) return ra.start_index < rb.start_index;
  if (a.seq.power() != b.seq.power()) return a.seq.power() < b.seq.power();
  if (a.seq.offset() != b.seq.offset()) return a.seq.offset() < b.seq.offset();
  if (a.seq.sign() != b.seq.sign()) return a.seq.sign() < b.seq.sign();
  if (a.excluded != b.excluded) return a.excluded < b.excluded;
  return a.term_mult < b.term_mult;
}

std::vector<Scalar> sorted_unique(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end(), scalar_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool scalar_in(const std::vector<Scalar>& set, const Scalar& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

std::vector<PointFamily> canonical_families(const std::vector<PointFamily>& fams) {
  std::map<Scalar, Multiplicity, bool (*)(const Scalar&, const Scalar&)> values(&scalar_less);
  std::vector<PointTail> tails;
  for (const auto& f : fams) {
    if (std::holds_alternative<PointValue>(f)) {
      const auto& pv = std::get<PointValue>(f);
      auto it = values.find(pv.value);
      if (it == values.end())
        values.emplace(pv.value, pv.mult);
      else
        it->second = it->second + pv.mult;
    } else {
      tails.push_back(std::get<PointTail>(f));
    }
  }
  std::sort(tails.begin(), tails.end(), tail_less);
  // merge identical families
  std::vector<PointTail> merged;
  for (auto& t : tails) {
    if (!merged.empty()) {
      auto& last = merged.back();
      if (last.seq == t.seq && phase_equal(last.phase, t.phase) && last.excluded == t.excluded) {
        last.term_mult += t.term_mult;
        continue;
      }
    }
    merged.push_back(std::move(t));
  }
  std::vector<PointFamily> out;
  out.reserve(values.size() + merged.size());
  for (const auto& [v, m] : values) out.push_back(PointValue{v, m});
  for (auto& t : merged) out.push_back(std::move(t));
  return out;
}

std::vector<Scalar> derive_continuous(const std::vector<PointFamily>& point,
                                      const std::vector<Scalar>& essential) {
  std::vector<Scalar> out;
  for (const auto& e : essential) {
    const EigenCount c = eigen_multiplicity(point, e);
    if (!c.infinite && c.count == 0) out.push_back(e);
  }
  return out;
}

std::vector<PointFamily> derive_discrete(const std::vector<PointFamily>& point,
                                         const std::vector<Scalar>& essential) {
  std::map<Scalar, std::int64_t, bool (*)(const Scalar&, const Scalar&)> folded(&scalar_less);
  std::vector<PointTail> families;
  for (const auto& f : point) {
    if (std::holds_alternative<PointValue>(f)) {
      const auto& pv = std::get<PointValue>(f);
      if (scalar_in(essential, pv.value)) continue;
      if (pv.mult.is_infinite())
        throw std::logic_error("spectrum: infinite-multiplicity eigenvalue missing from the essential part");
      folded[pv.value] += pv.mult.count();
    } else {
      families.push_back(std::get<PointTail>(f));
    }
  }
  // Terms that collide with the essential set leave their family.
  for (auto& fam : families)
    for (const auto& e : essential)
      if (const auto n = family_index_of(fam, e)) fam.excluded.push_back(*n);
  // Terms equal to an isolated eigenvalue fold into its multiplicity.
  for (auto& fam : families)
    for (auto& [value, count] : folded)
      if (const auto n = family_index_of(fam, value)) {
        fam.excluded.push_back(*n);
        count += fam.term_mult;
      }
  std::vector<PointFamily> out;
  out.reserve(folded.size() + families.size());
  for (const auto& [v, c] : folded) out.push_back(PointValue{v, Multiplicity::finite(c)});
  for (auto& fam : families) {
    std::sort(fam.excluded.begin(), fam.excluded.end());
    out.push_back(std::move(fam));
  }
  return canonical_families(out);
}

SpectrumReport assemble(std::vector<PointFamily> point, std::vector<Scalar> essential) {
  SpectrumReport r;
  r.point = canonical_families(point);
  r.essential = sorted_unique(std::move(essential));
  r.continuous = derive_continuous(r.point, r.essential);
  r.discrete = derive_discrete(r.point, r.essential);
  return r;
}

// True when the two families share at least one value. Only called once the
// essential parts are known to be disjoint, so equal limits (which would both
// lie in the spectra anyway) may conservatively report a shared value.
bool shared_tail_value(const PointTail& a, const PointTail& b) {
  if (a.seq.limit() == b.seq.limit() && phase_equal(a.phase, b.phase)) return true;
  if (!phase_equal(a.phase, b.phase)) return false;
  const Rational la = a.seq.limit(), lb = b.seq.limit();
  const Rational d = la > lb ? Rational(la - lb) : Rational(lb - la);
  const Rational eps = d / 2;
  const auto scan = [&](const PointTail& from, const PointTail& other) {
    const Rational l = from.seq.limit();
    const TailSequence::Count c = from.seq.increasing()
                                      ? from.seq.count_below(Rational(l - eps), false)
                                      : from.seq.count_above(Rational(l + eps), false);
    if (c.infinite) throw std::logic_error("spectrum: non-converging tail enumeration");
    for (std::int64_t i = 0; i < c.count; ++i) {
      const std::int64_t n = from.seq.start_index() + i;
      if (std::find(from.excluded.begin(), from.excluded.end(), n) != from.excluded.end()) continue;
      const Scalar v(from.seq.value(n), from.phase);
      if (family_index_of(other, v)) return true;
    }
    return false;
  };
  return scan(a, b) || scan(b, a);
}

SpectrumReport map_parts(const SpectrumReport& r) {
  SpectrumReport out;
  const auto map_scalar = [](const Scalar& s) { return s.pseudo_reciprocal(); };
  const auto map_family = [&](const PointFamily& f) -> PointFamily {
    if (std::holds_alternative<PointValue>(f)) {
      const auto& pv = std::get<PointValue>(f);
      return PointValue{map_scalar(pv.value), pv.mult};
    }
    const auto& pt = std::get<PointTail>(f);
    return PointTail{pt.seq.pseudo_reciprocal(), std::conj(pt.phase), pt.term_mult, pt.excluded};
  };
  for (const auto& f : r.point) out.point.push_back(map_family(f));
  for (const auto& f : r.discrete) out.discrete.push_back(map_family(f));
  for (const auto& s : r.essential) out.essential.push_back(map_scalar(s));
  for (const auto& s : r.continuous) out.continuous.push_back(map_scalar(s));
  return canonicalized(out);
}

}  // namespace

EigenCount eigen_multiplicity(const std::vector<PointFamily>& point, const Scalar& v) {
  EigenCount out;
  for (const auto& f : point) {
    if (std::holds_alternative<PointValue>(f)) {
      const auto& pv = std::get<PointValue>(f);
      if (pv.value == v) {
        if (pv.mult.is_infinite())
          out.infinite = true;
        else
          out.count += pv.mult.count();
      }
    } else {
      const auto& pt = std::get<PointTail>(f);
      if (family_index_of(pt, v)) out.count += pt.term_mult;
    }
  }
  return out;
}

bool is_eigenvalue(const SpectrumReport& r, const Scalar& v) {
  const EigenCount c = eigen_multiplicity(r.point, v);
  return c.infinite || c.count > 0;
}

SpectrumReport spectrum_of_diagonal(const PositiveDiagonalModel& m) {
  validate_model(m);
  std::vector<PointFamily> point;
  std::vector<Scalar> essential;
  for (const auto& c : m.cells) {
    point.push_back(PointValue{Scalar(c.value, {1.0, 0.0}), c.mult});
    if (c.mult.is_infinite()) essential.push_back(Scalar(c.value, {1.0, 0.0}));
  }
  for (const auto& t : m.tails) {
    point.push_back(PointTail{t, {1.0, 0.0}, 1, {}});
    essential.push_back(Scalar(t.limit(), {1.0, 0.0}));
  }
  return assemble(std::move(point), std::move(essential));
}

SpectrumReport spectrum_of_diagonal(const NormalDiagonalModel& m) {
  validate_model(m);
  std::vector<PointFamily> point;
  std::vector<Scalar> essential;
  for (const auto& c : m.cells) {
    point.push_back(PointValue{c.value, c.mult});
    if (c.mult.is_infinite()) essential.push_back(c.value);
  }
  for (const auto& t : m.tails) {
    point.push_back(PointTail{t.seq, t.phase, 1, {}});
    essential.push_back(Scalar(t.seq.limit(), t.phase));
  }
  return assemble(std::move(point), std::move(essential));
}

SpectrumReport spectrum_of_direct_sum(const SpectrumReport& a, const SpectrumReport& b) {
  std::vector<PointFamily> point = a.point;
  point.insert(point.end(), b.point.begin(), b.point.end());
  std::vector<Scalar> essential = a.essential;
  essential.insert(essential.end(), b.essential.begin(), b.essential.end());
  return assemble(std::move(point), std::move(essential));
}

bool spectra_disjoint(const SpectrumReport& a, const SpectrumReport& b) {
  for (const auto& e : a.essential)
    if (scalar_in(b.essential, e)) return false;
  for (const auto& e : a.essential) {
    const EigenCount c = eigen_multiplicity(b.point, e);
    if (c.infinite || c.count > 0) return false;
  }
  for (const auto& e : b.essential) {
    const EigenCount c = eigen_multiplicity(a.point, e);
    if (c.infinite || c.count > 0) return false;
  }
  for (const auto& fa : a.point)
    for (const auto& fb : b.point) {
      const bool a_value = std::holds_alternative<PointValue>(fa);
      const bool b_value = std::holds_alternative<PointValue>(fb);
      if (a_value && b_value) {
        if (std::get<PointValue>(fa).value == std::get<PointValue>(fb).value) return false;
      } else if (a_value) {
        if (family_index_of(std::get<PointTail>(fb), std::get<PointValue>(fa).value)) return false;
      } else if (b_value) {
        if (family_index_of(std::get<PointTail>(fa), std::get<PointValue>(fb).value)) return false;
      } else {
        if (shared_tail_value(std::get<PointTail>(fa), std::get<PointTail>(fb))) return false;
      }
    }
  return true;
}

SpectrumReport map_spectrum_inverse(const SpectrumReport& r) {
  if (min_modulus_from_spectrum(r) == 0)
    throw std::domain_error("inverse spectral map undefined: 0 belongs to the spectrum");
  return map_parts(r);
}

SpectrumReport map_spectrum_pseudoinverse(const SpectrumReport& r) {
  for (const auto& f : r.point)
    if (std::holds_alternative<PointTail>(f) && std::get<PointTail>(f).seq.limit() == 0)
      throw std::domain_error(
          "pseudoinverse spectral map undefined: 0 is an accumulation point of the spectrum "
          "(range not closed)");
  if (scalar_in(r.continuous, Scalar()))
    throw std::domain_error(
        "pseudoinverse spectral map undefined: 0 lies in the continuous spectrum");
  return map_parts(r);
}

Rational min_modulus_from_spectrum(const SpectrumReport& r) {
  bool first = true;
  Rational best(0);
  const auto feed = [&](const Rational& v) {
    if (first || v < best) best = v;
    first = false;
  };
  for (const auto& f : r.point) {
    if (std::holds_alternative<PointValue>(f))
      feed(std::get<PointValue>(f).value.modulus);
    else
      feed(std::get<PointTail>(f).seq.inf_value());
  }
  for (const auto& s : r.essential) feed(s.modulus);
  for (const auto& s : r.continuous) feed(s.modulus);
  if (first) throw std::domain_error("min_modulus_from_spectrum: empty spectrum");
  return best;
}

Rational essential_min_modulus(const SpectrumReport& r) {
  if (r.essential.empty())
    throw std::domain_error("essential_min_modulus: the essential spectrum is empty");
  Rational best = r.essential.front().modulus;
  for (const auto& s : r.essential)
    if (s.modulus < best) best = s.modulus;
  return best;
}

Rational essential_min_modulus(const PositiveDiagonalModel& m) {
  return essential_min_modulus(spectrum_of_diagonal(m));
}

Rational essential_min_modulus(const NormalDiagonalModel& m) {
  return essential_min_modulus(spectrum_of_diagonal(m));
}

SpectrumReport canonicalized(const SpectrumReport& r) {
  SpectrumReport out;
  out.point = canonical_families(r.point);
  out.discrete = canonical_families(r.discrete);
  out.essential = sorted_unique(r.essential);
  out.continuous = sorted_unique(r.continuous);
  return out;
}

bool spectrum_equal(const SpectrumReport& a, const SpectrumReport& b) {
  return canonicalized(a) == canonicalized(b);
}

void check_report_invariants(const SpectrumReport& r) {
  const auto fail = [](const std::string& what) { throw std::logic_error("spectrum invariant: " + what); };

  for (const auto& c : r.continuous) {
    if (!scalar_in(r.essential, c)) fail("continuous value outside the essential spectrum");
    const EigenCount ec = eigen_multiplicity(r.point, c);
    if (ec.infinite || ec.count > 0) fail("continuous value is an eigenvalue");
  }

  for (const auto& e : r.essential) {
    const EigenCount ec = eigen_multiplicity(r.point, e);
    bool is_limit = false;
    for (const auto& f : r.point)
      if (std::holds_alternative<PointTail>(f) && family_limit(std::get<PointTail>(f)) == e)
        is_limit = true;
    if (!ec.infinite && !is_limit)
      fail("essential value is neither an infinite-multiplicity eigenvalue nor a family limit");
  }

  for (const auto& f : r.point) {
    if (std::holds_alternative<PointValue>(f)) {
      const auto& pv = std::get<PointValue>(f);
      if (pv.mult.is_infinite() && !scalar_in(r.essential, pv.value))
        fail("infinite-multiplicity eigenvalue outside the essential spectrum");
    } else {
      if (!scalar_in(r.essential, family_limit(std::get<PointTail>(f))))
        fail("point family limit outside the essential spectrum");
    }
  }

  for (const auto& f : r.discrete) {
    if (std::holds_alternative<PointValue>(f)) {
      const auto& pv = std::get<PointValue>(f);
      if (scalar_in(r.essential, pv.value)) fail("discrete value inside the essential spectrum");
      if (pv.mult.is_infinite()) fail("discrete value with infinite multiplicity");
      const EigenCount ec = eigen_multiplicity(r.point, pv.value);
      if (ec.infinite || ec.count != pv.mult.count())
        fail("discrete multiplicity does not match the point spectrum");
    } else {
      const auto& pt = std::get<PointTail>(f);
      for (const auto& e : r.essential)
        if (family_index_of(pt, e)) fail("discrete family still contains an essential value");
      for (std::int64_t n : pt.excluded) {
        const Scalar v(pt.seq.value(n), pt.phase);
        bool folded = scalar_in(r.essential, v);
        for (const auto& g : r.discrete)
          if (std::holds_alternative<PointValue>(g) && std::get<PointValue>(g).value == v)
            folded = true;
        if (!folded) fail("excluded family term neither essential nor folded into a discrete value");
      }
    }
  }

  // Every isolated finite-multiplicity eigenvalue must be accounted for.
  for (const auto& f : r.point) {
    if (!std::holds_alternative<PointValue>(f)) continue;
    const auto& pv = std::get<PointValue>(f);
    if (scalar_in(r.essential, pv.value)) continue;
    bool found = false;
    for (const auto& g : r.discrete)
      if (std::holds_alternative<PointValue>(g) && std::get<PointValue>(g).value == pv.value)
        found = true;
    if (!found) fail("isolated eigenvalue missing from the discrete spectrum");
  }
}

}  // namespace amspec

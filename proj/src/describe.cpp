// describe.cpp — JSON description schema: parse and deterministic emit.

#include "amspec/describe.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

namespace amspec {

namespace {

[[noreturn]] void schema_fail(const std::string& ctx, const std::string& what) {
  throw SchemaError(ctx + ": " + what);
}

const Json& require_field(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object()) schema_fail(ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(ctx, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const Json& j, const std::string& ctx) {
  if (!j.is_string()) schema_fail(ctx, "expected a string");
  return j.get<std::string>();
}

long long require_integer(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) schema_fail(ctx, "expected an integer");
  return j.get<long long>();
}

const Json& require_array(const Json& j, const std::string& ctx) {
  if (!j.is_array()) schema_fail(ctx, "expected an array");
  return j;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& ctx) {
  if (!j.is_object()) schema_fail(ctx, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) schema_fail(ctx, "unknown field \"" + it.key() + "\"");
  }
}





TailDirection direction_from_json(const Json& j, const std::string& ctx) {
  const std::string s = require_string(j, ctx);
  if (s == "from_below") return TailDirection::FromBelow;
  if (s == "from_above") return TailDirection::FromAbove;
  schema_fail(ctx, "direction must be \"from_below\" or \"from_above\"");
}

std::string direction_to_string(TailDirection d) {
  return d == TailDirection::FromBelow ? "from_below" : "from_above";
}



CellKind cell_kind_from_json(const Json& j, const std::string& ctx) {
  const std::string s = require_string(j, ctx);
  if (s == "atom") return CellKind::Atom;
  if (s == "diffuse") return CellKind::Diffuse;
  schema_fail(ctx, "kind must be \"atom\" or \"diffuse\"");
}

template <typename ModelT, typename Fn>
ModelT guarded_make(const std::string& ctx, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ModelInvariantError(ctx + ": " + e.what());
  }
}

DescriptionKind kind_from_json(const Json& j, const std::string& ctx) {
  const std::string s = require_string(j, ctx);
  if (s == "positive_diagonal") return DescriptionKind::PositiveDiagonal;
  if (s == "normal_diagonal") return DescriptionKind::NormalDiagonal;
  if (s == "shifted_diagonal") return DescriptionKind::ShiftedDiagonal;
  if (s == "direct_sum") return DescriptionKind::DirectSum;
  if (s == "multiplication") return DescriptionKind::Multiplication;
  if (s == "finite_matrix") return DescriptionKind::FiniteMatrixBlock;
  schema_fail(ctx, "unknown kind \"" + s + "\"");
}

OperatorDescription parse_description_impl(const Json& doc, const std::string& ctx,
                                           bool top_level);

OperatorDescription parse_summand(const Json& j, const std::string& ctx) {
  OperatorDescription d = parse_description_impl(j, ctx, false);
  if (d.kind == DescriptionKind::DirectSum)
    schema_fail(ctx, "nested direct sums are not supported");
  return d;
}

OperatorDescription parse_description_impl(const Json& doc, const std::string& ctx,
                                           bool top_level) {
  if (top_level) {
    reject_unknown_keys(doc, {"schema_version", "kind", "name", "notes", "model"}, ctx);
    const std::string version =
        require_string(require_field(doc, "schema_version", ctx), ctx + ".schema_version");
    if (version != "1") schema_fail(ctx, "unsupported schema_version \"" + version + "\"");
  } else {
    reject_unknown_keys(doc, {"kind", "name", "notes", "model"}, ctx);
  }
  OperatorDescription d;
  d.kind = kind_from_json(require_field(doc, "kind", ctx), ctx + ".kind");
  if (auto it = doc.find("name"); it != doc.end()) d.name = require_string(*it, ctx + ".name");
  if (auto it = doc.find("notes"); it != doc.end())
    d.notes = require_string(*it, ctx + ".notes");
  const Json& model = require_field(doc, "model", ctx);
  const std::string mctx = ctx + ".model";
  switch (d.kind) {
    case DescriptionKind::PositiveDiagonal:
      d.positive = positive_model_from_json(model);
      break;
    case DescriptionKind::NormalDiagonal:
      d.normal = normal_model_from_json(model);
      break;
    case DescriptionKind::ShiftedDiagonal:
      d.shifted = shifted_model_from_json(model);
      break;
    case DescriptionKind::Multiplication:
      d.measure = measure_model_from_json(model);
      break;
    case DescriptionKind::FiniteMatrixBlock:
      d.matrix = matrix_from_json(model);
      break;
    case DescriptionKind::DirectSum: {
      reject_unknown_keys(model, {"summands"}, mctx);
      const Json& arr = require_array(require_field(model, "summands", mctx), mctx + ".summands");
      if (arr.empty()) schema_fail(mctx, "a direct sum needs at least one summand");
      for (std::size_t i = 0; i < arr.size(); ++i)
        d.summands.push_back(
            parse_summand(arr[i], mctx + ".summands[" + std::to_string(i) + "]"));
      break;
    }
  }
  return d;
}

}  // namespace

std::string to_string(DescriptionKind k) {
  switch (k) {
    case DescriptionKind::PositiveDiagonal: return "positive_diagonal";
    case DescriptionKind::NormalDiagonal: return "normal_diagonal";
    case DescriptionKind::ShiftedDiagonal: return "shifted_diagonal";
    case DescriptionKind::DirectSum: return "direct_sum";
    case DescriptionKind::Multiplication: return "multiplication";
    case DescriptionKind::FiniteMatrixBlock: return "finite_matrix";
  }
  throw std::logic_error("to_string: unknown DescriptionKind");
}

Json rational_to_json(const Rational& q) { return Json(format_rational(q)); }

Json multiplicity_to_json(const Multiplicity& m) {
  if (m.is_infinite()) return Json("infinite");
  return Json(static_cast<long long>(m.count()));
}

Multiplicity multiplicity_from_json(const Json& j, const std::string& ctx) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinite") return Multiplicity::infinite();
    schema_fail(ctx, "multiplicity string must be \"infinite\"");
  }
  const long long n = require_integer(j, ctx + ".multiplicity");
  if (n < 1) schema_fail(ctx, "multiplicity must be at least 1");
  return Multiplicity::finite(static_cast<std::size_t>(n));
}

Json phase_to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

std::complex<double> phase_from_json(const Json& j, const std::string& ctx) {
  const Json& arr = require_array(j, ctx);
  if (arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number())
    schema_fail(ctx, "phase must be [re, im]");
  std::complex<double> z(arr[0].get<double>(), arr[1].get<double>());
  if (!approximately_unit(z)) schema_fail(ctx, "phase must lie on the unit circle");
  return z;
}

Json tail_to_json(const TailSequence& t) {
  Json j = Json::object();
  j["limit"] = rational_to_json(t.rule().limit);
  j["direction"] = direction_to_string(t.rule().direction);
  j["coefficient"] = rational_to_json(t.rule().coefficient);
  j["exponent"] = static_cast<long long>(t.rule().exponent);
  j["start_index"] = static_cast<long long>(t.rule().start_index);
  if (!t.is_plain()) {
    j["power"] = static_cast<long long>(t.power());
    j["offset"] = rational_to_json(t.offset());
    j["sign"] = static_cast<long long>(t.sign());
  }
  return j;
}

TailSequence tail_from_json(const Json& j, const std::string& ctx) {
  reject_unknown_keys(j,
                      {"limit", "direction", "coefficient", "exponent", "start_index",
                       "power", "offset", "sign", "phase"},
                      ctx);
  TailRule rule;
  rule.limit = rational_from_json(require_field(j, "limit", ctx), ctx + ".limit");
  rule.direction = direction_from_json(require_field(j, "direction", ctx), ctx + ".direction");
  rule.coefficient =
      rational_from_json(require_field(j, "coefficient", ctx), ctx + ".coefficient");
  const long long exponent =
      require_integer(require_field(j, "exponent", ctx), ctx + ".exponent");
  if (exponent < 1 || exponent > 64) schema_fail(ctx, "exponent must lie in [1, 64]");
  rule.exponent = static_cast<unsigned>(exponent);
  if (auto it = j.find("start_index"); it != j.end()) {
    const long long start = require_integer(*it, ctx + ".start_index");
    if (start < 1) schema_fail(ctx, "start_index must be at least 1");
    rule.start_index = start;
  }
  int power = 1;
  if (auto it = j.find("power"); it != j.end()) {
    const long long p = require_integer(*it, ctx + ".power");
    if (p == 0 || p < -16 || p > 16)
      schema_fail(ctx, "power must be a nonzero integer in [-16, 16]");
    power = static_cast<int>(p);
  }
  Rational offset = 0;
  if (auto it = j.find("offset"); it != j.end())
    offset = rational_from_json(*it, ctx + ".offset");
  int sign = 1;
  if (auto it = j.find("sign"); it != j.end()) {
    const long long s = require_integer(*it, ctx + ".sign");
    if (s != 1 && s != -1) schema_fail(ctx, "sign must be 1 or -1");
    sign = static_cast<int>(s);
  }
  try {
    return TailSequence(rule, power, offset, sign);
  } catch (const std::invalid_argument& e) {
    throw ModelInvariantError(ctx + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& ctx) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_fail(ctx, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) schema_fail(ctx, "value must be finite");
    return rational_from_double(x);
  }
  schema_fail(ctx, "expected a rational as \"p/q\" string or number");
}

Json scalar_to_json(const Scalar& s) {
  Json j = Json::object();
  j["modulus"] = rational_to_json(s.modulus);
  j["phase"] = phase_to_json(s.phase);
  return j;
}

Scalar scalar_from_json(const Json& j, const std::string& ctx) {
  reject_unknown_keys(j, {"modulus", "phase"}, ctx);
  const Rational modulus =
      rational_from_json(require_field(j, "modulus", ctx), ctx + ".modulus");
  std::complex<double> phase(1.0, 0.0);
  if (auto it = j.find("phase"); it != j.end()) phase = phase_from_json(*it, ctx + ".phase");
  try {
    return Scalar(modulus, phase);
  } catch (const std::invalid_argument& e) {
    throw ModelInvariantError(ctx + ": " + e.what());
  }
}

Json emit_model(const PositiveDiagonalModel& m) {
  Json cells = Json::array();
  for (const auto& c : m.cells) {
    Json jc = Json::object();
    jc["value"] = rational_to_json(c.value);
    jc["multiplicity"] = multiplicity_to_json(c.mult);
    cells.push_back(std::move(jc));
  }
  Json tails = Json::array();
  for (const auto& t : m.tails) tails.push_back(tail_to_json(t));
  Json j = Json::object();
  j["cells"] = std::move(cells);
  j["tails"] = std::move(tails);
  return j;
}

PositiveDiagonalModel positive_model_from_json(const Json& j) {
  const std::string ctx = "positive_diagonal";
  reject_unknown_keys(j, {"cells", "tails"}, ctx);
  std::vector<PositiveCell> cells;
  if (auto it = j.find("cells"); it != j.end()) {
    const Json& arr = require_array(*it, ctx + ".cells");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string cctx = ctx + ".cells[" + std::to_string(i) + "]";
      reject_unknown_keys(arr[i], {"value", "multiplicity"}, cctx);
      const Rational value =
          rational_from_json(require_field(arr[i], "value", cctx), cctx + ".value");
      const Multiplicity mult =
          multiplicity_from_json(require_field(arr[i], "multiplicity", cctx), cctx);
      cells.push_back(PositiveCell{value, mult});
    }
  }
  std::vector<TailSequence> tails;
  if (auto it = j.find("tails"); it != j.end()) {
    const Json& arr = require_array(*it, ctx + ".tails");
    for (std::size_t i = 0; i < arr.size(); ++i)
      tails.push_back(tail_from_json(arr[i], ctx + ".tails[" + std::to_string(i) + "]"));
  }
  return guarded_make<PositiveDiagonalModel>(
      ctx, [&] { return make_positive_model(std::move(cells), std::move(tails)); });
}

Json emit_model(const NormalDiagonalModel& m) {
  Json cells = Json::array();
  for (const auto& c : m.cells) {
    Json jc = Json::object();
    jc["modulus"] = rational_to_json(c.value.modulus);
    jc["phase"] = phase_to_json(c.value.phase);
    jc["multiplicity"] = multiplicity_to_json(c.mult);
    cells.push_back(std::move(jc));
  }
  Json tails = Json::array();
  for (const auto& t : m.tails) {
    Json jt = tail_to_json(t.seq);
    jt["phase"] = phase_to_json(t.phase);
    tails.push_back(std::move(jt));
  }
  Json j = Json::object();
  j["cells"] = std::move(cells);
  j["tails"] = std::move(tails);
  return j;
}

NormalDiagonalModel normal_model_from_json(const Json& j) {
  const std::string ctx = "normal_diagonal";
  reject_unknown_keys(j, {"cells", "tails"}, ctx);
  std::vector<NormalCell> cells;
  if (auto it = j.find("cells"); it != j.end()) {
    const Json& arr = require_array(*it, ctx + ".cells");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string cctx = ctx + ".cells[" + std::to_string(i) + "]";
      reject_unknown_keys(arr[i], {"modulus", "phase", "multiplicity"}, cctx);
      const Rational modulus =
          rational_from_json(require_field(arr[i], "modulus", cctx), cctx + ".modulus");
      std::complex<double> phase(1.0, 0.0);
      if (auto pit = arr[i].find("phase"); pit != arr[i].end())
        phase = phase_from_json(*pit, cctx + ".phase");
      const Multiplicity mult =
          multiplicity_from_json(require_field(arr[i], "multiplicity", cctx), cctx);
      Scalar value = [&] {
        try {
          return Scalar(modulus, phase);
        } catch (const std::invalid_argument& e) {
          throw ModelInvariantError(cctx + ": " + std::string(e.what()));
        }
      }();
      cells.push_back(NormalCell{value, mult});
    }
  }
  std::vector<NormalTail> tails;
  if (auto it = j.find("tails"); it != j.end()) {
    const Json& arr = require_array(*it, ctx + ".tails");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string tctx = ctx + ".tails[" + std::to_string(i) + "]";
      TailSequence seq = tail_from_json(arr[i], tctx);
      std::complex<double> phase(1.0, 0.0);
      if (auto pit = arr[i].find("phase"); pit != arr[i].end())
        phase = phase_from_json(*pit, tctx + ".phase");
      tails.push_back(NormalTail{std::move(seq), phase});
    }
  }
  return guarded_make<NormalDiagonalModel>(
      ctx, [&] { return make_normal_model(std::move(cells), std::move(tails)); });
}

Json emit_model(const ShiftedDiagonalModel& m) {
  Json j = Json::object();
  j["shift_order"] = static_cast<long long>(m.shift_order);
  j["diagonal"] = emit_model(m.diag);
  return j;
}

ShiftedDiagonalModel shifted_model_from_json(const Json& j) {
  const std::string ctx = "shifted_diagonal";
  reject_unknown_keys(j, {"shift_order", "diagonal"}, ctx);
  const long long order =
      require_integer(require_field(j, "shift_order", ctx), ctx + ".shift_order");
  if (order < 1 || order > 64) schema_fail(ctx, "shift_order must lie in [1, 64]");
  PositiveDiagonalModel diag = positive_model_from_json(require_field(j, "diagonal", ctx));
  return guarded_make<ShiftedDiagonalModel>(ctx, [&] {
    return make_shifted_model(static_cast<std::int64_t>(order), std::move(diag));
  });
}

Json emit_model(const MeasureSpaceModel& m) {
  Json cells = Json::array();
  for (const auto& c : m.cells) {
    Json jc = Json::object();
    jc["label"] = c.label;
    jc["kind"] = c.kind == CellKind::Atom ? "atom" : "diffuse";
    jc["weight"] = rational_to_json(c.weight);
    jc["symbol"] = scalar_to_json(c.symbol);
    cells.push_back(std::move(jc));
  }
  Json tails = Json::array();
  for (const auto& t : m.tails) {
    Json jt = tail_to_json(t.seq);
    jt["phase"] = phase_to_json(t.phase);
    tails.push_back(std::move(jt));
  }
  Json j = Json::object();
  j["cells"] = std::move(cells);
  j["tails"] = std::move(tails);
  return j;
}

MeasureSpaceModel measure_model_from_json(const Json& j) {
  const std::string ctx = "multiplication";
  reject_unknown_keys(j, {"cells", "tails"}, ctx);
  std::vector<MeasureCell> cells;
  if (auto it = j.find("cells"); it != j.end()) {
    const Json& arr = require_array(*it, ctx + ".cells");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string cctx = ctx + ".cells[" + std::to_string(i) + "]";
      reject_unknown_keys(arr[i], {"label", "kind", "weight", "symbol"}, cctx);
      MeasureCell cell;
      cell.label = require_string(require_field(arr[i], "label", cctx), cctx + ".label");
      cell.kind = cell_kind_from_json(require_field(arr[i], "kind", cctx), cctx + ".kind");
      cell.weight = rational_from_json(require_field(arr[i], "weight", cctx), cctx + ".weight");
      cell.symbol = scalar_from_json(require_field(arr[i], "symbol", cctx), cctx + ".symbol");
      cells.push_back(std::move(cell));
    }
  }
  std::vector<MeasureTail> tails;
  if (auto it = j.find("tails"); it != j.end()) {
    const Json& arr = require_array(*it, ctx + ".tails");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string tctx = ctx + ".tails[" + std::to_string(i) + "]";
      TailSequence seq = tail_from_json(arr[i], tctx);
      std::complex<double> phase(1.0, 0.0);
      if (auto pit = arr[i].find("phase"); pit != arr[i].end())
        phase = phase_from_json(*pit, tctx + ".phase");
      tails.push_back(MeasureTail{std::move(seq), phase});
    }
  }
  return guarded_make<MeasureSpaceModel>(
      ctx, [&] { return make_measure_model(std::move(cells), std::move(tails)); });
}

Json emit_matrix(const FiniteMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      row.push_back(Json::array({a(r, c).real(), a(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  Json j = Json::object();
  j["rows"] = static_cast<long long>(a.rows());
  j["cols"] = static_cast<long long>(a.cols());
  j["entries"] = std::move(rows);
  return j;
}

FiniteMatrix matrix_from_json(const Json& j) {
  const std::string ctx = "finite_matrix";
  reject_unknown_keys(j, {"rows", "cols", "entries"}, ctx);
  const long long rows = require_integer(require_field(j, "rows", ctx), ctx + ".rows");
  const long long cols = require_integer(require_field(j, "cols", ctx), ctx + ".cols");
  if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096)
    schema_fail(ctx, "rows and cols must lie in [1, 4096]");
  const Json& entries = require_array(require_field(j, "entries", ctx), ctx + ".entries");
  if (static_cast<long long>(entries.size()) != rows)
    schema_fail(ctx, "entries must hold one row per matrix row");
  FiniteMatrix a(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    const std::string rctx = ctx + ".entries[" + std::to_string(r) + "]";
    const Json& row = require_array(entries[static_cast<std::size_t>(r)], rctx);
    if (static_cast<long long>(row.size()) != cols)
      schema_fail(rctx, "row length must equal cols");
    for (long long c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      const std::string ectx = rctx + "[" + std::to_string(c) + "]";
      if (e.is_number()) {
        a(r, c) = std::complex<double>(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        a(r, c) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
      } else {
        schema_fail(ectx, "entry must be a number or [re, im]");
      }
      if (!std::isfinite(a(r, c).real()) || !std::isfinite(a(r, c).imag()))
        schema_fail(ectx, "entry must be finite");
    }
  }
  return a;
}

OperatorDescription parse_description(const Json& doc) {
  return parse_description_impl(doc, "description", true);
}

OperatorDescription parse_description_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("description: invalid JSON: ") + e.what());
  }
  return parse_description(doc);
}

OperatorDescription parse_description_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("description: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_description_text(buf.str());
}

Json emit_description(const OperatorDescription& d) {
  Json doc = Json::object();
  doc["schema_version"] = "1";
  doc["kind"] = to_string(d.kind);
  if (!d.name.empty()) doc["name"] = d.name;
  if (!d.notes.empty()) doc["notes"] = d.notes;
  switch (d.kind) {
    case DescriptionKind::PositiveDiagonal:
      if (!d.positive) throw std::logic_error("emit_description: missing positive payload");
      doc["model"] = emit_model(*d.positive);
      break;
    case DescriptionKind::NormalDiagonal:
      if (!d.normal) throw std::logic_error("emit_description: missing normal payload");
      doc["model"] = emit_model(*d.normal);
      break;
    case DescriptionKind::ShiftedDiagonal:
      if (!d.shifted) throw std::logic_error("emit_description: missing shifted payload");
      doc["model"] = emit_model(*d.shifted);
      break;
    case DescriptionKind::Multiplication:
      if (!d.measure) throw std::logic_error("emit_description: missing measure payload");
      doc["model"] = emit_model(*d.measure);
      break;
    case DescriptionKind::FiniteMatrixBlock:
      if (!d.matrix) throw std::logic_error("emit_description: missing matrix payload");
      doc["model"] = emit_matrix(*d.matrix);
      break;
    case DescriptionKind::DirectSum: {
      Json summands = Json::array();
      for (const auto& s : d.summands) {
        Json inner = emit_description(s);
        inner.erase("schema_version");
        summands.push_back(std::move(inner));
      }
      Json model = Json::object();
      model["summands"] = std::move(summands);
      doc["model"] = std::move(model);
      break;
    }
  }
  return doc;
}

OperatorDescription random_description(Rng& rng) {
  OperatorDescription d;
  switch (rng() % 6) {
    case 0:
      d.kind = DescriptionKind::PositiveDiagonal;
      d.positive = random_positive_model(rng);
      d.name = "random positive";
      break;
    case 1:
      d.kind = DescriptionKind::NormalDiagonal;
      d.normal = random_normal_model(rng);
      d.name = "random normal";
      break;
    case 2:
      d.kind = DescriptionKind::ShiftedDiagonal;
      d.shifted = random_shifted_model(rng);
      d.name = "random shifted";
      break;
    case 3:
      d.kind = DescriptionKind::Multiplication;
      d.measure = random_measure_model(rng);
      d.name = "random multiplication";
      break;
    case 4: {
      d.kind = DescriptionKind::DirectSum;
      const std::size_t n = 2 + rng() % 2;
      for (std::size_t i = 0; i < n; ++i) {
        OperatorDescription s;
        if (rng() % 2 == 0) {
          s.kind = DescriptionKind::PositiveDiagonal;
          s.positive = random_positive_model(rng);
        } else {
          s.kind = DescriptionKind::NormalDiagonal;
          s.normal = random_normal_model(rng);
        }
        d.summands.push_back(std::move(s));
      }
      d.name = "random direct sum";
      break;
    }
    default:
      d.kind = DescriptionKind::FiniteMatrixBlock;
      d.matrix = random_hermitian_psd(rng, 2 + rng() % 5);
      d.name = "random finite block";
      break;
  }
  return d;
}

}  // namespace amspec

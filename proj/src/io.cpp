#include "ascdesc/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ascdesc::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<Scalar> scalar_array(const Json& j) {
  if (!j.is_array()) bad("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

Json scalar_list(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

Json pairs(const std::vector<std::pair<std::size_t, std::size_t>>& xs) {
  Json out = Json::array();
  for (const auto& [n, v] : xs) out.push_back(Json::array({n, v}));
  return out;
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

Json float_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  const double r = std::strtod(fmt12(x).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

double float_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    if (s == "nan") return std::nan("");
  }
  bad("expected a number");
}

Json to_json(const Scalar& z) { return z.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("scalar must be a string or an integer, got " + j.dump());
}

std::vector<Scalar> parse_scalar_list(const std::string& comma_separated) {
  std::vector<Scalar> out;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) bad("empty entry in scalar list '" + comma_separated + "'");
    out.push_back(Scalar::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) bad("empty scalar list");
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", "gq"}, {"entries", rows}};
}

namespace {

/// Checks the shape fields and returns the entries as rows x cols.
const Json& checked_entries(const Json& j, std::size_t& rows, std::size_t& cols) {
  rows = count_field(j, "rows");
  cols = count_field(j, "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) bad("matrix 'entries' must have 'rows' rows");
  for (const auto& row : e)
    if (!row.is_array() || row.size() != cols) bad("every matrix row must have 'cols' entries");
  return e;
}

std::string field_of(const Json& j) {
  if (!j.is_object() || !j.contains("field")) return "gq";
  if (!j.at("field").is_string()) bad("'field' must be a string");
  return j.at("field").get<std::string>();
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
  const std::string f = field_of(j);
  if (f == "f64") bad("exact matrix expected; 'f64' input is accepted only by numeric commands");
  if (f != "gq") bad("unknown matrix field '" + f + "'");
  std::size_t rows = 0, cols = 0;
  const Json& e = checked_entries(j, rows, cols);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(e[r][c]);
  return m;
}

num::CMatrix float_matrix_from_json(const Json& j) {
  const std::string f = field_of(j);
  if (f == "gq") return num::to_float(matrix_from_json(j));
  if (f != "f64") bad("unknown matrix field '" + f + "'");
  std::size_t rows = 0, cols = 0;
  const Json& e = checked_entries(j, rows, cols);
  num::CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& x = e[r][c];
      std::complex<double> z;
      if (x.is_number()) {
        z = x.get<double>();
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        z = {x[0].get<double>(), x[1].get<double>()};
      } else {
        bad("f64 entries must be numbers or [re, im] pairs");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
    }
  return m;
}

num::FloatSubspace subspace_from_json(const Json& j, const num::Tolerance& tol) {
  const Json& m = j.is_object() && j.contains("basis") ? j.at("basis") : j;
  if (field_of(m) == "gq") return num::to_float(Subspace::span_of_rows(matrix_from_json(m)));
  const num::CMatrix rows = float_matrix_from_json(m);
  return num::column_span(rows.transpose(), tol);
}

Json to_json(const Vector& v) { return scalar_list(v); }

Json to_json(const Subspace& y) {
  return Json{{"ambient_dim", y.ambient_dim()}, {"dim", y.dim()}, {"basis", to_json(y.basis())}};
}

Json to_json(const ChainReport& r) {
  return Json{{"kernel_dims", r.kernel_dims}, {"range_dims", r.range_dims}, {"asc", r.asc},
              {"dsc", r.dsc},                 {"alpha", r.alpha},           {"beta", r.beta}};
}

Json to_json(const PointProfile& p) {
  return Json{{"asc", p.asc}, {"dsc", p.dsc}, {"alpha", p.alpha}, {"beta", p.beta}};
}

Json to_json(const SpectrumProfile& p) {
  Json points = Json::array();
  for (const auto& pt : p.points) {
    Json entry{{"lambda", to_json(pt.lambda)}};
    entry.update(to_json(pt.profile));
    points.push_back(std::move(entry));
  }
  return Json{{"complete", p.complete},
              {"residual_degree", p.residual_degree},
              {"points", points},
              {"sigma_asc", scalar_list(p.sigma_asc)},
              {"sigma_dsc", scalar_list(p.sigma_dsc)},
              {"max_index", p.max_index},
              {"certificate", p.certificate}};
}

namespace {

Json to_json(const tower::EventuallyPeriodic& s) { return Json{{"pre", scalar_list(s.pre)}, {"period", scalar_list(s.period)}}; }

tower::EventuallyPeriodic periodic_from_json(const Json& j) {
  tower::EventuallyPeriodic s;
  if (j.contains("pre")) s.pre = scalar_array(j.at("pre"));
  if (j.contains("period")) s.period = scalar_array(j.at("period"));
  return s;
}

std::vector<tower::OperatorSpec> parts_from_json(const Json& j) {
  const Json& parts = field(j, "parts");
  if (!parts.is_array() || parts.empty()) bad("'parts' must be a nonempty array");
  std::vector<tower::OperatorSpec> out;
  for (const auto& p : parts) out.push_back(spec_from_json(p));
  return out;
}

}  // namespace

Json to_json(const tower::OperatorSpec& spec) {
  return std::visit(
      [](const auto& v) -> Json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, tower::Dense>) {
          return Json{{"variant", "dense"}, {"matrix", to_json(v.matrix)}};
        } else if constexpr (std::is_same_v<V, tower::Banded>) {
          Json diags = Json::object();
          for (const auto& [offset, seq] : v.diagonals) diags[std::to_string(offset)] = to_json(seq);
          return Json{{"variant", "banded"}, {"diagonals", diags}};
        } else if constexpr (std::is_same_v<V, tower::FiniteRank>) {
          Json terms = Json::array();
          for (const auto& t : v.terms) terms.push_back(Json{{"u", to_json(t.u)}, {"v", to_json(t.v)}});
          return Json{{"variant", "finite_rank"}, {"terms", terms}};
        } else {
          Json parts = Json::array();
          for (const auto& p : v.parts) parts.push_back(io::to_json(p));
          return Json{{"variant", std::is_same_v<V, tower::Sum> ? "sum" : "direct_sum"}, {"parts", parts}};
        }
      },
      spec.variant());
}

tower::OperatorSpec spec_from_json(const Json& j) {
  const Json& variant = field(j, "variant");
  if (!variant.is_string()) bad("'variant' must be a string");
  const auto name = variant.get<std::string>();
  try {
    if (name == "dense") return tower::OperatorSpec::dense(matrix_from_json(field(j, "matrix")));
    if (name == "banded") {
      tower::Banded b;
      const Json& diags = field(j, "diagonals");
      if (!diags.is_object()) bad("'diagonals' must be an object keyed by offset");
      for (const auto& [key, seq] : diags.items()) {
        char* end = nullptr;
        const long offset = std::strtol(key.c_str(), &end, 10);
        if (key.empty() || *end != '\0') bad("diagonal offset '" + key + "' is not an integer");
        b.diagonals[offset] = periodic_from_json(seq);
      }
      return tower::OperatorSpec(std::move(b));
    }
    if (name == "finite_rank") {
      tower::FiniteRank f;
      for (const auto& t : field(j, "terms")) f.terms.push_back({scalar_array(field(t, "u")), scalar_array(field(t, "v"))});
      return tower::OperatorSpec(std::move(f));
    }
    if (name == "sum") return tower::OperatorSpec(tower::Sum{parts_from_json(j)});
    if (name == "direct_sum") return tower::OperatorSpec(tower::DirectSum{parts_from_json(j)});
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid operator spec: ") + e.what());
  }
  bad("unknown operator variant '" + name + "'");
}

Json to_json(const tower::WindowConfig& w) {
  return Json{{"n0", w.n0}, {"step", w.step}, {"count", w.count}, {"power_bound", w.power_bound}};
}

Json to_json(const tower::TowerVerdict& v) {
  Json out{{"quantity", tower::to_string(v.quantity)},
           {"lambda", to_json(v.lambda)},
           {"per_truncation", pairs(v.per_truncation)},
           {"classification", tower::to_string(v.classification)}};
  if (v.is_finite()) out["value"] = v.value;
  return out;
}

Json to_json(const tower::TowerSpectrum& s) {
  Json points = Json::array();
  for (const auto& p : s.points) points.push_back(to_json(p));
  return Json{{"quantity", tower::to_string(s.quantity)},
              {"window", to_json(s.window)},
              {"points", points},
              {std::string("sigma_") + tower::to_string(s.quantity), scalar_list(s.members)}};
}

Json to_json(const tower::PowerFiniteRank& p) {
  Json ranks = Json::array();
  for (const auto& r : p.ranks) ranks.push_back(pairs(r));
  Json out{{"certainty", tower::to_string(p.certainty)}};
  out["n0"] = p.n0 ? Json(*p.n0) : Json(nullptr);
  out["ranks"] = ranks;
  return out;
}

Json to_json(const num::Tolerance& tol) {
  return Json{{"rank_rel", float_json(tol.rank_rel)}, {"conv_tol", float_json(tol.conv_tol)}, {"tail_window", tol.tail_window}};
}

Json to_json(const conv::GapTrajectory& t) {
  Json samples = Json::array();
  for (const auto& s : t.samples)
    samples.push_back(Json{{"n", s.n},
                           {"dku", float_json(s.dku)},
                           {"dkl", float_json(s.dkl)},
                           {"dru", float_json(s.dru)},
                           {"drl", float_json(s.drl)},
                           {"gamma", float_json(s.gamma)},
                           {"rank", s.rank},
                           {"rank_jump", s.rank_jump}});
  return Json{{"limit_rank", t.limit_rank}, {"samples", samples}};
}

Json to_json(const conv::ProbeVerdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) checks.push_back(harness::to_json(c));
  return Json{{"probe", conv::to_string(v.probe)}, {"mode", v.mode},           {"verdict", harness::to_string(v.outcome)},
              {"reason", v.reason},                {"hypotheses", v.hypotheses}, {"witness", v.witness},
              {"checks", checks}};
}

std::string trajectory_csv(const conv::GapTrajectory& t, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "n,dku,dkl,dru,drl,gamma\n";
  auto cell = [](double x) { return std::isinf(x) ? std::string("inf") : fmt12(x); };
  for (const auto& s : t.samples)
    out += std::to_string(s.n) + "," + cell(s.dku) + "," + cell(s.dkl) + "," + cell(s.dru) + "," + cell(s.drl) + "," +
           cell(s.gamma) + "\n";
  return out;
}

namespace {

void read_range(const Json& j, std::size_t& start, std::size_t& end, std::size_t& stride) {
  if (!j.contains("n_range")) return;
  const Json& r = j.at("n_range");
  if (!r.is_array() || r.size() < 2 || r.size() > 3) bad("'n_range' must be [start, end] or [start, end, stride]");
  for (const auto& x : r)
    if (!x.is_number_integer() || x.get<long long>() < 0) bad("'n_range' entries must be nonnegative integers");
  start = r[0].get<std::size_t>();
  end = r[1].get<std::size_t>();
  stride = r.size() == 3 ? r[2].get<std::size_t>() : 1;
}

}  // namespace

conv::SequenceSpec sequence_from_json(const Json& j) {
  conv::SequenceSpec spec;
  spec.base = matrix_from_json(field(j, "base"));
  const Json& p = field(j, "perturbation");
  const Json& kind = field(p, "kind");
  if (kind == "scaled") {
    spec.perturbation.kind = conv::Perturbation::Kind::scaled;
    spec.perturbation.e = matrix_from_json(field(p, "E"));
  } else if (kind == "random") {
    spec.perturbation.kind = conv::Perturbation::Kind::random;
    spec.perturbation.seed = count_field(p, "seed");
  } else {
    bad("perturbation kind must be 'scaled' or 'random'");
  }
  if (p.contains("exponent")) spec.perturbation.exponent = float_from_json(p.at("exponent"));
  read_range(j, spec.n_start, spec.n_end, spec.stride);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid sequence: ") + e.what());
  }
  return spec;
}

conv::TowerSequenceSpec tower_sequence_from_json(const Json& j) {
  conv::TowerSequenceSpec spec;
  spec.base = spec_from_json(field(j, "base"));
  spec.perturbation = spec_from_json(field(j, "perturbation"));
  if (j.contains("exponent")) spec.exponent = static_cast<unsigned>(count_field(j, "exponent"));
  read_range(j, spec.n_start, spec.n_end, spec.stride);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid tower sequence: ") + e.what());
  }
  return spec;
}

bool is_operator_spec(const Json& j) { return j.is_object() && j.contains("variant"); }

bool is_tower_sequence(const Json& j) { return j.is_object() && j.contains("base") && is_operator_spec(j.at("base")); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ascdesc::io

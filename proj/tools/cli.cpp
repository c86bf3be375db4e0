#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ascdesc/chain.hpp"
#include "ascdesc/convergence.hpp"
#include "ascdesc/harness.hpp"
#include "ascdesc/io.hpp"
#include "ascdesc/numeric.hpp"
#include "ascdesc/spectra.hpp"
#include "ascdesc/tower.hpp"

namespace ascdesc::cli {

namespace {

using Json = io::Json;

struct Common {
  double tol_rank = num::Tolerance{}.rank_rel;
  double tol_conv = num::Tolerance{}.conv_tol;
  std::size_t tail_window = num::Tolerance{}.tail_window;
  std::string window;
  std::string out;

  num::Tolerance tolerance() const {
    num::Tolerance t{tol_rank, tol_conv, tail_window};
    t.validate();
    return t;
  }

  tower::WindowConfig window_config() const {
    tower::WindowConfig w;
    if (!window.empty()) {
      std::vector<std::size_t> xs;
      std::stringstream ss(window);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(item, &pos);
        } catch (const std::exception&) {
          pos = std::string::npos;
        }
        if (pos != item.size()) throw ParseError("--window expects N0,step,count with positive integers");
        xs.push_back(v);
      }
      if (xs.size() != 3) throw ParseError("--window expects exactly three values N0,step,count");
      w.n0 = xs[0];
      w.step = xs[1];
      w.count = xs[2];
    }
    w.validate();
    return w;
  }
};

void add_common(CLI::App* app, Common& c, bool tolerances, bool window) {
  if (tolerances) {
    app->add_option("--tol-rank", c.tol_rank, "relative singular-value threshold for numeric rank");
    app->add_option("--tol-conv", c.tol_conv, "convergence threshold for gap tails");
    app->add_option("--tail-window", c.tail_window, "number of trailing samples forming the tail");
  }
  if (window) app->add_option("--window", c.window, "truncation window N0,step,count");
  app->add_option("--out", c.out, "write the report to PATH instead of stdout");
}

std::string command_echo(const std::vector<std::string>& args) {
  std::string s = kToolName;
  for (const auto& a : args) {
    const bool quote = a.empty() || a.find_first_of(" \t\"'") != std::string::npos;
    s += " ";
    s += quote ? "\"" + a + "\"" : a;
  }
  return s;
}

Json envelope(const std::vector<std::string>& args, const char* verb, Json seeds) {
  return Json{{"tool", kToolName}, {"version", kVersion}, {"command", command_echo(args)}, {"verb", verb}, {"seeds", seeds}};
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + c.out + "'");
  f << text;
}

int exit_for(const std::vector<harness::Outcome>& outcomes) {
  if (std::any_of(outcomes.begin(), outcomes.end(), [](auto o) { return o == harness::Outcome::fail; }))
    return has_fail;
  if (!outcomes.empty() &&
      std::all_of(outcomes.begin(), outcomes.end(), [](auto o) { return o == harness::Outcome::inconclusive; }))
    return all_inconclusive;
  return ok;
}

Json analyze(const Json& input, const Scalar& lambda, const Common& c) {
  if (io::is_operator_spec(input)) {
    const auto spec = io::spec_from_json(input);
    const auto w = c.window_config();
    Json verdicts = Json::object();
    for (auto q : {tower::Quantity::asc, tower::Quantity::dsc, tower::Quantity::alpha, tower::Quantity::beta})
      verdicts[tower::to_string(q)] = io::to_json(tower::tower_verdict(spec, lambda, q, w));
    return Json{{"kind", "tower"},
                {"lambda", io::to_json(lambda)},
                {"window", io::to_json(w)},
                {"verdicts", verdicts},
                {"power_finite_rank", io::to_json(tower::is_power_finite_rank(spec, w))}};
  }
  const Matrix t = io::matrix_from_json(input);
  if (!t.is_square()) throw DimensionError("analyze needs a square matrix");
  Json out{{"kind", "dense"}, {"lambda", io::to_json(lambda)}};
  out["chain_report"] = io::to_json(chain_report(scalar_shift(t, lambda)));
  return out;
}

Json spectrum(const Json& input, bool force_tower, const std::string& candidates, const std::string& quantity,
              const Common& c) {
  if (force_tower || io::is_operator_spec(input)) {
    const auto spec = io::is_operator_spec(input) ? io::spec_from_json(input)
                                                  : tower::OperatorSpec::dense(io::matrix_from_json(input));
    const auto points = io::parse_scalar_list(candidates.empty() ? "0" : candidates);
    const auto w = c.window_config();
    std::vector<tower::Quantity> qs;
    if (quantity.empty()) qs = {tower::Quantity::asc, tower::Quantity::dsc};
    else qs = {tower::parse_quantity(quantity)};
    Json out{{"kind", "tower"}};
    for (auto q : qs) out[tower::to_string(q)] = io::to_json(tower::tower_spectrum(spec, points, q, w));
    return out;
  }
  const Matrix t = io::matrix_from_json(input);
  if (!t.is_square()) throw DimensionError("spectrum needs a square matrix");
  Json out{{"kind", "dense"}};
  out["profile"] = io::to_json(ascent_spectrum(t));
  if (!candidates.empty()) {
    Json pts = Json::array();
    for (const auto& l : io::parse_scalar_list(candidates)) {
      Json entry{{"lambda", io::to_json(l)}};
      entry.update(io::to_json(point_profile(t, l)));
      pts.push_back(std::move(entry));
    }
    out["candidates"] = pts;
  }
  return out;
}

}  // namespace

std::size_t worker_count() {
  std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ASCDESC_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<std::size_t>(n, cap);
  }
  return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ascent/descent invariants, spectra and theorem checks for linear operators", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  std::string input, input2, lambda_text = "0", lambda_c = "0", candidates, quantity, theorem, probe_name, format = "json";
  unsigned lambda_b = 1;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  bool tower_flag = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "chain report of a matrix, or tower verdicts of an operator spec");
  analyze_cmd->add_option("input", input, "matrix or operator spec JSON")->required();
  analyze_cmd->add_option("--lambda", lambda_text, "analyze T - lambda");
  add_common(analyze_cmd, common, false, true);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "ascent/descent spectrum profile");
  spectrum_cmd->add_option("input", input, "matrix or operator spec JSON")->required();
  spectrum_cmd->add_option("--candidates", candidates, "comma-separated candidate points, e.g. \"0,1,1/2+1/2i\"");
  spectrum_cmd->add_flag("--tower", tower_flag, "treat the input as a truncation tower");
  spectrum_cmd->add_option("--quantity", quantity, "asc or dsc (tower mode; default both)");
  add_common(spectrum_cmd, common, false, true);

  auto* verify_cmd = app.add_subcommand("verify", "run a seeded theorem-verification batch");
  verify_cmd->add_option("--theorem", theorem, "theorem id, or 'all'")->required();
  verify_cmd->add_option("--seed", seed, "first seed");
  verify_cmd->add_option("--trials", trials, "number of consecutive seeds")->check(CLI::PositiveNumber);
  add_common(verify_cmd, common, false, false);

  auto* converge_cmd = app.add_subcommand("converge", "gap trajectory and convergence probe for an operator sequence");
  converge_cmd->add_option("input", input, "sequence JSON")->required();
  converge_cmd->add_option("--probe", probe_name, "lem1, lem2, lem3, lem4, T1 or lemma5")->required();
  converge_cmd->add_option("--lambda", lambda_text, "limit point lambda");
  converge_cmd->add_option("--lambda-c", lambda_c, "lambda_n = lambda + c n^(-b)");
  converge_cmd->add_option("--lambda-b", lambda_b, "exponent b of the lambda sequence")->check(CLI::PositiveNumber);
  converge_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(converge_cmd, common, true, true);

  auto* gap_cmd = app.add_subcommand("gap", "one-sided gaps and the symmetric gap between two subspaces");
  gap_cmd->add_option("y", input, "subspace JSON")->required();
  gap_cmd->add_option("z", input2, "subspace JSON")->required();
  add_common(gap_cmd, common, true, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << kToolName << ": " << e.what() << "\n";
    return parse_error;
  }

  try {
    if (*analyze_cmd) {
      Json report = envelope(args, "analyze", Json::array());
      report["result"] = analyze(io::read_json_file(input), Scalar::parse(lambda_text), common);
      emit(io::dump(report), common, out);
      return ok;
    }
    if (*spectrum_cmd) {
      Json report = envelope(args, "spectrum", Json::array());
      report["result"] = spectrum(io::read_json_file(input), tower_flag, candidates, quantity, common);
      emit(io::dump(report), common, out);
      return ok;
    }
    if (*verify_cmd) {
      std::vector<harness::TheoremId> ids;
      if (theorem == "all") ids = harness::all_theorems();
      else ids = {harness::parse_theorem(theorem)};
      Json seeds = Json::array();
      for (std::size_t k = 0; k < trials; ++k) seeds.push_back(seed + k);
      Json report = envelope(args, "verify", seeds);
      Json batches = Json::array();
      std::vector<harness::Outcome> outcomes;
      for (auto id : ids) {
        const auto verdicts = harness::verify_batch(id, seed, trials, worker_count());
        const auto s = harness::summarize(verdicts);
        Json list = Json::array();
        for (const auto& v : verdicts) {
          list.push_back(harness::to_json(v));
          outcomes.push_back(v.outcome);
        }
        batches.push_back(Json{{"theorem", harness::to_string(id)},
                               {"summary", Json{{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}}},
                               {"verdicts", list}});
      }
      report["result"] = batches;
      emit(io::dump(report), common, out);
      return exit_for(outcomes);
    }
    if (*converge_cmd) {
      const auto tol = common.tolerance();
      const auto id = conv::parse_probe(probe_name);
      const conv::LambdaData lambda{Scalar::parse(lambda_text), Scalar::parse(lambda_c), lambda_b};
      const Json input_json = io::read_json_file(input);
      Json seeds = Json::array();
      conv::ProbeVerdict verdict;
      std::optional<conv::GapTrajectory> traj;
      if (io::is_tower_sequence(input_json)) {
        if (format == "csv") throw ParseError("CSV output needs a dense sequence");
        verdict = conv::probe(io::tower_sequence_from_json(input_json), id, lambda, tol, common.window_config());
      } else {
        const auto spec = io::sequence_from_json(input_json);
        if (spec.perturbation.kind == conv::Perturbation::Kind::random) seeds.push_back(spec.perturbation.seed);
        traj = conv::trajectory(spec, tol, lambda);
        verdict = conv::probe(spec, id, lambda, tol);
      }
      if (format == "csv") {
        emit(io::trajectory_csv(*traj, {command_echo(args), std::string("tool ") + kToolName + " " + kVersion,
                                        std::string("probe ") + conv::to_string(id) + ": " +
                                            harness::to_string(verdict.outcome) + " (" + verdict.reason + ")"}),
             common, out);
      } else {
        Json report = envelope(args, "converge", seeds);
        Json result{{"tolerance", io::to_json(tol)}};
        if (traj) result["trajectory"] = io::to_json(*traj);
        result["probe"] = io::to_json(verdict);
        report["result"] = std::move(result);
        emit(io::dump(report), common, out);
      }
      return exit_for({verdict.outcome});
    }
    if (*gap_cmd) {
      const auto tol = common.tolerance();
      const auto y = io::subspace_from_json(io::read_json_file(input), tol);
      const auto z = io::subspace_from_json(io::read_json_file(input2), tol);
      if (y.ambient_dim != z.ambient_dim) throw DimensionError("subspaces live in different ambient spaces");
      Json report = envelope(args, "gap", Json::array());
      report["result"] = Json{{"dim_y", y.dim()},
                              {"dim_z", z.dim()},
                              {"delta_yz", io::float_json(num::delta(y, z))},
                              {"delta_zy", io::float_json(num::delta(z, y))},
                              {"gap", io::float_json(num::gap(y, z))}};
      emit(io::dump(report), common, out);
      return ok;
    }
  } catch (const std::invalid_argument& e) {
    err << kToolName << ": " << e.what() << "\n";
    return parse_error;
  } catch (const ParseError& e) {
    err << kToolName << ": " << e.what() << "\n";
    return parse_error;
  }
  return parse_error;
}

}  // namespace ascdesc::cli

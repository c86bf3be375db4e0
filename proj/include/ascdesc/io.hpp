#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ascdesc/chain.hpp"
#include "ascdesc/convergence.hpp"
#include "ascdesc/harness.hpp"
#include "ascdesc/matrix.hpp"
#include "ascdesc/numeric.hpp"
#include "ascdesc/spectra.hpp"
#include "ascdesc/subspace.hpp"
#include "ascdesc/tower.hpp"

namespace ascdesc::io {

using Json = nlohmann::ordered_json;

/// Rounded to 12 significant digits; infinities become the string "inf".
Json float_json(double x);
/// Accepts a number or one of "inf", "-inf", "nan".
double float_from_json(const Json& j);

Json to_json(const Scalar& z);
/// Accepts scalar text or a JSON integer. Throws ParseError.
Scalar scalar_from_json(const Json& j);
std::vector<Scalar> parse_scalar_list(const std::string& comma_separated);

Json to_json(const Matrix& m);
/// Exact matrix; rejects "f64" input. Throws ParseError.
Matrix matrix_from_json(const Json& j);
/// Accepts both "gq" and "f64" matrices.
num::CMatrix float_matrix_from_json(const Json& j);

/// Span of the rows of a matrix document, or of {"basis": matrix}; "gq" input
/// is orthonormalized after exact row reduction.
num::FloatSubspace subspace_from_json(const Json& j, const num::Tolerance& tol = {});

Json to_json(const Vector& v);
Json to_json(const Subspace& y);
Json to_json(const ChainReport& r);
Json to_json(const PointProfile& p);
Json to_json(const SpectrumProfile& p);

Json to_json(const tower::OperatorSpec& spec);
tower::OperatorSpec spec_from_json(const Json& j);
Json to_json(const tower::WindowConfig& w);
Json to_json(const tower::TowerVerdict& v);
Json to_json(const tower::TowerSpectrum& s);
Json to_json(const tower::PowerFiniteRank& p);

Json to_json(const num::Tolerance& tol);
Json to_json(const conv::GapTrajectory& t);
Json to_json(const conv::ProbeVerdict& v);
/// Header `n,dku,dkl,dru,drl,gamma`, one row per sample; `comments` are emitted first as `# ...` lines.
std::string trajectory_csv(const conv::GapTrajectory& t, const std::vector<std::string>& comments = {});

/// Dense sequence: {"base": Matrix, "perturbation": {"kind":"scaled","E":Matrix,"exponent":a}
/// or {"kind":"random","seed":s,"exponent":a}, "n_range":[start,end,stride]}.
conv::SequenceSpec sequence_from_json(const Json& j);
/// Tower sequence: {"base": spec, "perturbation": spec, "exponent": a, "n_range": [...]}.
conv::TowerSequenceSpec tower_sequence_from_json(const Json& j);
bool is_tower_sequence(const Json& j);
bool is_operator_spec(const Json& j);

/// Throws ParseError if the file is missing or not valid JSON.
Json read_json_file(const std::string& path);
/// Stable text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace ascdesc::io

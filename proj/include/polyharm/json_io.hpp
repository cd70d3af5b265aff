#pragma once

#include <json.hpp>
#include <string>

#include "polyharm/dirichlet.hpp"
#include "polyharm/entire.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/spectral.hpp"

/// JSON forms of the library's values. Parsers throw JsonFormatError on any
/// schema violation; all rationals travel as "p/q" strings.
namespace polyharm::json_io {

using Json = nlohmann::json;

class JsonFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"dimension": d, "terms": [{"exponents": [...], "re": "p/q", "im": "p/q"}]}.
/// Parsing also accepts {"dimension": d, "text": "x1^2 - 1/2 x2"}.
Json to_json(const Polynomial& f);
Json to_json(const HomogeneousPolynomial& f);
Polynomial polynomial_from_json(const Json& j);

/// {"dimension", "truncation", "parts": [poly per degree], "generator"?}. When
/// "parts" is absent the series is rebuilt from "generator" at the truncation.
Json to_json(const entire::EntireSeries& s);
entire::EntireSeries series_from_json(const Json& j);
/// Accepts either a series or a plain polynomial (truncated at its degree,
/// or at `truncation` when that is larger).
entire::EntireSeries series_or_polynomial_from_json(const Json& j, int truncation = -1);

/// {"dimension", "k", "leading": poly, "lower": [{"degree", "part"}]}; parsing
/// also accepts {"polynomial": poly, "k"} and a domain object.
Json to_json(const FischerProblem& p);
FischerProblem problem_from_json(const Json& j);

/// {"kind", "a"} for parabola and strip, {"kind", "axes"} for ellipsoid,
/// {"kind", "axes", "dimension"} for cylinder.
Json to_json(const dirichlet::DomainSpec& s);
dirichlet::DomainSpec domain_from_json(const Json& j);

/// {"quotient", "remainder", "certificate": {"residual", "laplacian_remainder"}, "exact"}
Json to_json(const DecompositionResult& r);
DecompositionResult decomposition_from_json(const Json& j);

Json to_json(const entire::EntireDecomposition& r);
Json to_json(const entire::OrderTypeEstimate& e);
Json to_json(const dirichlet::BoundaryResidualReport& r);
Json to_json(const dirichlet::DirichletSolution& s);
Json to_json(const spectral::SpectralReport& r);

/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);
/// Parses text; syntax errors become JsonFormatError.
Json parse(const std::string& text);

}  // namespace polyharm::json_io

#include "polyharm/json_io.hpp"

#include <cmath>

namespace polyharm::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw JsonFormatError("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw JsonFormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw JsonFormatError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Rational rational_value(const Json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw JsonFormatError(std::string(what) + " must be a rational string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string(what) + ": " + e.what());
    }
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <class T>
Json optional_number(const std::optional<T>& v) {
    return v ? number_or_null(static_cast<double>(*v)) : Json(nullptr);
}

Json terms_json(const HomogeneousPolynomial& f, Json& terms) {
    for (const auto& [alpha, c] : f.terms()) {
        terms.push_back({{"exponents", alpha.to_vector()}, {"re", format_rational(c.re)}, {"im", format_rational(c.im)}});
    }
    return terms;
}

}  // namespace

// --------------------------------------------------------------- polynomial

Json to_json(const Polynomial& f) {
    Json terms = Json::array();
    // Highest degree first, matching the grlex order within a degree.
    for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) terms_json(it->second, terms);
    return {{"dimension", f.dimension()}, {"terms", terms}};
}

Json to_json(const HomogeneousPolynomial& f) { return to_json(Polynomial(f)); }

Polynomial polynomial_from_json(const Json& j) {
    const int d = int_field(j, "dimension");
    if (d < 1 || d > kMaxDimension) throw JsonFormatError("dimension out of range");
    if (j.contains("text")) {
        if (!j.at("text").is_string()) throw JsonFormatError("\"text\" must be a string");
        try {
            return parse_polynomial(j.at("text").get<std::string>(), d);
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(std::string("polynomial text: ") + e.what());
        }
    }
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw JsonFormatError("\"terms\" must be an array");
    Polynomial f(d);
    for (const auto& t : terms) {
        const Json& e = field(t, "exponents");
        if (!e.is_array() || static_cast<int>(e.size()) != d) throw JsonFormatError("exponent array must have length d");
        std::vector<int> exps;
        for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<long>() < 0) throw JsonFormatError("exponents must be non-negative integers");
            exps.push_back(x.get<int>());
        }
        ComplexRational c(rational_value(field(t, "re"), "re"));
        if (t.contains("im")) c.im = rational_value(t.at("im"), "im");
        f.add_term(MultiIndex(std::span<const int>(exps)), c);
    }
    return f;
}

// ------------------------------------------------------------------- series

Json to_json(const entire::EntireSeries& s) {
    Json parts = Json::array();
    for (const auto& p : s.parts()) parts.push_back(to_json(p));
    Json j{{"dimension", s.dimension()}, {"truncation", s.truncation()}, {"parts", parts}};
    if (s.generator()) j["generator"] = {{"name", s.generator()->name}, {"params", s.generator()->params}};
    return j;
}

entire::EntireSeries series_from_json(const Json& j) {
    const int d = int_field(j, "dimension");
    const int N = int_field(j, "truncation");
    if (N < 0) throw JsonFormatError("negative truncation");
    auto read_generator = [&] {
        const Json& g = j.at("generator");
        entire::SeriesGenerator gen;
        gen.name = field(g, "name").get<std::string>();
        if (g.contains("params")) gen.params = g.at("params").get<std::map<std::string, std::string>>();
        return gen;
    };
    if (!j.contains("parts") && j.contains("generator")) {
        entire::EntireSeries seed(d, 0);
        seed.set_generator(read_generator());
        try {
            return entire::extend(seed, N);
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(std::string("generator: ") + e.what());
        }
    }
    const Json& parts = field(j, "parts");
    if (!parts.is_array() || static_cast<int>(parts.size()) != N + 1) {
        throw JsonFormatError("\"parts\" must hold truncation + 1 polynomials");
    }
    entire::EntireSeries s(d, N);
    for (int m = 0; m <= N; ++m) {
        auto p = polynomial_from_json(parts[static_cast<std::size_t>(m)]);
        if (p.dimension() != d) throw JsonFormatError("part dimension differs from the series dimension");
        if (p.degree() > m || (p.degree() >= 0 && p.parts().size() != 1) || (p.degree() >= 0 && p.degree() != m)) {
            throw JsonFormatError("part " + std::to_string(m) + " is not homogeneous of degree " + std::to_string(m));
        }
        s.set_part(m, p.part(m));
    }
    if (j.contains("generator")) s.set_generator(read_generator());
    return s;
}

entire::EntireSeries series_or_polynomial_from_json(const Json& j, int truncation) {
    if (j.is_object() && (j.contains("parts") || j.contains("generator"))) return series_from_json(j);
    auto f = polynomial_from_json(j);
    return entire::EntireSeries::from_polynomial(f, std::max({f.degree(), truncation, 0}));
}

// ------------------------------------------------------------------ problem

Json to_json(const FischerProblem& p) {
    Json lower = Json::array();
    for (const auto& [deg, part] : p.lower) {
        if (!part.is_zero()) lower.push_back({{"degree", deg}, {"part", to_json(part)}});
    }
    return {{"dimension", p.dimension}, {"k", p.k}, {"leading", to_json(p.leading)}, {"lower", lower}};
}

FischerProblem problem_from_json(const Json& j) {
    try {
        if (j.is_object() && j.contains("kind")) return dirichlet::to_fischer_problem(domain_from_json(j)).problem;
        if (j.is_object() && j.contains("polynomial")) {
            const int k = j.contains("k") ? int_field(j, "k") : 1;
            return problem_from_polynomial(polynomial_from_json(j.at("polynomial")), k);
        }
        FischerProblem p;
        p.dimension = int_field(j, "dimension");
        p.k = int_field(j, "k");
        p.leading = polynomial_from_json(field(j, "leading")).part(2 * p.k);
        if (j.contains("lower")) {
            for (const auto& entry : j.at("lower")) {
                const int deg = int_field(entry, "degree");
                p.lower[deg] = polynomial_from_json(field(entry, "part")).part(deg);
            }
        }
        p.validate();
        return p;
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string("invalid problem: ") + e.what());
    }
}

// ------------------------------------------------------------------- domain

Json to_json(const dirichlet::DomainSpec& s) {
    Json j{{"kind", dirichlet::kind_name(s.kind)}};
    switch (s.kind) {
        case dirichlet::DomainKind::Parabola:
        case dirichlet::DomainKind::Strip: j["a"] = format_rational(s.a); break;
        case dirichlet::DomainKind::Cylinder: j["dimension"] = s.dimension; [[fallthrough]];
        case dirichlet::DomainKind::Ellipsoid: {
            Json axes = Json::array();
            for (const auto& a : s.axes) axes.push_back(format_rational(a));
            j["axes"] = axes;
            break;
        }
    }
    return j;
}

dirichlet::DomainSpec domain_from_json(const Json& j) {
    try {
        const auto kind = dirichlet::parse_kind(field(j, "kind").get<std::string>());
        auto axes = [&] {
            std::vector<Rational> out;
            const Json& a = field(j, "axes");
            if (!a.is_array()) throw JsonFormatError("\"axes\" must be an array");
            for (const auto& v : a) out.push_back(rational_value(v, "axis"));
            return out;
        };
        switch (kind) {
            case dirichlet::DomainKind::Parabola: return dirichlet::DomainSpec::parabola(rational_value(field(j, "a"), "a"));
            case dirichlet::DomainKind::Strip: return dirichlet::DomainSpec::strip(rational_value(field(j, "a"), "a"));
            case dirichlet::DomainKind::Ellipsoid: return dirichlet::DomainSpec::ellipsoid(axes());
            case dirichlet::DomainKind::Cylinder: return dirichlet::DomainSpec::cylinder(axes(), int_field(j, "dimension"));
        }
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string("invalid domain: ") + e.what());
    }
    throw JsonFormatError("unreachable domain kind");
}

// ------------------------------------------------------------------ results

Json to_json(const DecompositionResult& r) {
    return {{"quotient", to_json(r.quotient)},
            {"remainder", to_json(r.remainder)},
            {"certificate",
             {{"residual", to_json(r.certificate.residual)},
              {"laplacian_remainder", to_json(r.certificate.laplacian_remainder)}}},
            {"exact", r.exact()}};
}

DecompositionResult decomposition_from_json(const Json& j) {
    DecompositionResult r;
    r.quotient = polynomial_from_json(field(j, "quotient"));
    r.remainder = polynomial_from_json(field(j, "remainder"));
    const Json& c = field(j, "certificate");
    r.certificate.residual = polynomial_from_json(field(c, "residual"));
    r.certificate.laplacian_remainder = polynomial_from_json(field(c, "laplacian_remainder"));
    if (field(j, "exact").get<bool>() != r.exact()) throw JsonFormatError("\"exact\" disagrees with the certificate");
    return r;
}

Json to_json(const entire::EntireDecomposition& r) {
    Json tail = Json::array();
    for (const auto& row : r.tail) tail.push_back({{"M", row.degree}, {"norm_GM", row.norm}, {"bound_shape", row.bound_shape}});
    return {{"quotient", to_json(r.quotient)},
            {"remainder", to_json(r.remainder)},
            {"certificate",
             {{"residual", to_json(r.certificate.residual)},
              {"laplacian_remainder", to_json(r.certificate.laplacian_remainder)}}},
            {"exact", r.exact()},
            {"tail", tail},
            {"data_order", optional_number(r.data_order)},
            {"gate", number_or_null(r.gate)},
            {"warnings", r.warnings},
            {"small_type_value", optional_number(r.small_type_value)},
            {"small_type_holds", r.small_type_holds ? Json(*r.small_type_holds) : Json(nullptr)}};
}

Json to_json(const entire::OrderTypeEstimate& e) {
    Json raw = Json::object();
    for (const auto& [m, v] : e.raw_order_sequence) raw[std::to_string(m)] = v;
    return {{"order", number_or_null(e.order)},
            {"type", optional_number(e.type)},
            {"method", e.method},
            {"window", {e.window_start, e.window_end}},
            {"raw_order", e.raw_order},
            {"raw_order_sequence", raw},
            {"fit", e.fit},
            {"sup_norms", e.sup_norms}};
}

Json to_json(const dirichlet::BoundaryResidualReport& r) {
    return {{"parameterization", r.parameterization},
            {"max_residual", r.max_residual},
            {"max_magnitude", r.max_magnitude},
            {"samples", r.samples},
            {"truncation", r.truncation}};
}

Json to_json(const dirichlet::DirichletSolution& s) {
    Json j = to_json(s.decomposition);
    j["residual_report"] = to_json(s.residual);
    j["problem"] = to_json(s.instance.problem);
    j["constants"] = {{"C", s.instance.constants.C}, {"D", s.instance.constants.D}, {"alpha", s.instance.constants.alpha}};
    return j;
}

Json to_json(const spectral::SpectralReport& r) {
    return {{"m", r.degree},
            {"dimension", r.dimension},
            {"min_eigenvalue", r.min_eigenvalue},
            {"paper_bound", r.paper_bound},
            {"margin", r.margin},
            {"exact_closed_form", optional_number(r.exact_closed_form)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw JsonFormatError(std::string("JSON syntax error: ") + e.what());
    }
}

}  // namespace polyharm::json_io

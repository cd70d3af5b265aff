#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyharm/execution.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/sphere.hpp"

/// Truncated entire functions f = sum_m f_m, their growth order and type, and
/// their decomposition degree by degree.
namespace polyharm::entire {

/// Named closed form that produced a series; lets it be extended to a higher
/// truncation and is carried through JSON.
struct SeriesGenerator {
    std::string name;                           ///< "exp", "sin_exp", "bessel", "synthetic"
    std::map<std::string, std::string> params;  ///< rational or integer strings

    friend bool operator==(const SeriesGenerator&, const SeriesGenerator&) = default;
};

class EntireSeries {
public:
    EntireSeries() = default;
    /// All parts zero up to `truncation`.
    EntireSeries(int dimension, int truncation);

    static EntireSeries from_polynomial(const Polynomial& f, int truncation);

    [[nodiscard]] int dimension() const { return dim_; }
    [[nodiscard]] int truncation() const { return static_cast<int>(parts_.size()) - 1; }
    [[nodiscard]] const std::vector<HomogeneousPolynomial>& parts() const { return parts_; }
    [[nodiscard]] const HomogeneousPolynomial& part(int m) const { return parts_.at(static_cast<std::size_t>(m)); }
    void set_part(int m, HomogeneousPolynomial f_m);

    [[nodiscard]] const std::optional<SeriesGenerator>& generator() const { return generator_; }
    void set_generator(SeriesGenerator g) { generator_ = std::move(g); }

    /// f^{(N)} = f_0 + ... + f_N as one polynomial.
    [[nodiscard]] Polynomial truncated() const;
    /// Highest nonzero part; -1 for the zero series.
    [[nodiscard]] int highest_nonzero_degree() const;

    friend bool operator==(const EntireSeries& a, const EntireSeries& b) = default;

private:
    int dim_ = 0;
    std::vector<HomogeneousPolynomial> parts_;
    std::optional<SeriesGenerator> generator_;
};

/// e^{c x_i}: parts (c x_i)^m / m!.
EntireSeries exp_series(int dimension, int truncation, int variable = 0, const Rational& c = 1);
/// sin(c x1) e^{c x2} = Im e^{c (x2 + i x1)}; harmonic, so every part is harmonic.
EntireSeries sin_exp_series(int truncation, const Rational& c);
/// sum x_1^m / (m!)^2, order 1/2 and type 2.
EntireSeries bessel_series(int dimension, int truncation);
/// c_m x_1^m with c_m the double nearest to m^{-m/rho} (c_0 = 1): sup norm of
/// part m on the sphere is exactly c_m.
EntireSeries synthetic_order_series(int dimension, int truncation, double rho);

/// Rebuilds the series from its generator at a new truncation. Throws if the
/// series has no generator.
EntireSeries extend(const EntireSeries& f, int truncation);

struct OrderOptions {
    bool sampled = true;  ///< false: use the certified sup bound per degree
    sphere::SamplingOptions sampling{4096, 8192, 0x5eed5eedULL};
    Execution execution = Execution::Parallel;
    double type_stability = 0.1;  ///< relative agreement required between half-window fits
};

struct OrderTypeEstimate {
    double order = 0.0;
    std::optional<double> type;
    std::string method;  ///< "regression", "raw-limsup"
    int window_start = 0;
    int window_end = 0;
    std::vector<double> sup_norms;  ///< per degree 0..N; 0 for zero parts
    /// log m / log(||f_m||^{-1/m}) per tail degree with ||f_m|| < 1.
    std::map<int, double> raw_order_sequence;
    /// m ||f_m||^{order/m} / (e order) per tail degree.
    std::map<int, double> raw_type_sequence;
    double raw_order = 0.0;  ///< max of raw_order_sequence
    /// Coefficients of -log||f_m|| ~ a m log m + b m + c log m + e on the window.
    std::vector<double> fit;
};

/// Order and type from the decay of per-degree sup norms on the tail window
/// [N/2, N]. The fitted model -log||f_m|| = m log m / rho - m log(e rho tau)/rho
/// + lower terms gives rho and tau; the raw limsup sequences are kept as
/// diagnostics and used alone when fewer than 4 tail degrees are nonzero.
/// Throws AllZeroTail when every tail part vanishes; std::invalid_argument when N < 8.
OrderTypeEstimate order_estimate(const EntireSeries& f, const OrderOptions& options = {});

/// C, D, alpha in ||T f_m|| <= C (m + D)^alpha ||f_m|| for a problem instance.
struct GrowthConstants {
    double C = 1.0;
    double D = 0.0;
    double alpha = 0.0;
};

/// (2k - beta) / alpha; +infinity when alpha = 0.
double order_gate(const FischerProblem& problem, const GrowthConstants& constants);

struct TailRow {
    int degree = 0;           ///< M
    double norm = 0.0;        ///< ||G_M||_{L^2(S^{d-1})}
    double bound_shape = 0.0; ///< sqrt(2/omega) (M+1)^{(d-1)/2} (M+2k)^{-(M+2k)/rho}, rho = order of f
};

struct EntireDecomposition {
    EntireSeries quotient;   ///< G_0 .. G_{N-2k}
    EntireSeries remainder;  ///< h^{(N)}
    DecompositionCertificate certificate;
    std::vector<TailRow> tail;
    std::optional<double> data_order;
    double gate = 0.0;
    std::vector<std::string> warnings;
    /// Small-type criterion value and verdict, only when alpha > 0 and a type was estimated.
    std::optional<double> small_type_value;
    std::optional<bool> small_type_holds;

    [[nodiscard]] bool exact() const { return certificate.holds(); }
};

struct DecomposeOptions {
    GrowthConstants constants;
    Execution execution = Execution::Parallel;
    bool estimate_order = true;
    OrderOptions order;
};

/// q^{(N)} = sum_{m <= N} T_P(f_m) regraded into homogeneous parts G_M and
/// h^{(N)} = sum_m R_P(f_m). Per-degree decompositions run in parallel.
/// An order above the gate is recorded as a warning, not an error.
EntireDecomposition decompose_entire(const FischerProblem& problem, const EntireSeries& f,
                                     const DecomposeOptions& options = {});

struct OrderComparison {
    double order_f = 0.0;
    double order_q = 0.0;
    double order_h = 0.0;
    std::optional<double> type_f;
    std::optional<double> type_q;
    std::optional<double> type_h;
    bool q_within = true;
    bool h_within = true;
    std::optional<bool> q_type_within;  ///< set when the orders of q and f agree within tolerance
    std::optional<bool> h_type_within;
};

/// Diagnostic comparison of estimated orders (and types when orders match).
/// A series whose tail is zero counts as order 0.
OrderComparison order_of_decomposition(const EntireSeries& f, const EntireSeries& q, const EntireSeries& h,
                                       double tolerance = 0.1, const OrderOptions& options = {});

/// CSV with columns M,norm_GM,bound_shape.
std::string tail_to_csv(const std::vector<TailRow>& tail);

}  // namespace polyharm::entire

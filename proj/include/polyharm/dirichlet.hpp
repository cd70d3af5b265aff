#pragma once

#include <string>
#include <vector>

#include "polyharm/entire.hpp"
#include "polyharm/fischer.hpp"

/// Dirichlet problems on quadric domains: data f on the boundary {P = 0} is
/// matched by the harmonic remainder h of f = P q + h.
namespace polyharm::dirichlet {

enum class DomainKind { Ellipsoid, Parabola, Strip, Cylinder };

struct DomainSpec {
    DomainKind kind = DomainKind::Ellipsoid;
    int dimension = 2;
    std::vector<Rational> axes;  ///< ellipsoid: d semi-axes; cylinder: d - 1 semi-axes
    Rational a = 1;              ///< parabola and strip parameter

    static DomainSpec ellipsoid(std::vector<Rational> axes);
    static DomainSpec parabola(Rational a);
    static DomainSpec strip(Rational a);
    static DomainSpec cylinder(std::vector<Rational> axes, int dimension);

    /// Throws std::invalid_argument on non-positive parameters or a wrong dimension.
    void validate() const;
};

std::string kind_name(DomainKind kind);
DomainKind parse_kind(const std::string& name);

/// The defining polynomial with its growth constants and order gate.
struct DomainInstance {
    FischerProblem problem;
    entire::GrowthConstants constants;
    double gate = 0.0;
};

/// ellipsoid: P = sum x_i^2/a_i^2 - 1, alpha = 0, gate infinite;
/// parabola:  P = x2^2 - a x1, alpha = 2, gate 1/2;
/// strip:     P = x1^2 - a^2, alpha = 2, gate 1;
/// cylinder:  P = sum_{i<d} x_i^2/a_i^2 - 1, alpha = 2, gate 1.
DomainInstance to_fischer_problem(const DomainSpec& spec);

struct BoundaryWindow {
    std::size_t samples = 512;
    double t_min = -4.0;  ///< parabola parameter / strip and cylinder axial coordinate
    double t_max = 4.0;
};

struct BoundarySamples {
    std::string description;
    std::vector<double> parameters;  ///< one per point
    std::vector<double> points;      ///< row-major, count x d
};

BoundarySamples boundary_samples(const DomainSpec& spec, const BoundaryWindow& window = {});

struct BoundaryResidualReport {
    std::string parameterization;
    double max_residual = 0.0;
    double max_magnitude = 0.0;  ///< max |h| on the samples, the scale of the float noise
    std::size_t samples = 0;
    int truncation = 0;
};

/// max |f - h| over the boundary samples, compensated evaluation.
BoundaryResidualReport boundary_residual(const DomainSpec& spec, const Polynomial& f, const Polynomial& h, int truncation,
                                         const BoundaryWindow& window = {}, Execution execution = Execution::Parallel);

/// CSV with columns parameter,f,h,abs_diff (real parts).
std::string boundary_csv(const DomainSpec& spec, const Polynomial& f, const Polynomial& h,
                         const BoundaryWindow& window = {});

struct SolveOptions {
    BoundaryWindow window;
    Execution execution = Execution::Parallel;
    bool estimate_order = true;
};

struct DirichletSolution {
    DomainInstance instance;
    entire::EntireDecomposition decomposition;
    BoundaryResidualReport residual;
};

DirichletSolution solve(const DomainSpec& spec, const entire::EntireSeries& data, const SolveOptions& options = {});
DirichletSolution solve(const DomainSpec& spec, const Polynomial& data, const SolveOptions& options = {});

/// Two splittings of truncated sin(c x1) e^{c x2} for the strip |x1| < a, c close to pi/a.
/// `pipeline` is the solver's output, exact as polynomials. `formal` has h = 0
/// and q the power-series quotient f / P cut at degree N; its residual lives
/// only in degrees N+1 and N+2.
struct NonuniquenessWitness {
    int truncation = 0;
    Rational c;
    DecompositionResult pipeline;
    DecompositionResult formal;
    bool data_harmonic = false;            ///< Delta f_m = 0 for every part
    bool pipeline_exact = false;           ///< full certificate
    bool formal_exact_through_truncation = false;
    bool differ = false;                   ///< quotients or remainders differ
};

/// `c` defaults to a 20-digit rational approximation of pi / a.
NonuniquenessWitness nonuniqueness_witness(const DomainSpec& strip, int truncation);
NonuniquenessWitness nonuniqueness_witness(const DomainSpec& strip, int truncation, const Rational& c);

/// Rational approximation of pi good to about 1e-20.
Rational pi_approximation();

}  // namespace polyharm::dirichlet

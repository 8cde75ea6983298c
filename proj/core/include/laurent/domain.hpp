#pragma once

#include "laurent/fourier.hpp"
#include "laurent/split.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace laurent {

// Jordan domain given by an explicit polynomial Riemann map
//   phi(w) = c_1 w + c_2 w^2 + ... + c_d w^d,   phi(0) = 0,
// translated by center_offset.  The univalence margin
//   sum_{k>=2} k |c_k| < |c_1|
// guarantees phi injective on the closed disc with phi' != 0 there, and makes
// the boundary argument about the center strictly monotone.
class JordanDomain {
public:
    const std::vector<cplx>& map_coefficients() const { return coeffs_; } // c_1..c_d
    cplx center_offset() const { return offset_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }

    cplx map(cplx w) const;            // phi(w), no offset
    cplx map_derivative(cplx w) const; // phi'(w)

    cplx boundary(double theta) const;            // gamma(theta) = phi(e^{i theta}) + offset
    cplx boundary_derivative(double theta) const; // gamma'(theta) = i e^{i theta} phi'(e^{i theta})

    friend JordanDomain make_polynomial_domain(std::vector<cplx> coeffs, cplx center_offset);

private:
    JordanDomain(std::vector<cplx> coeffs, cplx offset)
        : coeffs_(std::move(coeffs)), offset_(offset) {}

    std::vector<cplx> coeffs_;
    cplx offset_;
};

JordanDomain make_polynomial_domain(std::vector<cplx> coeffs, cplx center_offset = cplx{});

// Orientation-tagged lift table of a circle homeomorphism: psi(theta_j) on the
// standard grid, strictly monotone, with total increase +2*pi (preserving) or
// -2*pi (reversing) across one period.
class CircleHomeomorphism {
public:
    enum class Orientation { preserving, reversing };

    CircleHomeomorphism(std::vector<double> angle_table, Orientation orientation);

    int size() const { return static_cast<int>(psi_.size()); }
    double psi(int j) const { return psi_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& angle_table() const { return psi_; }
    Orientation orientation() const { return orientation_; }

    static CircleHomeomorphism identity(int n);
    static CircleHomeomorphism reflection(int n);

private:
    std::vector<double> psi_;
    Orientation orientation_;
};

struct QuasiSymmetryReport {
    std::vector<std::pair<double, double>> sampled_ratios; // (t, worst ratio), ascending t
    std::vector<std::pair<double, double>> eta_envelope;   // monotone upper envelope
};

// Samples of f(gamma(theta_j)) on the grid; f is a function of the boundary
// point.
BoundarySamples pullback(const JordanDomain& domain, const std::function<cplx(cplx)>& f,
                         const CircleGrid& grid);

// Max grid discrepancy between d/d(theta) of the pullback (spectral route) and
// (f' o gamma) * gamma' (analytic route).  Requires the pullback spectrum tail
// (last octave) below 1e-8.
double derivative_identity_defect(const JordanDomain& domain,
                                  const std::function<cplx(cplx)>& f,
                                  const std::function<cplx(cplx)>& f_prime,
                                  const CircleGrid& grid);

// Q(f) = P(f o gamma) o gamma^{-1} in pullback coordinates: the analytic part
// is the synthesized nonnegative-index spectrum, the kernel part the pointwise
// complement.
struct QProjectionParts {
    BoundarySamples analytic_part;
    BoundarySamples kernel_part;
};
QProjectionParts q_projection(const JordanDomain& domain, const BoundarySamples& f);

// Conjugate split transported to the domain: pullbacks of g and h with
// h(center) = 0; g + conj(h) reproduces f on the grid.
struct DomainConjugateParts {
    BoundarySamples g_pullback;
    BoundarySamples h_pullback;
};
DomainConjugateParts conjugate_split_domain(const JordanDomain& domain, const BoundarySamples& f);

// Classical boundary criterion min_theta Re(w phi'(w) / phi(w)) > 0 evaluated
// on the grid (w = e^{i theta}); the minimum is reported as the margin.
struct StarlikeResult {
    bool starlike = false;
    double margin = 0.0;
};
StarlikeResult starlike_check(const JordanDomain& domain, int grid_size = 1024);

// The same criterion on a raw coefficient sequence c_1..c_d (no univalence
// screening), for experiments with maps outside the admissible family.
double starlike_margin(const std::vector<cplx>& coeffs, int grid_size);

// gamma^{-1} o delta on the grid: the boundary argument table of gamma is
// inverted piecewise-linearly and composed with delta's lift.  Table sizes up
// to 2^14.
CircleHomeomorphism welding_compose(const JordanDomain& domain, const CircleHomeomorphism& delta);

// Samples triples of grid nodes (stride-based deterministic enumeration),
// bins distance ratios t = |x-y|/|x-z| exactly, records the worst image ratio
// per bin and its monotone envelope.  triple_budget <= 10^6.
QuasiSymmetryReport quasisymmetry_estimate(const CircleHomeomorphism& h, long long triple_budget);

} // namespace laurent

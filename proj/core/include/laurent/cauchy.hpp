#pragma once

#include "laurent/fourier.hpp"
#include "laurent/split.hpp"

#include <optional>
#include <vector>

namespace laurent {

// Closed parametrized curve sampled on the standard grid: positions
// zeta(theta_j) and derivatives zeta'(theta_j) (with respect to theta).
// The sampled polyline must be simple (checked pairwise for N <= 4096) and
// the derivative nonzero at every node.
class ParamCurve {
public:
    enum class Orientation { positive, negative };

    ParamCurve(CircleGrid grid, std::vector<cplx> positions, std::vector<cplx> derivatives,
               Orientation orientation);

    static ParamCurve unit_circle(const CircleGrid& grid);
    static ParamCurve circle(cplx center, double radius, Orientation orientation,
                             const CircleGrid& grid);

    const CircleGrid& grid() const { return grid_; }
    int size() const { return grid_.size(); }
    const std::vector<cplx>& positions() const { return positions_; }
    const std::vector<cplx>& derivatives() const { return derivatives_; }
    Orientation orientation() const { return orientation_; }

private:
    CircleGrid grid_;
    std::vector<cplx> positions_;
    std::vector<cplx> derivatives_;
    Orientation orientation_;
};

// The pinched annulus between the unit circle and an internally tangent inner
// circle of radius r centered at 1-r, tangency point 1.  The inner curve is
// negatively oriented as part of the boundary.
class TangentDomain {
public:
    TangentDomain(double r, const CircleGrid& outer_grid, const CircleGrid& inner_grid);

    const ParamCurve& outer() const { return outer_; }
    const ParamCurve& inner() const { return inner_; }
    double inner_radius() const { return r_; }
    cplx inner_center() const { return center_; }
    cplx tangency_point() const { return cplx{1.0, 0.0}; }

private:
    double r_;
    cplx center_;
    ParamCurve outer_;
    ParamCurve inner_;
};

struct ProbeReport {
    std::vector<double> approach_radii;   // decreasing distances to the target
    std::vector<cplx> values;             // Cauchy-transform values
    std::optional<cplx> limit_estimate;   // present iff divergence_flag is false
    bool divergence_flag = false;
    double oscillation_measure = 0.0;     // max pairwise distance, last 5 values
    bool incomplete = false;              // grid cap reached before smallest radius
};

// Trapezoidal Cauchy transform (1/(2 pi i)) sum_j F_j zeta'_j/(zeta_j - z) (2 pi/N),
// sign-adjusted for orientation.  z must keep distance >= 10/N from every node.
cplx cauchy(const ParamCurve& curve, const BoundarySamples& f, cplx z);

// Compares the Cauchy transform on the unit circle against the Laurent split
// at |z| in {0.3, 0.7} (inside) and {1.4, 3.0} (outside) on 8 rays; returns
// the largest discrepancy.
double split_consistency(const BoundarySamples& f);

// f = g + h on the tangent domain: g analytic on the disc, h analytic outside
// the closed inner disc and vanishing at infinity.  h's coefficients are the
// Laurent coefficients about the inner center: h(z) = sum_k h_{-k} (z - c)^{-k}.
struct TangentDecomposition {
    DiscFunction g;
    ExteriorFunction h;
    cplx inner_center;
    double inner_radius = 0.0;
    double defect = 0.0; // max reconstruction defect over both boundary grids
};
TangentDecomposition tangent_split(const TangentDomain& domain, const BoundarySamples& outer,
                                   const BoundarySamples& inner);

// Evaluation of the decomposition's exterior part at z, |z - c| >= r(1 - 1e-12).
cplx eval_tangent_exterior(const TangentDecomposition& parts, cplx z);

// Evaluates the Cauchy transform along target - radius*direction, refining the
// grid (spectral resampling, doubling N) whenever a probe point violates the
// proximity guard, up to max_grid.  Radii must be positive and decreasing.
ProbeReport radial_probe(const ParamCurve& curve, const BoundarySamples& f, cplx target,
                         cplx direction, const std::vector<double>& radii,
                         int max_grid = 1 << 16);

} // namespace laurent

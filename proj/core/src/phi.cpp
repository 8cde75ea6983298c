#include "laurent/phi.hpp"

#include "laurent/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace laurent {

namespace {

// Shared scalar maps, so that the circle, disc and exterior variants agree
// bitwise on common indices.
cplx scale_by_in(int n, cplx c) { return in_power(n, 1) * c; }
cplx divide_by_in(int n, cplx c) { return c / in_power(n, 1); }

} // namespace

LaurentSpectrum phi_circle(const LaurentSpectrum& s) {
    LaurentSpectrum out(s.grid_size());
    for (int n = s.min_index(); n <= s.max_index(); ++n)
        out.set(n, n == 0 ? s.at(0) : scale_by_in(n, s.at(n)));
    return out;
}

LaurentSpectrum phi_circle_inverse(const LaurentSpectrum& s) {
    LaurentSpectrum out(s.grid_size());
    for (int n = s.min_index(); n <= s.max_index(); ++n)
        out.set(n, n == 0 ? s.at(0) : divide_by_in(n, s.at(n)));
    return out;
}

DiscFunction phi_disc(const DiscFunction& f) {
    DiscFunction out(f.grid_size());
    out.set(0, f.at(0));
    for (int n = 1; n <= f.max_index(); ++n) out.set(n, scale_by_in(n, f.at(n)));
    return out;
}

DiscFunction phi_disc_inverse(const DiscFunction& g) {
    DiscFunction out(g.grid_size());
    out.set(0, g.at(0));
    for (int n = 1; n <= g.max_index(); ++n) out.set(n, divide_by_in(n, g.at(n)));
    return out;
}

ExteriorFunction phi_exterior(const ExteriorFunction& f) {
    ExteriorFunction out(f.grid_size());
    for (int n = f.min_index(); n < 0; ++n) out.set(n, scale_by_in(n, f.at(n)));
    return out;
}

ExteriorFunction phi_exterior_inverse(const ExteriorFunction& h) {
    ExteriorFunction out(h.grid_size());
    for (int n = h.min_index(); n < 0; ++n) out.set(n, divide_by_in(n, h.at(n)));
    return out;
}

DiscFunction antiderivative_disc(const DiscFunction& f) {
    if (f.at(f.max_index()) != cplx{})
        throw guard_error("antiderivative_disc: coefficient at top index " +
                          std::to_string(f.max_index()) +
                          " would leave the range; re-grid the input");
    DiscFunction out(f.grid_size());
    for (int n = 0; n < f.max_index(); ++n)
        out.set(n + 1, f.at(n) / static_cast<double>(n + 1));
    return out;
}

namespace {

// Winding-number membership test against the sampled boundary polyline.
// Points within `edge_tol` of the polyline count as boundary points.
bool in_closed_domain(const JordanDomain& domain, cplx z) {
    const int n = 1024;
    CircleGrid grid(n);
    std::vector<cplx> p(static_cast<std::size_t>(n) + 1);
    double scale = 0.0;
    for (int j = 0; j < n; ++j) {
        p[static_cast<std::size_t>(j)] = domain.boundary(grid.node(j));
        scale = std::max(scale, std::abs(p[static_cast<std::size_t>(j)] - domain.center_offset()));
    }
    p[static_cast<std::size_t>(n)] = p[0];

    const double edge_tol = 1e-4 * std::max(1.0, scale);
    double winding = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx a = p[static_cast<std::size_t>(j)] - z;
        const cplx b = p[static_cast<std::size_t>(j + 1)] - z;
        // distance from z to segment [p_j, p_{j+1}]
        const cplx d = b - a;
        const double len2 = std::norm(d);
        double t = len2 > 0.0 ? std::clamp(-(a.real() * d.real() + a.imag() * d.imag()) / len2, 0.0, 1.0)
                              : 0.0;
        if (std::abs(a + t * d) <= edge_tol) return true;
        winding += std::atan2(a.real() * b.imag() - a.imag() * b.real(),
                              a.real() * b.real() + a.imag() * b.imag());
    }
    return std::abs(winding) > pi; // ~2*pi inside, ~0 outside
}

} // namespace

cplx antiderivative_starlike(const JordanDomain& domain, const std::function<cplx(cplx)>& f,
                             cplx z) {
    const StarlikeResult star = starlike_check(domain);
    if (!star.starlike)
        throw guard_error("antiderivative_starlike: domain failed the star-like check (margin " +
                          std::to_string(star.margin) + ")");
    if (!in_closed_domain(domain, z))
        throw guard_error("antiderivative_starlike: point outside the closed domain");

    const cplx center = domain.center_offset();
    const cplx leg = z - center;
    const GaussLegendre& gl = gauss_legendre_64();
    std::vector<cplx> terms(gl.nodes.size());
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
        const double t = 0.5 * (gl.nodes[q] + 1.0); // map [-1,1] -> [0,1]
        terms[q] = 0.5 * gl.weights[q] * f(center + t * leg);
    }
    return leg * pairwise_sum(std::span<const cplx>(terms));
}

} // namespace laurent

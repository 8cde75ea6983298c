#include "laurent/domain.hpp"

#include "laurent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace laurent {

cplx JordanDomain::map(cplx w) const {
    cplx acc{};
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * w + coeffs_[j];
    return acc * w; // the series starts at c_1 w
}

cplx JordanDomain::map_derivative(cplx w) const {
    cplx acc{};
    for (std::size_t j = coeffs_.size(); j-- > 0;)
        acc = acc * w + static_cast<double>(j + 1) * coeffs_[j];
    return acc;
}

cplx JordanDomain::boundary(double theta) const {
    const cplx w = std::polar(1.0, theta);
    return map(w) + offset_;
}

cplx JordanDomain::boundary_derivative(double theta) const {
    const cplx w = std::polar(1.0, theta);
    return i_times(w) * map_derivative(w);
}

JordanDomain make_polynomial_domain(std::vector<cplx> coeffs, cplx center_offset) {
    if (coeffs.empty() || coeffs[0] == cplx{})
        throw guard_error("make_polynomial_domain: leading coefficient c_1 must be nonzero");
    double tail = 0.0;
    for (std::size_t k = 2; k <= coeffs.size(); ++k)
        tail += static_cast<double>(k) * std::abs(coeffs[k - 1]);
    const double lead = std::abs(coeffs[0]);
    if (!(tail < lead))
        throw guard_error("make_polynomial_domain: univalence margin violated, sum k|c_k| = " +
                          std::to_string(tail) + " not < |c_1| = " + std::to_string(lead));
    return JordanDomain(std::move(coeffs), center_offset);
}

namespace {

void validate_lift(const std::vector<double>& psi, CircleHomeomorphism::Orientation orientation) {
    const int n = static_cast<int>(psi.size());
    if (n < 4) throw guard_error("CircleHomeomorphism: table needs at least 4 nodes");
    const bool preserving = orientation == CircleHomeomorphism::Orientation::preserving;
    const double wrap = preserving ? two_pi : -two_pi;
    for (int j = 0; j + 1 < n; ++j) {
        const double step = psi[static_cast<std::size_t>(j + 1)] - psi[static_cast<std::size_t>(j)];
        if (preserving ? step <= 0.0 : step >= 0.0)
            throw guard_error("CircleHomeomorphism: lift not strictly monotone at node " +
                              std::to_string(j));
    }
    const double closing = (psi[0] + wrap) - psi[static_cast<std::size_t>(n - 1)];
    if (preserving ? closing <= 0.0 : closing >= 0.0)
        throw guard_error("CircleHomeomorphism: lift does not close up with total increase " +
                          std::string(preserving ? "+2pi" : "-2pi"));
}

} // namespace

CircleHomeomorphism::CircleHomeomorphism(std::vector<double> angle_table, Orientation orientation)
    : psi_(std::move(angle_table)), orientation_(orientation) {
    validate_lift(psi_, orientation_);
}

CircleHomeomorphism CircleHomeomorphism::identity(int n) {
    CircleGrid grid(n);
    std::vector<double> psi(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) psi[static_cast<std::size_t>(j)] = grid.node(j);
    return CircleHomeomorphism(std::move(psi), Orientation::preserving);
}

CircleHomeomorphism CircleHomeomorphism::reflection(int n) {
    CircleGrid grid(n);
    std::vector<double> psi(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) psi[static_cast<std::size_t>(j)] = -grid.node(j);
    return CircleHomeomorphism(std::move(psi), Orientation::reversing);
}

BoundarySamples pullback(const JordanDomain& domain, const std::function<cplx(cplx)>& f,
                         const CircleGrid& grid) {
    std::vector<cplx> values(static_cast<std::size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j)
        values[static_cast<std::size_t>(j)] = f(domain.boundary(grid.node(j)));
    return BoundarySamples(grid, std::move(values));
}

double derivative_identity_defect(const JordanDomain& domain,
                                  const std::function<cplx(cplx)>& f,
                                  const std::function<cplx(cplx)>& f_prime,
                                  const CircleGrid& grid) {
    const BoundarySamples samples = pullback(domain, f, grid);
    const LaurentSpectrum spectrum = analyze(samples);

    // resolution guard: last octave of the coefficient table must have decayed
    const int n = grid.size();
    double octave_sup = 0.0;
    for (int idx = spectrum.min_index(); idx <= spectrum.max_index(); ++idx)
        if (std::abs(idx) >= n / 4) octave_sup = std::max(octave_sup, std::abs(spectrum.at(idx)));
    if (octave_sup > 1e-8)
        throw guard_error("derivative_identity_defect: pullback spectrum tail " +
                          std::to_string(octave_sup) + " has not decayed; refine the grid");

    const BoundarySamples lhs = synthesize(differentiate(spectrum, 1), grid);
    double defect = 0.0;
    for (int j = 0; j < n; ++j) {
        const double theta = grid.node(j);
        const cplx rhs = f_prime(domain.boundary(theta)) * domain.boundary_derivative(theta);
        defect = std::max(defect, std::abs(lhs.value(j) - rhs));
    }
    return defect;
}

QProjectionParts q_projection(const JordanDomain& /*domain*/, const BoundarySamples& f) {
    const LaurentSpectrum spectrum = analyze(f);
    auto [disc_part, exterior_part] = split(spectrum);
    (void)exterior_part;
    const BoundarySamples analytic = synthesize(embed(disc_part), f.grid());
    std::vector<cplx> kernel(static_cast<std::size_t>(f.size()));
    for (int j = 0; j < f.size(); ++j)
        kernel[static_cast<std::size_t>(j)] = f.value(j) - analytic.value(j);
    return {analytic, BoundarySamples(f.grid(), std::move(kernel))};
}

DomainConjugateParts conjugate_split_domain(const JordanDomain& /*domain*/,
                                            const BoundarySamples& f) {
    const ConjugateParts parts = conjugate_split(analyze(f));
    return {synthesize(embed(parts.g), f.grid()), synthesize(embed(parts.h), f.grid())};
}

double starlike_margin(const std::vector<cplx>& coeffs, int grid_size) {
    if (coeffs.empty()) throw guard_error("starlike_margin: empty coefficient sequence");
    CircleGrid grid(grid_size);
    auto eval = [&](cplx w) {
        cplx acc{};
        for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * w + coeffs[j];
        return acc * w;
    };
    auto eval_deriv = [&](cplx w) {
        cplx acc{};
        for (std::size_t j = coeffs.size(); j-- > 0;)
            acc = acc * w + static_cast<double>(j + 1) * coeffs[j];
        return acc;
    };
    double margin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid_size; ++j) {
        const cplx w = std::polar(1.0, grid.node(j));
        const cplx phi = eval(w);
        if (std::abs(phi) < 1e-300)
            throw guard_error("starlike_margin: map vanishes at grid node " + std::to_string(j));
        margin = std::min(margin, (w * eval_deriv(w) / phi).real());
    }
    return margin;
}

StarlikeResult starlike_check(const JordanDomain& domain, int grid_size) {
    const double margin = starlike_margin(domain.map_coefficients(), grid_size);
    return {margin > 0.0, margin};
}

namespace {

// Unwrapped boundary argument table beta_j = arg(phi(e^{i theta_j})) about the
// center, extended with the closing value beta_N = beta_0 + 2*pi.
std::vector<double> boundary_argument_table(const JordanDomain& domain, int n) {
    CircleGrid grid(n);
    std::vector<double> beta(static_cast<std::size_t>(n) + 1);
    double prev = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx p = domain.map(std::polar(1.0, grid.node(j)));
        double a = std::atan2(p.imag(), p.real());
        if (j == 0) {
            beta[0] = a;
        } else {
            while (a < prev - pi) a += two_pi;
            while (a > prev + pi) a -= two_pi;
            beta[static_cast<std::size_t>(j)] = a;
        }
        prev = beta[static_cast<std::size_t>(j)];
    }
    beta[static_cast<std::size_t>(n)] = beta[0] + two_pi;
    return beta;
}

} // namespace

CircleHomeomorphism welding_compose(const JordanDomain& domain, const CircleHomeomorphism& delta) {
    const int n = delta.size();
    if (n > (1 << 14))
        throw guard_error("welding_compose: table size capped at 2^14, got " + std::to_string(n));
    if (!is_power_of_two(n))
        throw guard_error("welding_compose: table size must be a power of two");

    const std::vector<double> beta = boundary_argument_table(domain, n);
    for (int j = 0; j < n; ++j)
        if (beta[static_cast<std::size_t>(j + 1)] <= beta[static_cast<std::size_t>(j)])
            throw inconsistency_error(
                "welding_compose: boundary argument not monotone at node " + std::to_string(j));

    CircleGrid grid(n);
    const double beta0 = beta[0];
    // piecewise-linear inverse of the lift beta, extended 2*pi-periodically
    auto invert = [&](double target) {
        const double m = std::floor((target - beta0) / two_pi);
        const double t = target - two_pi * m; // in [beta0, beta0 + 2*pi)
        const auto it = std::upper_bound(beta.begin(), beta.end(), t);
        int k = static_cast<int>(it - beta.begin()) - 1;
        k = std::clamp(k, 0, n - 1);
        const double b_lo = beta[static_cast<std::size_t>(k)];
        const double b_hi = beta[static_cast<std::size_t>(k + 1)];
        const double frac = (t - b_lo) / (b_hi - b_lo);
        const double step = two_pi / static_cast<double>(n);
        return grid.node(k) + frac * step + two_pi * m;
    };

    std::vector<double> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = invert(delta.psi(j));
    return CircleHomeomorphism(std::move(w), delta.orientation());
}

QuasiSymmetryReport quasisymmetry_estimate(const CircleHomeomorphism& h, long long triple_budget) {
    if (triple_budget <= 0) throw guard_error("quasisymmetry_estimate: budget must be positive");
    if (triple_budget > 1000000)
        throw guard_error("quasisymmetry_estimate: budget capped at 10^6, got " +
                          std::to_string(triple_budget));

    const int n = h.size();
    CircleGrid grid(n);
    std::vector<cplx> x(static_cast<std::size_t>(n)), hx(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        x[static_cast<std::size_t>(j)] = std::polar(1.0, grid.node(j));
        hx[static_cast<std::size_t>(j)] = std::polar(1.0, h.psi(j));
    }

    // triples (j, k, l) with k != j, l != j, l != k, flattened in mixed radix
    const long long total = static_cast<long long>(n) * (n - 1) * (n - 2);
    const long long stride = std::max<long long>(1, (total + triple_budget - 1) / triple_budget);

    std::map<double, double> worst; // exact t value -> worst image ratio
    for (long long f = 0; f < total; f += stride) {
        const long long per_j = static_cast<long long>(n - 1) * (n - 2);
        const int j = static_cast<int>(f / per_j);
        const long long r = f % per_j;
        int k = static_cast<int>(r / (n - 2));
        int l = static_cast<int>(r % (n - 2));
        if (k >= j) ++k;           // skip j in the k slot
        if (l >= std::min(j, k)) ++l;
        if (l >= std::max(j, k)) ++l; // skip both j and k in the l slot
        const double dxy = std::abs(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(k)]);
        const double dxz = std::abs(x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(l)]);
        const double t = dxy / dxz;
        const double ratio = std::abs(hx[static_cast<std::size_t>(j)] - hx[static_cast<std::size_t>(k)]) /
                             std::abs(hx[static_cast<std::size_t>(j)] - hx[static_cast<std::size_t>(l)]);
        auto [it, inserted] = worst.try_emplace(t, ratio);
        if (!inserted) it->second = std::max(it->second, ratio);
    }

    QuasiSymmetryReport report;
    report.sampled_ratios.assign(worst.begin(), worst.end());
    report.eta_envelope.reserve(report.sampled_ratios.size());
    double running = 0.0;
    for (const auto& [t, ratio] : report.sampled_ratios) {
        running = std::max(running, ratio);
        report.eta_envelope.emplace_back(t, running);
    }
    return report;
}

} // namespace laurent

#include "laurent/cauchy.hpp"

#include "laurent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace laurent {

namespace {

// Proper crossing test for segments ab and cd (shared endpoints excluded by
// the caller skipping adjacent segments).
bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
    auto orient = [](cplx p, cplx q, cplx r) {
        const double v = (q.real() - p.real()) * (r.imag() - p.imag()) -
                         (q.imag() - p.imag()) * (r.real() - p.real());
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

} // namespace

ParamCurve::ParamCurve(CircleGrid grid, std::vector<cplx> positions, std::vector<cplx> derivatives,
                       Orientation orientation)
    : grid_(grid),
      positions_(std::move(positions)),
      derivatives_(std::move(derivatives)),
      orientation_(orientation) {
    const int n = grid_.size();
    if (static_cast<int>(positions_.size()) != n || static_cast<int>(derivatives_.size()) != n)
        throw guard_error("ParamCurve: positions/derivatives must match the grid size " +
                          std::to_string(n));
    for (int j = 0; j < n; ++j)
        if (derivatives_[static_cast<std::size_t>(j)] == cplx{})
            throw guard_error("ParamCurve: derivative vanishes at node " + std::to_string(j));

    if (n <= 4096) { // desk-scale simplicity check of the closed polyline
        for (int i = 0; i < n; ++i) {
            const cplx a = positions_[static_cast<std::size_t>(i)];
            const cplx b = positions_[static_cast<std::size_t>((i + 1) % n)];
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue; // adjacent around the seam
                const cplx c = positions_[static_cast<std::size_t>(j)];
                const cplx d = positions_[static_cast<std::size_t>((j + 1) % n)];
                if (segments_cross(a, b, c, d))
                    throw guard_error("ParamCurve: polyline self-intersects between segments " +
                                      std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }
}

ParamCurve ParamCurve::unit_circle(const CircleGrid& grid) {
    return circle(cplx{}, 1.0, Orientation::positive, grid);
}

ParamCurve ParamCurve::circle(cplx center, double radius, Orientation orientation,
                              const CircleGrid& grid) {
    if (radius <= 0.0) throw guard_error("ParamCurve::circle: radius must be positive");
    const int n = grid.size();
    std::vector<cplx> pos(static_cast<std::size_t>(n)), der(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const cplx e = std::polar(1.0, grid.node(j));
        pos[static_cast<std::size_t>(j)] = center + radius * e;
        der[static_cast<std::size_t>(j)] = radius * i_times(e);
    }
    return ParamCurve(grid, std::move(pos), std::move(der), orientation);
}

TangentDomain::TangentDomain(double r, const CircleGrid& outer_grid, const CircleGrid& inner_grid)
    : r_(r),
      center_(cplx{1.0 - r, 0.0}),
      outer_(ParamCurve::unit_circle(outer_grid)),
      inner_(ParamCurve::circle(cplx{1.0 - r, 0.0}, r, ParamCurve::Orientation::negative,
                                inner_grid)) {
    if (!(r > 0.0 && r < 1.0))
        throw guard_error("TangentDomain: inner radius must lie in (0, 1)");
    if (std::abs(center_) + r != 1.0)
        throw guard_error("TangentDomain: |center| + r must equal 1 exactly; r = " +
                          std::to_string(r) + " does not close the tangency in double precision");
}

cplx cauchy(const ParamCurve& curve, const BoundarySamples& f, cplx z) {
    if (!(f.grid() == curve.grid()))
        throw guard_error("cauchy: samples and curve live on different grids");
    const int n = curve.size();
    const double min_dist = 10.0 / static_cast<double>(n);
    const auto& zeta = curve.positions();
    const auto& dzeta = curve.derivatives();

    std::vector<cplx> terms(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const cplx diff = zeta[static_cast<std::size_t>(j)] - z;
        if (std::abs(diff) < min_dist)
            throw guard_error("cauchy: probe point within " + std::to_string(min_dist) +
                              " of the curve (minimum admissible distance at N = " +
                              std::to_string(n) + ")");
        terms[static_cast<std::size_t>(j)] =
            f.value(j) * dzeta[static_cast<std::size_t>(j)] / diff;
    }
    // (1/(2 pi i)) * (2 pi / N) = 1/(i N) = -i/N
    cplx total = pairwise_sum(std::span<const cplx>(terms));
    total = i_times(total) * (-1.0 / static_cast<double>(n));
    if (curve.orientation() == ParamCurve::Orientation::negative) total = -total;
    return total;
}

double split_consistency(const BoundarySamples& f) {
    const auto [g, h] = split(analyze(f));
    const ParamCurve circle = ParamCurve::unit_circle(f.grid());

    double defect = 0.0;
    const double inside_radii[] = {0.3, 0.7};
    const double outside_radii[] = {1.4, 3.0};
    for (int k = 0; k < 8; ++k) {
        const cplx ray = std::polar(1.0, two_pi * static_cast<double>(k) / 8.0);
        for (double rho : inside_radii) {
            const cplx z = rho * ray;
            defect = std::max(defect, std::abs(cauchy(circle, f, z) - eval_disc(g, z)));
        }
        for (double rho : outside_radii) {
            const cplx z = rho * ray;
            defect = std::max(defect, std::abs(cauchy(circle, f, z) + eval_exterior(h, z)));
        }
    }
    return defect;
}

TangentDecomposition tangent_split(const TangentDomain& domain, const BoundarySamples& outer,
                                   const BoundarySamples& inner) {
    if (!(outer.grid() == domain.outer().grid()) || !(inner.grid() == domain.inner().grid()))
        throw guard_error("tangent_split: samples do not match the domain grids");

    const auto [g, outer_tail] = split(analyze(outer));
    (void)outer_tail;

    const cplx c = domain.inner_center();
    const double r = domain.inner_radius();
    const int n_in = inner.size();
    CircleGrid inner_grid = inner.grid();

    // residual = inner trace minus the disc part, analyzed about the inner center
    std::vector<cplx> residual(static_cast<std::size_t>(n_in));
    for (int j = 0; j < n_in; ++j) {
        const cplx zj = domain.inner().positions()[static_cast<std::size_t>(j)];
        residual[static_cast<std::size_t>(j)] = inner.value(j) - eval_disc(g, zj);
    }
    const LaurentSpectrum t = analyze(BoundarySamples(inner_grid, std::move(residual)));

    // Fourier coefficient at -k on the inner circle is h_{-k} r^{-k}
    ExteriorFunction h(n_in);
    double rk = 1.0;
    for (int k = 1; k <= n_in / 2; ++k) {
        rk *= r;
        h.set(-k, t.at(-k) * rk);
    }

    TangentDecomposition parts{g, h, c, r, 0.0};

    double defect = 0.0;
    for (int j = 0; j < outer.size(); ++j) {
        const cplx zj = domain.outer().positions()[static_cast<std::size_t>(j)];
        defect = std::max(defect, std::abs(outer.value(j) - eval_disc(g, zj) -
                                           eval_tangent_exterior(parts, zj)));
    }
    for (int j = 0; j < inner.size(); ++j) {
        const cplx zj = domain.inner().positions()[static_cast<std::size_t>(j)];
        defect = std::max(defect, std::abs(inner.value(j) - eval_disc(g, zj) -
                                           eval_tangent_exterior(parts, zj)));
    }
    parts.defect = defect;
    if (defect > 1e-6)
        throw inconsistency_error("tangent_split: reconstruction defect " +
                                  std::to_string(defect) +
                                  " exceeds 1e-6; the boundary traces are not restrictions of one "
                                  "function on the domain");
    return parts;
}

cplx eval_tangent_exterior(const TangentDecomposition& parts, cplx z) {
    const cplx zc = z - parts.inner_center;
    if (std::abs(zc) < parts.inner_radius * (1.0 - 1e-12))
        throw guard_error("eval_tangent_exterior: point inside the inner disc");
    const cplx w = 1.0 / zc;
    const auto& coef = parts.h.coefficients(); // coef[k-1] = h_{-k}
    cplx acc{};
    for (std::size_t j = coef.size(); j-- > 0;) acc = (acc + coef[j]) * w;
    return acc;
}

namespace {

struct RefinedCurve {
    ParamCurve curve;
    BoundarySamples samples;
};

RefinedCurve resample(const LaurentSpectrum& pos, const LaurentSpectrum& der,
                      const LaurentSpectrum& data, ParamCurve::Orientation orientation, int n) {
    CircleGrid grid(n);
    BoundarySamples p = synthesize(pos, grid);
    BoundarySamples d = synthesize(der, grid);
    BoundarySamples f = synthesize(data, grid);
    return {ParamCurve(grid, p.values(), d.values(), orientation), std::move(f)};
}

} // namespace

ProbeReport radial_probe(const ParamCurve& curve, const BoundarySamples& f, cplx target,
                         cplx direction, const std::vector<double>& radii, int max_grid) {
    if (radii.empty()) throw guard_error("radial_probe: empty radius list");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0) throw guard_error("radial_probe: radii must be positive");
        if (i > 0 && radii[i] >= radii[i - 1])
            throw guard_error("radial_probe: radii must be strictly decreasing");
    }
    const double dn = std::abs(direction);
    if (std::abs(dn - 1.0) > 1e-6)
        throw guard_error("radial_probe: direction must be a unit complex number");
    direction /= dn;
    if (max_grid < curve.size() || !is_power_of_two(max_grid))
        throw guard_error("radial_probe: max grid must be a power of two >= the curve grid");

    // spectral representations for exact resampling at refined grids
    const LaurentSpectrum pos_spec = analyze(BoundarySamples(curve.grid(), curve.positions()));
    const LaurentSpectrum der_spec = analyze(BoundarySamples(curve.grid(), curve.derivatives()));
    const LaurentSpectrum data_spec = analyze(f);

    double data_sup = 0.0;
    for (const cplx& v : f.values()) data_sup = std::max(data_sup, std::abs(v));

    ProbeReport report;
    int n = curve.size();
    RefinedCurve active{curve, f};
    for (double rho : radii) {
        const cplx z = target - rho * direction;
        bool ok = false;
        while (true) {
            const auto& zeta = active.curve.positions();
            double dist = std::numeric_limits<double>::infinity();
            for (const cplx& p : zeta) dist = std::min(dist, std::abs(p - z));
            if (dist >= 10.0 / static_cast<double>(n)) {
                ok = true;
                break;
            }
            if (n >= max_grid) break;
            n *= 2;
            active = resample(pos_spec, der_spec, data_spec, curve.orientation(), n);
        }
        if (!ok) {
            report.incomplete = true;
            break;
        }
        report.approach_radii.push_back(rho);
        report.values.push_back(cauchy(active.curve, active.samples, z));
    }

    const std::size_t m = report.values.size();
    if (m == 0) {
        report.divergence_flag = false;
        report.limit_estimate = cplx{};
        return report;
    }

    // oscillation over the last (up to) 5 values
    const std::size_t w = std::min<std::size_t>(5, m);
    double osc = 0.0, window_scale = 0.0;
    for (std::size_t i = m - w; i < m; ++i) {
        window_scale = std::max(window_scale, std::abs(report.values[i]));
        for (std::size_t j = i + 1; j < m; ++j)
            osc = std::max(osc, std::abs(report.values[i] - report.values[j]));
    }
    report.oscillation_measure = osc;

    bool growing = m >= 2;
    for (std::size_t i = m - w; i + 1 < m && growing; ++i)
        if (std::abs(report.values[i + 1]) <= std::abs(report.values[i])) growing = false;
    const bool blowup = growing && std::abs(report.values[m - 1]) > 10.0 * data_sup;
    const bool oscillating = window_scale > 0.0 && osc > 0.5 * window_scale;
    report.divergence_flag = blowup || oscillating;
    if (report.divergence_flag) return report;

    // Richardson-style geometric extrapolation when successive differences
    // decay by a factor >= 1.5; otherwise the last value stands.
    cplx limit = report.values[m - 1];
    if (m >= 3) {
        const cplx d1 = report.values[m - 2] - report.values[m - 3];
        const cplx d2 = report.values[m - 1] - report.values[m - 2];
        const double scale = std::max(1.0, window_scale);
        if (std::abs(d2) > 1e-14 * scale && std::abs(d1) >= 1.5 * std::abs(d2)) {
            const cplx ratio = d2 / d1;
            if (std::abs(1.0 - ratio) > 0.1)
                limit = report.values[m - 1] + d2 * ratio / (1.0 - ratio);
        }
    }
    report.limit_estimate = limit;
    return report;
}

} // namespace laurent

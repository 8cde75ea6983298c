#include "laurent/fourier.hpp"

#include "laurent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace laurent {

CircleGrid::CircleGrid(int n) : n_(n) {
    if (n < 4 || !is_power_of_two(n))
        throw guard_error("CircleGrid: size must be a power of two >= 4, got " + std::to_string(n));
}

BoundarySamples::BoundarySamples(CircleGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size())
        throw guard_error("BoundarySamples: expected " + std::to_string(grid_.size()) +
                          " values, got " + std::to_string(values_.size()));
    for (const cplx& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw guard_error("BoundarySamples: values must be finite");
}

LaurentSpectrum::LaurentSpectrum(int grid_size) : n_(grid_size) {
    if (grid_size < 4 || !is_power_of_two(grid_size))
        throw guard_error("LaurentSpectrum: grid size must be a power of two >= 4, got " +
                          std::to_string(grid_size));
    c_.assign(static_cast<std::size_t>(n_), cplx{});
}

LaurentSpectrum::LaurentSpectrum(int grid_size, const std::map<int, cplx>& coefficients)
    : LaurentSpectrum(grid_size) {
    for (const auto& [n, v] : coefficients) set(n, v);
}

void LaurentSpectrum::check_index(int n) const {
    if (n < min_index() || n > max_index())
        throw guard_error("LaurentSpectrum: index " + std::to_string(n) + " outside [" +
                          std::to_string(min_index()) + ", " + std::to_string(max_index()) + "]");
}

cplx LaurentSpectrum::at(int n) const {
    check_index(n);
    return c_[static_cast<std::size_t>(n + n_ / 2)];
}

void LaurentSpectrum::set(int n, cplx value) {
    check_index(n);
    c_[static_cast<std::size_t>(n + n_ / 2)] = value;
}

const char* to_string(DecayClass c) {
    switch (c) {
        case DecayClass::trig_polynomial: return "trig-polynomial";
        case DecayClass::super_polynomial: return "super-polynomial";
        case DecayClass::power_law: return "power-law";
        case DecayClass::slow: return "slow";
    }
    return "?";
}

LaurentSpectrum analyze(const BoundarySamples& samples) {
    const int n = samples.size();
    std::vector<cplx> a = samples.values();
    fft_in_place(a, /*inverse=*/false);
    LaurentSpectrum s(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    // bin k -> index k for k < N/2, k - N for k > N/2; the Nyquist bin k = N/2
    // has no symmetric partner and is dropped.
    for (int k = 0; k < n; ++k) {
        if (k == n / 2) continue;
        const int idx = (k < n / 2) ? k : k - n;
        s.set(idx, a[static_cast<std::size_t>(k)] * inv_n);
    }
    return s;
}

BoundarySamples synthesize(const LaurentSpectrum& spectrum, const CircleGrid& grid) {
    const int n = grid.size();
    const int m = spectrum.grid_size();
    if (n < m)
        throw guard_error("synthesize: grid of size " + std::to_string(n) +
                          " aliases a spectrum with grid size " + std::to_string(m));
    std::vector<cplx> bins(static_cast<std::size_t>(n), cplx{});
    for (int idx = spectrum.min_index(); idx <= spectrum.max_index(); ++idx) {
        const cplx c = spectrum.at(idx);
        if (c == cplx{}) continue;
        const int k = (idx >= 0) ? idx : idx + n;
        bins[static_cast<std::size_t>(k)] += c;
    }
    fft_in_place(bins, /*inverse=*/true);
    return BoundarySamples(grid, std::move(bins));
}

BoundarySamples synthesize(const LaurentSpectrum& spectrum) {
    return synthesize(spectrum, CircleGrid(spectrum.grid_size()));
}

LaurentSpectrum differentiate(const LaurentSpectrum& spectrum, int k) {
    if (k < 0) throw guard_error("differentiate: order must be nonnegative");
    LaurentSpectrum out(spectrum.grid_size());
    for (int n = spectrum.min_index(); n <= spectrum.max_index(); ++n)
        out.set(n, in_power(n, k) * spectrum.at(n));
    return out;
}

namespace {

double abs_pow(int n, int l) {
    double p = 1.0;
    const double base = std::abs(static_cast<double>(n));
    for (int j = 0; j < l; ++j) p *= base;
    return p;
}

} // namespace

double seminorm(const LaurentSpectrum& spectrum, int l, SeminormFamily family) {
    if (l < 0) throw guard_error("seminorm: order must be nonnegative");
    if (l > 64) throw guard_error("seminorm: order capped at 64, got " + std::to_string(l));
    switch (family) {
        case SeminormFamily::sup: {
            double best = 0.0;
            for (int n = spectrum.min_index(); n <= spectrum.max_index(); ++n) {
                const double w = (l == 0) ? 1.0 : abs_pow(n, l);
                best = std::max(best, w * std::abs(spectrum.at(n)));
            }
            return best;
        }
        case SeminormFamily::sum: {
            double total = std::abs(spectrum.at(0));
            for (int n = spectrum.min_index(); n <= spectrum.max_index(); ++n) {
                if (n == 0) continue;
                total += abs_pow(n, l) * std::abs(spectrum.at(n));
            }
            return total;
        }
        case SeminormFamily::uniform_derivative: {
            const BoundarySamples values = synthesize(differentiate(spectrum, l));
            double best = 0.0;
            for (const cplx& v : values.values()) best = std::max(best, std::abs(v));
            return best;
        }
    }
    throw guard_error("seminorm: unknown family");
}

SmoothnessReport classify_smoothness(const LaurentSpectrum& spectrum) {
    const int n = spectrum.grid_size();
    if (n < 64)
        throw guard_error("classify_smoothness: needs at least 64 coefficients, got " +
                          std::to_string(n));

    SmoothnessReport report;

    bool all_zero = true;
    for (int idx = spectrum.min_index(); idx <= spectrum.max_index(); ++idx)
        if (spectrum.at(idx) != cplx{}) { all_zero = false; break; }
    if (all_zero) {
        report.decay_class = DecayClass::trig_polynomial;
        return report;
    }

    for (int l = 0; l <= 6; ++l)
        report.tail_norms.emplace_back(l, seminorm(spectrum, l, SeminormFamily::sup));

    const int tail_start = n / 8;
    constexpr double kTrigCutoff = 1e-13; // 100x working epsilon
    std::vector<double> log_mag, log_abs_n, abs_n;
    double tail_max = 0.0;
    for (int idx = spectrum.min_index(); idx <= spectrum.max_index(); ++idx) {
        if (std::abs(idx) < tail_start) continue;
        const double mag = std::abs(spectrum.at(idx));
        tail_max = std::max(tail_max, mag);
        if (mag < 1e-300) continue; // exact zeros carry no decay information
        log_mag.push_back(std::log(mag));
        log_abs_n.push_back(std::log(std::abs(static_cast<double>(idx))));
        abs_n.push_back(std::abs(static_cast<double>(idx)));
    }

    if (tail_max <= kTrigCutoff) {
        report.decay_class = DecayClass::trig_polynomial;
        return report;
    }

    if (log_mag.size() < 4) {
        // Too few live tail coefficients to fit anything meaningful.
        report.decay_class = DecayClass::slow;
        return report;
    }

    const LineFit power_fit = fit_line(log_abs_n, log_mag);     // log|c| vs log|n|
    const LineFit geometric_fit = fit_line(abs_n, log_mag);     // log|c| vs |n|

    if (geometric_fit.sse < power_fit.sse && geometric_fit.slope < 0.0) {
        report.decay_class = DecayClass::super_polynomial;
        report.fit_quality = std::clamp(geometric_fit.r_squared, 0.0, 1.0);
        return report;
    }

    const double exponent = -power_fit.slope;
    report.fit_quality = std::clamp(power_fit.r_squared, 0.0, 1.0);
    if (exponent > 0.5) {
        report.decay_class = DecayClass::power_law;
        report.estimated_exponent = exponent;
    } else {
        report.decay_class = DecayClass::slow;
    }
    return report;
}

} // namespace laurent

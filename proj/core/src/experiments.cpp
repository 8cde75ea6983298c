#include "laurent/experiments.hpp"

#include "laurent/errors.hpp"
#include "laurent/io.hpp"
#include "laurent/split.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace laurent {

namespace {

// Discrete L^1 norm of the one-sided kernel K_M(t) = sum_{n=0}^{M} e^{int}
// on a 4N-point grid: |K_M(t)| = |sin((M+1)t/2) / sin(t/2)|.
double kernel_norm(int n) {
    const int m = n / 2;
    const int g = 4 * n;
    std::vector<double> terms(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
        const double t = two_pi * static_cast<double>(j) / static_cast<double>(g);
        const double s = std::sin(0.5 * t);
        terms[static_cast<std::size_t>(j)] =
            (j == 0) ? static_cast<double>(m + 1)
                     : std::abs(std::sin(0.5 * static_cast<double>(m + 1) * t) / s);
    }
    return pairwise_sum(std::span<const double>(terms)) / static_cast<double>(g);
}

double sup_norm(const BoundarySamples& samples) {
    double best = 0.0;
    for (const cplx& v : samples.values()) best = std::max(best, std::abs(v));
    return best;
}

} // namespace

std::vector<RieszNormRow> riesz_norm_experiment(const std::vector<int>& degrees,
                                                std::uint64_t seed, int trials) {
    if (trials < 1) throw guard_error("riesz_norm_experiment: trials must be positive");
    std::vector<RieszNormRow> rows;
    rows.reserve(degrees.size());
    for (int n : degrees) {
        if (n < 8 || n > 4096 || !is_power_of_two(n))
            throw guard_error("riesz_norm_experiment: degree rows must be powers of two in "
                              "[8, 4096], got " + std::to_string(n));
        const int m = n / 2;          // polynomial degree
        const int spec_n = 2 * n;     // spectrum range comfortably holds |n| <= m
        const CircleGrid eval_grid(4 * n);

        double best_random = 0.0;
        long long best_seed = -1;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
            std::mt19937_64 rng(trial_seed);
            LaurentSpectrum s(spec_n);
            for (int idx = -m; idx <= m; ++idx) {
                const double phase =
                    two_pi * static_cast<double>(rng() >> 11) / 9007199254740992.0; // 2^53
                s.set(idx, std::polar(1.0, phase));
            }
            const double denom = sup_norm(synthesize(s, eval_grid));
            const auto [disc_part, tail] = split(s);
            (void)tail;
            const double numer = sup_norm(synthesize(embed(disc_part), eval_grid));
            const double ratio = numer / denom;
            if (ratio > best_random) {
                best_random = ratio;
                best_seed = static_cast<long long>(trial_seed);
            }
        }

        const double kernel = kernel_norm(n);
        RieszNormRow row;
        row.degree = n;
        if (best_random > kernel) {
            row.estimated_norm = best_random;
            row.witness_seed = best_seed;
        } else {
            row.estimated_norm = kernel;
            row.witness_seed = -1;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> classify_sweep(const std::filesystem::path& directory) {
    if (!std::filesystem::is_directory(directory))
        throw io_error("classify_sweep: not a directory: " + directory.string());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    std::vector<SweepRow> rows;
    rows.reserve(files.size());
    for (const auto& path : files) {
        SweepRow row;
        row.filename = path.filename().string();
        try {
            row.report = classify_smoothness(read_spectrum(path));
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace laurent

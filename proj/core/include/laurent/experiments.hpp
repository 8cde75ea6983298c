#pragma once

#include "laurent/fourier.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace laurent {

struct RieszNormRow {
    int degree = 0;               // experiment size N; polynomials have degree <= N/2
    double estimated_norm = 1.0;  // >= 1 (the projection fixes constants)
    long long witness_seed = -1;  // seed of the best random witness, -1 when the
                                  // kernel bound was the larger estimate
};

// Sup-norm operator norm of the analytic projection restricted to trig
// polynomials of degree <= N/2, estimated per degree as the larger of
//   (a) the discrete L^1 norm of the one-sided Dirichlet-type kernel, and
//   (b) the best ratio ||P f||_inf / ||f||_inf over seeded random
//       unimodular-coefficient polynomials.
// Degrees must be powers of two <= 4096.
std::vector<RieszNormRow> riesz_norm_experiment(const std::vector<int>& degrees,
                                                std::uint64_t seed = 0, int trials = 200);

struct SweepRow {
    std::string filename;
    std::optional<SmoothnessReport> report; // absent on error
    std::string error;                      // empty on success
};

// Classifies every regular file in the directory as a spectrum file, in
// filename order.  Unreadable files produce error rows; the sweep continues.
std::vector<SweepRow> classify_sweep(const std::filesystem::path& directory);

} // namespace laurent

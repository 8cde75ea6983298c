#pragma once

#include "laurent/cauchy.hpp"
#include "laurent/domain.hpp"
#include "laurent/experiments.hpp"
#include "laurent/fourier.hpp"
#include "laurent/split.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace laurent {

// All writers emit floating-point numbers with 17 significant digits and keys
// in a fixed order, so identical inputs produce byte-identical files.

std::string fmt17(double x);
std::string json_escape(std::string_view s);

// {"n": N, "grid": "uniform-theta", "values": [[re, im], ...]}
void write_samples(const std::filesystem::path& path, const BoundarySamples& samples);
BoundarySamples read_samples(const std::filesystem::path& path);

// {"n": N, "coeffs": {"<index>": [re, im], ...}}, zero entries omitted,
// indices ascending.
void write_spectrum(const std::filesystem::path& path, const LaurentSpectrum& spectrum);
void write_spectrum(const std::filesystem::path& path, const DiscFunction& f);
void write_spectrum(const std::filesystem::path& path, const ExteriorFunction& f);
LaurentSpectrum read_spectrum(const std::filesystem::path& path);
DiscFunction read_disc_function(const std::filesystem::path& path);
ExteriorFunction read_exterior_function(const std::filesystem::path& path);

// {"coeffs": [[re, im], ...], "offset": [re, im]}
void write_domain(const std::filesystem::path& path, const JordanDomain& domain);
JordanDomain read_domain(const std::filesystem::path& path);

// {"theta": [...], "psi": [...], "orientation": "preserving"|"reversing"}
void write_homeomorphism(const std::filesystem::path& path, const CircleHomeomorphism& h);
CircleHomeomorphism read_homeomorphism(const std::filesystem::path& path);

// {"radii": [...], "values": [[re, im], ...], "limit": [re, im] | null,
//  "diverges": bool, "oscillation": real}; an "incomplete": true key is
// appended only for partial reports.
void write_probe_report(const std::filesystem::path& path, const ProbeReport& report);
ProbeReport read_probe_report(const std::filesystem::path& path);

// {"decay_class": str, "exponent": real|null, "fit_quality": real|null,
//  "tail_norms": [[l, value], ...]}
void write_smoothness_report(const std::filesystem::path& path, const SmoothnessReport& report);

// {"ratios": [[t, worst], ...], "envelope": [[t, eta], ...]}
void write_quasisymmetry_report(const std::filesystem::path& path,
                                const QuasiSymmetryReport& report);

void write_riesz_csv(const std::filesystem::path& path, const std::vector<RieszNormRow>& rows);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);
void write_cauchy_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<cplx, cplx>>& points_and_values);

} // namespace laurent

// Command-line front end: file I/O plus the packaged experiments.
//
// Exit codes: 0 success, 2 parse/config error, 3 guard violation,
// 4 numerical inconsistency (including incomplete probes and partially
// failed sweeps).

#include "laurent/cauchy.hpp"
#include "laurent/domain.hpp"
#include "laurent/errors.hpp"
#include "laurent/experiments.hpp"
#include "laurent/fourier.hpp"
#include "laurent/io.hpp"
#include "laurent/phi.hpp"
#include "laurent/split.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace laurent;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInconsistency = 4;

struct Options {
    std::string command;
    int n = 256;
    std::uint64_t seed = 0;
    std::string in_path;
    std::string out_path;
    std::string inner_path;   // tangent-split second trace
    std::string coeffs_path;  // domain file
    std::vector<double> radii;
    std::vector<double> target{1.0, 0.0};
    std::vector<double> direction{1.0, 0.0};
    std::vector<int> degrees;
    double inner_radius = 0.25;
    long long budget = 100000;
    std::string variant = "circle";
    bool inverse = false;
};

void check_config_grid(int n) {
    if (n < 16 || n > 65536 || !is_power_of_two(n))
        throw guard_error("grid size must be a power of two in [16, 65536], got " +
                          std::to_string(n));
}

cplx to_cplx(const std::vector<double>& v, const char* what) {
    if (v.size() != 2) throw guard_error(std::string(what) + " expects two numbers: re im");
    return {v[0], v[1]};
}

std::filesystem::path with_suffix(const std::string& base, const char* tag) {
    std::filesystem::path p(base);
    std::filesystem::path out = p.parent_path() / p.stem();
    out += tag;
    out += p.extension().empty() ? std::filesystem::path(".json") : p.extension();
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw guard_error(message);
}

int run_split(const Options& opt) {
    require(!opt.in_path.empty(), "split: --in is required");
    require(!opt.out_path.empty(), "split: --out is required");
    const BoundarySamples samples = read_samples(opt.in_path);
    const auto [g, h] = split(analyze(samples));
    write_spectrum(with_suffix(opt.out_path, ".g"), g);
    write_spectrum(with_suffix(opt.out_path, ".h"), h);
    return kExitOk;
}

int run_conj_split(const Options& opt) {
    require(!opt.in_path.empty(), "conj-split: --in is required");
    require(!opt.out_path.empty(), "conj-split: --out is required");
    const BoundarySamples samples = read_samples(opt.in_path);
    const ConjugateParts parts = conjugate_split(analyze(samples));
    write_spectrum(with_suffix(opt.out_path, ".g"), parts.g);
    write_spectrum(with_suffix(opt.out_path, ".h"), parts.h);
    return kExitOk;
}

int run_phi(const Options& opt) {
    require(!opt.in_path.empty(), "phi: --in is required");
    require(!opt.out_path.empty(), "phi: --out is required");
    if (opt.variant == "circle") {
        const LaurentSpectrum s = read_spectrum(opt.in_path);
        write_spectrum(opt.out_path, opt.inverse ? phi_circle_inverse(s) : phi_circle(s));
    } else if (opt.variant == "disc") {
        const DiscFunction f = read_disc_function(opt.in_path);
        write_spectrum(opt.out_path, opt.inverse ? phi_disc_inverse(f) : phi_disc(f));
    } else if (opt.variant == "exterior") {
        const ExteriorFunction f = read_exterior_function(opt.in_path);
        write_spectrum(opt.out_path, opt.inverse ? phi_exterior_inverse(f) : phi_exterior(f));
    } else {
        throw guard_error("phi: --variant must be circle, disc or exterior");
    }
    return kExitOk;
}

int run_classify(const Options& opt) {
    require(!opt.in_path.empty(), "classify: --in is required");
    require(!opt.out_path.empty(), "classify: --out is required");
    if (std::filesystem::is_directory(opt.in_path)) {
        const std::vector<SweepRow> rows = classify_sweep(opt.in_path);
        write_sweep_csv(opt.out_path, rows);
        for (const auto& row : rows)
            if (!row.error.empty()) return kExitInconsistency; // partial failure
        return kExitOk;
    }
    write_smoothness_report(opt.out_path, classify_smoothness(read_spectrum(opt.in_path)));
    return kExitOk;
}

int run_cauchy(const Options& opt) {
    require(!opt.in_path.empty(), "cauchy: --in is required");
    require(!opt.out_path.empty(), "cauchy: --out is required");
    require(!opt.target.empty() && opt.target.size() % 2 == 0,
            "cauchy: --target expects re im pairs");
    const BoundarySamples samples = read_samples(opt.in_path);
    const ParamCurve circle = ParamCurve::unit_circle(samples.grid());
    std::vector<std::pair<cplx, cplx>> rows;
    for (std::size_t i = 0; i + 1 < opt.target.size(); i += 2) {
        const cplx z{opt.target[i], opt.target[i + 1]};
        rows.emplace_back(z, cauchy(circle, samples, z));
    }
    write_cauchy_csv(opt.out_path, rows);
    return kExitOk;
}

int run_jump_check(const Options& opt) {
    require(!opt.in_path.empty(), "jump-check: --in is required");
    require(!opt.out_path.empty(), "jump-check: --out is required");
    const double defect = split_consistency(read_samples(opt.in_path));
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw io_error("cannot open " + opt.out_path);
    out << "{\"defect\": " << fmt17(defect) << "}\n";
    return kExitOk;
}

int run_tangent_split(const Options& opt) {
    require(!opt.in_path.empty(), "tangent-split: --in (outer trace) is required");
    require(!opt.inner_path.empty(), "tangent-split: --inner (inner trace) is required");
    require(!opt.out_path.empty(), "tangent-split: --out is required");
    const BoundarySamples outer = read_samples(opt.in_path);
    const BoundarySamples inner = read_samples(opt.inner_path);
    const TangentDomain domain(opt.inner_radius, outer.grid(), inner.grid());
    const TangentDecomposition parts = tangent_split(domain, outer, inner);
    write_spectrum(with_suffix(opt.out_path, ".g"), parts.g);
    write_spectrum(with_suffix(opt.out_path, ".h"), parts.h);
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw io_error("cannot open " + opt.out_path);
    out << "{\"inner_center\": [" << fmt17(parts.inner_center.real()) << ", "
        << fmt17(parts.inner_center.imag()) << "], \"inner_radius\": "
        << fmt17(parts.inner_radius) << ", \"defect\": " << fmt17(parts.defect) << "}\n";
    return kExitOk;
}

int run_probe_tangent(const Options& opt) {
    require(!opt.in_path.empty(), "probe-tangent: --in is required");
    require(!opt.out_path.empty(), "probe-tangent: --out is required");
    std::vector<double> radii = opt.radii;
    if (radii.empty())
        for (int k = 3; k <= 10; ++k) radii.push_back(std::ldexp(1.0, -k));

    int max_grid = 1 << 16;
    if (const char* cap = std::getenv("TOOL_MAX_N")) {
        try {
            max_grid = std::stoi(cap);
        } catch (const std::exception&) {
            throw guard_error("TOOL_MAX_N is not an integer");
        }
    }

    const BoundarySamples samples = read_samples(opt.in_path);
    const ParamCurve circle = ParamCurve::unit_circle(samples.grid());
    const ProbeReport report =
        radial_probe(circle, samples, to_cplx(opt.target, "--target"),
                     to_cplx(opt.direction, "--direction"), radii, max_grid);
    write_probe_report(opt.out_path, report);
    return report.incomplete ? kExitInconsistency : kExitOk;
}

int run_riesz_norm(const Options& opt) {
    require(!opt.out_path.empty(), "riesz-norm: --out is required");
    std::vector<int> degrees = opt.degrees;
    if (degrees.empty())
        for (int d = 8; d <= 1024; d *= 2) degrees.push_back(d);
    write_riesz_csv(opt.out_path, riesz_norm_experiment(degrees, opt.seed));
    return kExitOk;
}

int run_welding_check(const Options& opt) {
    require(!opt.coeffs_path.empty(), "welding-check: --coeffs (domain file) is required");
    require(!opt.in_path.empty(), "welding-check: --in (homeomorphism file) is required");
    require(!opt.out_path.empty(), "welding-check: --out is required");
    const JordanDomain domain = read_domain(opt.coeffs_path);
    const CircleHomeomorphism delta = read_homeomorphism(opt.in_path);
    write_homeomorphism(opt.out_path, welding_compose(domain, delta));
    return kExitOk;
}

int run_qs_estimate(const Options& opt) {
    require(!opt.in_path.empty(), "qs-estimate: --in is required");
    require(!opt.out_path.empty(), "qs-estimate: --out is required");
    const CircleHomeomorphism h = read_homeomorphism(opt.in_path);
    write_quasisymmetry_report(opt.out_path, quasisymmetry_estimate(h, opt.budget));
    return kExitOk;
}

void emit_error(const std::string& command, const char* kind, const std::string& message) {
    std::cerr << "{\"command\": \"" << json_escape(command) << "\", \"kind\": \"" << kind
              << "\", \"error\": \"" << json_escape(message) << "\"}\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary decompositions for analytic function spaces"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> commands = {
        "split",        "conj-split",   "phi",        "classify",      "cauchy", "jump-check",
        "tangent-split", "probe-tangent", "riesz-norm", "welding-check", "qs-estimate"};

    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--n", opt.n, "grid size (power of two in [16, 65536])");
        sub->add_option("--seed", opt.seed, "RNG seed (default 0)");
        sub->add_option("--in", opt.in_path, "input file (or directory for classify)");
        sub->add_option("--out", opt.out_path, "output file");
        sub->add_option("--radii", opt.radii, "probe radii, decreasing");
        sub->add_option("--coeffs", opt.coeffs_path, "domain coefficient file");
        sub->add_option("--target", opt.target, "target point: re im")->expected(-1);
        sub->add_option("--direction", opt.direction, "approach direction: re im")->expected(2);
        sub->add_option("--degrees", opt.degrees, "degree list for riesz-norm");
        sub->add_option("--inner", opt.inner_path, "inner boundary trace (tangent-split)");
        sub->add_option("--r", opt.inner_radius, "inner circle radius (tangent-split)");
        sub->add_option("--budget", opt.budget, "triple budget (qs-estimate)");
        sub->add_option("--variant", opt.variant, "phi variant: circle|disc|exterior");
        sub->add_flag("--inverse", opt.inverse, "apply the inverse map (phi)");
        sub->callback([&opt, name] { opt.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        check_config_grid(opt.n);
        if (opt.command == "split") return run_split(opt);
        if (opt.command == "conj-split") return run_conj_split(opt);
        if (opt.command == "phi") return run_phi(opt);
        if (opt.command == "classify") return run_classify(opt);
        if (opt.command == "cauchy") return run_cauchy(opt);
        if (opt.command == "jump-check") return run_jump_check(opt);
        if (opt.command == "tangent-split") return run_tangent_split(opt);
        if (opt.command == "probe-tangent") return run_probe_tangent(opt);
        if (opt.command == "riesz-norm") return run_riesz_norm(opt);
        if (opt.command == "welding-check") return run_welding_check(opt);
        if (opt.command == "qs-estimate") return run_qs_estimate(opt);
        emit_error(opt.command, "parse", "unknown command");
        return kExitParse;
    } catch (const io_error& e) {
        emit_error(opt.command, "parse", e.what());
        return kExitParse;
    } catch (const guard_error& e) {
        emit_error(opt.command, "guard", e.what());
        return kExitGuard;
    } catch (const inconsistency_error& e) {
        emit_error(opt.command, "inconsistency", e.what());
        return kExitInconsistency;
    } catch (const std::exception& e) {
        emit_error(opt.command, "error", e.what());
        return kExitInconsistency;
    }
}

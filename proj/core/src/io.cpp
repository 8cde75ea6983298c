#include "laurent/io.hpp"

#include "laurent/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

namespace laurent {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw io_error("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void store_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw io_error("write failed for " + path.string());
}

cplx parse_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw io_error(std::string(what) + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string pair_str(cplx z) {
    return "[" + fmt17(z.real()) + ", " + fmt17(z.imag()) + "]";
}

int parse_grid_size(const json& j, const char* what) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw io_error(std::string(what) + ": missing integer field \"n\"");
    return j["n"].get<int>();
}

} // namespace

std::string fmt17(double x) {
    if (!std::isfinite(x)) throw io_error("refusing to serialize a non-finite number");
    if (x == 0.0) x = 0.0; // fold -0 into +0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_samples(const std::filesystem::path& path, const BoundarySamples& samples) {
    std::string out = "{\"n\": " + std::to_string(samples.size()) +
                      ", \"grid\": \"uniform-theta\", \"values\": [";
    for (int j = 0; j < samples.size(); ++j) {
        if (j) out += ", ";
        out += pair_str(samples.value(j));
    }
    out += "]}\n";
    store_text(path, out);
}

BoundarySamples read_samples(const std::filesystem::path& path) {
    const json j = load_json(path);
    const int n = parse_grid_size(j, "sample file");
    if (!j.contains("grid") || j["grid"] != "uniform-theta")
        throw io_error("sample file " + path.string() + ": grid must be \"uniform-theta\"");
    if (!j.contains("values") || !j["values"].is_array())
        throw io_error("sample file " + path.string() + ": missing \"values\" array");
    const auto& vals = j["values"];
    if (static_cast<int>(vals.size()) != n)
        throw io_error("sample file " + path.string() + ": expected exactly " +
                       std::to_string(n) + " value pairs, found " + std::to_string(vals.size()));
    std::vector<cplx> values;
    values.reserve(vals.size());
    for (const auto& v : vals) values.push_back(parse_pair(v, "sample value"));
    try {
        return BoundarySamples(CircleGrid(n), std::move(values));
    } catch (const guard_error& e) {
        throw io_error("sample file " + path.string() + ": " + e.what());
    }
}

namespace {

std::string spectrum_text(int grid_size, const std::map<int, cplx>& entries) {
    std::string out = "{\"n\": " + std::to_string(grid_size) + ", \"coeffs\": {";
    bool first = true;
    for (const auto& [idx, c] : entries) {
        if (c == cplx{}) continue;
        if (!first) out += ", ";
        first = false;
        out += "\"" + std::to_string(idx) + "\": " + pair_str(c);
    }
    out += "}}\n";
    return out;
}

} // namespace

void write_spectrum(const std::filesystem::path& path, const LaurentSpectrum& spectrum) {
    std::map<int, cplx> entries;
    for (int n = spectrum.min_index(); n <= spectrum.max_index(); ++n)
        entries[n] = spectrum.at(n);
    store_text(path, spectrum_text(spectrum.grid_size(), entries));
}

void write_spectrum(const std::filesystem::path& path, const DiscFunction& f) {
    std::map<int, cplx> entries;
    for (int n = 0; n <= f.max_index(); ++n) entries[n] = f.at(n);
    store_text(path, spectrum_text(f.grid_size(), entries));
}

void write_spectrum(const std::filesystem::path& path, const ExteriorFunction& f) {
    std::map<int, cplx> entries;
    for (int n = f.min_index(); n < 0; ++n) entries[n] = f.at(n);
    store_text(path, spectrum_text(f.grid_size(), entries));
}

LaurentSpectrum read_spectrum(const std::filesystem::path& path) {
    const json j = load_json(path);
    const int n = parse_grid_size(j, "spectrum file");
    if (!j.contains("coeffs") || !j["coeffs"].is_object())
        throw io_error("spectrum file " + path.string() + ": missing \"coeffs\" object");
    try {
        LaurentSpectrum s(n);
        for (const auto& [key, value] : j["coeffs"].items()) {
            int idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw io_error("spectrum file " + path.string() + ": bad index \"" + key + "\"");
            }
            s.set(idx, parse_pair(value, "spectrum coefficient"));
        }
        return s;
    } catch (const guard_error& e) {
        throw io_error("spectrum file " + path.string() + ": " + e.what());
    }
}

DiscFunction read_disc_function(const std::filesystem::path& path) {
    const LaurentSpectrum s = read_spectrum(path);
    for (int n = s.min_index(); n < 0; ++n)
        if (s.at(n) != cplx{})
            throw io_error("spectrum file " + path.string() +
                           " carries negative indices; not a disc function");
    DiscFunction f(s.grid_size());
    for (int n = 0; n <= s.max_index(); ++n) f.set(n, s.at(n));
    return f;
}

ExteriorFunction read_exterior_function(const std::filesystem::path& path) {
    const LaurentSpectrum s = read_spectrum(path);
    for (int n = 0; n <= s.max_index(); ++n)
        if (s.at(n) != cplx{})
            throw io_error("spectrum file " + path.string() +
                           " carries nonnegative indices; not an exterior function");
    ExteriorFunction f(s.grid_size());
    for (int n = s.min_index(); n < 0; ++n) f.set(n, s.at(n));
    return f;
}

void write_domain(const std::filesystem::path& path, const JordanDomain& domain) {
    std::string out = "{\"coeffs\": [";
    const auto& c = domain.map_coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += ", ";
        out += pair_str(c[k]);
    }
    out += "], \"offset\": " + pair_str(domain.center_offset()) + "}\n";
    store_text(path, out);
}

JordanDomain read_domain(const std::filesystem::path& path) {
    const json j = load_json(path);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw io_error("domain file " + path.string() + ": missing \"coeffs\" array");
    std::vector<cplx> coeffs;
    for (const auto& v : j["coeffs"]) coeffs.push_back(parse_pair(v, "domain coefficient"));
    cplx offset{};
    if (j.contains("offset")) offset = parse_pair(j["offset"], "domain offset");
    try {
        return make_polynomial_domain(std::move(coeffs), offset);
    } catch (const guard_error& e) {
        throw io_error("domain file " + path.string() + ": " + e.what());
    }
}

void write_homeomorphism(const std::filesystem::path& path, const CircleHomeomorphism& h) {
    const int n = h.size();
    CircleGrid grid(n);
    std::string out = "{\"theta\": [";
    for (int j = 0; j < n; ++j) {
        if (j) out += ", ";
        out += fmt17(grid.node(j));
    }
    out += "], \"psi\": [";
    for (int j = 0; j < n; ++j) {
        if (j) out += ", ";
        out += fmt17(h.psi(j));
    }
    out += "], \"orientation\": \"";
    out += (h.orientation() == CircleHomeomorphism::Orientation::preserving) ? "preserving"
                                                                             : "reversing";
    out += "\"}\n";
    store_text(path, out);
}

CircleHomeomorphism read_homeomorphism(const std::filesystem::path& path) {
    const json j = load_json(path);
    if (!j.contains("theta") || !j.contains("psi") || !j.contains("orientation"))
        throw io_error("homeomorphism file " + path.string() +
                       ": needs \"theta\", \"psi\" and \"orientation\"");
    const auto& theta = j["theta"];
    const auto& psi = j["psi"];
    if (!theta.is_array() || !psi.is_array() || theta.size() != psi.size())
        throw io_error("homeomorphism file " + path.string() + ": theta/psi length mismatch");
    const int n = static_cast<int>(theta.size());
    if (!is_power_of_two(n) || n < 4)
        throw io_error("homeomorphism file " + path.string() +
                       ": table size must be a power of two >= 4");
    CircleGrid grid(n);
    std::vector<double> table(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (!theta[static_cast<std::size_t>(k)].is_number())
            throw io_error("homeomorphism file " + path.string() + ": non-numeric theta");
        if (std::abs(theta[static_cast<std::size_t>(k)].get<double>() - grid.node(k)) > 1e-9)
            throw io_error("homeomorphism file " + path.string() +
                           ": theta must be the uniform grid 2*pi*j/n");
        if (!psi[static_cast<std::size_t>(k)].is_number())
            throw io_error("homeomorphism file " + path.string() + ": non-numeric psi");
        table[static_cast<std::size_t>(k)] = psi[static_cast<std::size_t>(k)].get<double>();
    }
    const std::string orient = j["orientation"].get<std::string>();
    CircleHomeomorphism::Orientation o;
    if (orient == "preserving")
        o = CircleHomeomorphism::Orientation::preserving;
    else if (orient == "reversing")
        o = CircleHomeomorphism::Orientation::reversing;
    else
        throw io_error("homeomorphism file " + path.string() + ": unknown orientation \"" +
                       orient + "\"");
    try {
        return CircleHomeomorphism(std::move(table), o);
    } catch (const guard_error& e) {
        throw io_error("homeomorphism file " + path.string() + ": " + e.what());
    }
}

void write_probe_report(const std::filesystem::path& path, const ProbeReport& report) {
    std::string out = "{\"radii\": [";
    for (std::size_t i = 0; i < report.approach_radii.size(); ++i) {
        if (i) out += ", ";
        out += fmt17(report.approach_radii[i]);
    }
    out += "], \"values\": [";
    for (std::size_t i = 0; i < report.values.size(); ++i) {
        if (i) out += ", ";
        out += pair_str(report.values[i]);
    }
    out += "], \"limit\": ";
    out += report.limit_estimate ? pair_str(*report.limit_estimate) : "null";
    out += ", \"diverges\": ";
    out += report.divergence_flag ? "true" : "false";
    out += ", \"oscillation\": " + fmt17(report.oscillation_measure);
    if (report.incomplete) out += ", \"incomplete\": true";
    out += "}\n";
    store_text(path, out);
}

ProbeReport read_probe_report(const std::filesystem::path& path) {
    const json j = load_json(path);
    ProbeReport report;
    for (const auto& r : j.at("radii")) report.approach_radii.push_back(r.get<double>());
    for (const auto& v : j.at("values")) report.values.push_back(parse_pair(v, "probe value"));
    if (!j.at("limit").is_null()) report.limit_estimate = parse_pair(j["limit"], "probe limit");
    report.divergence_flag = j.at("diverges").get<bool>();
    report.oscillation_measure = j.at("oscillation").get<double>();
    report.incomplete = j.contains("incomplete") && j["incomplete"].get<bool>();
    return report;
}

void write_smoothness_report(const std::filesystem::path& path, const SmoothnessReport& report) {
    std::string out = "{\"decay_class\": \"";
    out += to_string(report.decay_class);
    out += "\", \"exponent\": ";
    out += report.estimated_exponent ? fmt17(*report.estimated_exponent) : "null";
    out += ", \"fit_quality\": ";
    out += report.fit_quality ? fmt17(*report.fit_quality) : "null";
    out += ", \"tail_norms\": [";
    for (std::size_t i = 0; i < report.tail_norms.size(); ++i) {
        if (i) out += ", ";
        out += "[" + std::to_string(report.tail_norms[i].first) + ", " +
               fmt17(report.tail_norms[i].second) + "]";
    }
    out += "]}\n";
    store_text(path, out);
}

void write_quasisymmetry_report(const std::filesystem::path& path,
                                const QuasiSymmetryReport& report) {
    auto pairs = [](const std::vector<std::pair<double, double>>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += "[" + fmt17(v[i].first) + ", " + fmt17(v[i].second) + "]";
        }
        s += "]";
        return s;
    };
    store_text(path, "{\"ratios\": " + pairs(report.sampled_ratios) +
                         ", \"envelope\": " + pairs(report.eta_envelope) + "}\n");
}

void write_riesz_csv(const std::filesystem::path& path, const std::vector<RieszNormRow>& rows) {
    std::string out = "degree,estimated_norm,witness_seed\n";
    for (const auto& row : rows)
        out += std::to_string(row.degree) + "," + fmt17(row.estimated_norm) + "," +
               std::to_string(row.witness_seed) + "\n";
    store_text(path, out);
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    std::string out = "file,decay_class,exponent,fit_quality\n";
    for (const auto& row : rows) {
        out += row.filename + ",";
        if (row.report) {
            out += to_string(row.report->decay_class);
            out += ",";
            if (row.report->estimated_exponent) out += fmt17(*row.report->estimated_exponent);
            out += ",";
            if (row.report->fit_quality) out += fmt17(*row.report->fit_quality);
        } else {
            out += "error,,";
        }
        out += "\n";
    }
    store_text(path, out);
}

void write_cauchy_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<cplx, cplx>>& points_and_values) {
    std::string out = "z_re,z_im,value_re,value_im\n";
    for (const auto& [z, v] : points_and_values)
        out += fmt17(z.real()) + "," + fmt17(z.imag()) + "," + fmt17(v.real()) + "," +
               fmt17(v.imag()) + "\n";
    store_text(path, out);
}

} // namespace laurent

#include "laurent/split.hpp"

#include "laurent/errors.hpp"

#include <cmath>
#include <string>

namespace laurent {

DiscFunction::DiscFunction(int grid_size) : n_(grid_size) {
    if (grid_size < 4 || !is_power_of_two(grid_size))
        throw guard_error("DiscFunction: grid size must be a power of two >= 4");
    c_.assign(static_cast<std::size_t>(n_ / 2), cplx{});
}

DiscFunction::DiscFunction(int grid_size, std::vector<cplx> coefficients)
    : DiscFunction(grid_size) {
    if (coefficients.size() > c_.size())
        throw guard_error("DiscFunction: " + std::to_string(coefficients.size()) +
                          " coefficients exceed index range [0, " + std::to_string(n_ / 2) + ")");
    std::copy(coefficients.begin(), coefficients.end(), c_.begin());
}

cplx DiscFunction::at(int n) const {
    if (n < 0 || n > max_index())
        throw guard_error("DiscFunction: index " + std::to_string(n) + " outside [0, " +
                          std::to_string(n_ / 2) + ")");
    return c_[static_cast<std::size_t>(n)];
}

void DiscFunction::set(int n, cplx value) {
    if (n < 0 || n > max_index())
        throw guard_error("DiscFunction: index " + std::to_string(n) + " outside [0, " +
                          std::to_string(n_ / 2) + ")");
    c_[static_cast<std::size_t>(n)] = value;
}

ExteriorFunction::ExteriorFunction(int grid_size) : n_(grid_size) {
    if (grid_size < 4 || !is_power_of_two(grid_size))
        throw guard_error("ExteriorFunction: grid size must be a power of two >= 4");
    c_.assign(static_cast<std::size_t>(n_ / 2), cplx{});
}

cplx ExteriorFunction::at(int n) const {
    if (n > -1 || n < min_index())
        throw guard_error("ExteriorFunction: index " + std::to_string(n) + " outside [" +
                          std::to_string(min_index()) + ", -1]");
    return c_[static_cast<std::size_t>(-n - 1)];
}

void ExteriorFunction::set(int n, cplx value) {
    if (n > -1 || n < min_index())
        throw guard_error("ExteriorFunction: index " + std::to_string(n) + " outside [" +
                          std::to_string(min_index()) + ", -1]");
    c_[static_cast<std::size_t>(-n - 1)] = value;
}

std::pair<DiscFunction, ExteriorFunction> split(const LaurentSpectrum& spectrum) {
    const int n = spectrum.grid_size();
    DiscFunction g(n);
    ExteriorFunction h(n);
    for (int idx = 0; idx <= spectrum.max_index(); ++idx) g.set(idx, spectrum.at(idx));
    for (int idx = spectrum.min_index(); idx < 0; ++idx) h.set(idx, spectrum.at(idx));
    return {std::move(g), std::move(h)};
}

ConjugateParts conjugate_split(const LaurentSpectrum& spectrum) {
    const int n = spectrum.grid_size();
    DiscFunction g(n);
    DiscFunction h(n); // h(0) = 0 stays
    for (int idx = 0; idx <= spectrum.max_index(); ++idx) g.set(idx, spectrum.at(idx));
    for (int idx = 1; idx <= n / 2 - 1; ++idx) h.set(idx, std::conj(spectrum.at(-idx)));
    return {std::move(g), std::move(h)};
}

cplx eval_disc(const DiscFunction& g, cplx z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw guard_error("eval_disc: |z| = " + std::to_string(std::abs(z)) +
                          " outside the closed unit disc");
    const auto& c = g.coefficients();
    cplx acc{};
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

cplx eval_exterior(const ExteriorFunction& h, cplx z) {
    if (std::abs(z) < 1.0 - 1e-12)
        throw guard_error("eval_exterior: |z| = " + std::to_string(std::abs(z)) +
                          " inside the open unit disc");
    const cplx w = 1.0 / z;
    const auto& c = h.coefficients(); // c[k-1] = a_{-k}
    cplx acc{};
    for (std::size_t j = c.size(); j-- > 0;) acc = (acc + c[j]) * w;
    return acc;
}

LaurentSpectrum embed(const DiscFunction& g) {
    LaurentSpectrum s(g.grid_size());
    for (int n = 0; n <= g.max_index(); ++n) s.set(n, g.at(n));
    return s;
}

LaurentSpectrum embed(const ExteriorFunction& h) {
    LaurentSpectrum s(h.grid_size());
    for (int n = h.min_index(); n < 0; ++n) s.set(n, h.at(n));
    return s;
}

} // namespace laurent

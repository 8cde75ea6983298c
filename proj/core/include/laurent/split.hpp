#pragma once

#include "laurent/fourier.hpp"

#include <utility>
#include <vector>

namespace laurent {

// One-sided spectrum: coefficients a_n, n in [0, N/2), of a power series
// analytic on the unit disc.
class DiscFunction {
public:
    explicit DiscFunction(int grid_size);
    DiscFunction(int grid_size, std::vector<cplx> coefficients);

    int grid_size() const { return n_; }
    int max_index() const { return n_ / 2 - 1; } // inclusive

    cplx at(int n) const;
    void set(int n, cplx value);
    const std::vector<cplx>& coefficients() const { return c_; } // index = n

private:
    int n_;
    std::vector<cplx> c_;
};

// One-sided spectrum: coefficients a_n, n in [-N/2, 0), of a series analytic
// outside the closed unit disc and vanishing at infinity.
class ExteriorFunction {
public:
    explicit ExteriorFunction(int grid_size);

    int grid_size() const { return n_; }
    int min_index() const { return -n_ / 2; }

    cplx at(int n) const;          // n in [-N/2, -1]
    void set(int n, cplx value);
    const std::vector<cplx>& coefficients() const { return c_; } // c_[k-1] = a_{-k}

    // h(infinity) = 0 by construction.
    static cplx at_infinity() { return cplx{}; }

private:
    int n_;
    std::vector<cplx> c_;
};

// f = g + h: index partition of the coefficient table.  The constant term
// goes to the disc part.
std::pair<DiscFunction, ExteriorFunction> split(const LaurentSpectrum& spectrum);

// f = g + conj(h) with both parts analytic on the disc and h(0) = 0:
// g keeps a_n for n >= 0, h carries conj(a_{-n}) at index n >= 1.
struct ConjugateParts {
    DiscFunction g;
    DiscFunction h;
};
ConjugateParts conjugate_split(const LaurentSpectrum& spectrum);

// Horner evaluation of the truncated series.  |z| <= 1 + 1e-12; boundary
// points return the trig-polynomial value of the stored coefficients.
cplx eval_disc(const DiscFunction& g, cplx z);

// Horner evaluation in 1/z.  |z| >= 1 - 1e-12.
cplx eval_exterior(const ExteriorFunction& h, cplx z);

// Two-sided embeddings (the remaining indices are zero).
LaurentSpectrum embed(const DiscFunction& g);
LaurentSpectrum embed(const ExteriorFunction& h);

} // namespace laurent

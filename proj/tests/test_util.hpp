#pragma once

#include "laurent/fourier.hpp"
#include "laurent/split.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

using laurent::cplx;

// Full-mantissa uniform double in [-1, 1).
inline double uniform_pm1(std::mt19937_64& rng) {
    return static_cast<double>(static_cast<long long>(rng() >> 10)) /
           static_cast<double>(1LL << 53);
}

inline cplx random_cplx(std::mt19937_64& rng) {
    const double re = uniform_pm1(rng);
    const double im = uniform_pm1(rng);
    return {re, im};
}

// Dyadic rational k / 2^26 with |k| <= 2^26; products with integers up to
// 2^15 stay exact in double precision.
inline double dyadic(std::mt19937_64& rng) {
    const long long k = static_cast<long long>(rng() % (1ULL << 27)) - (1LL << 26);
    return static_cast<double>(k) / static_cast<double>(1LL << 26);
}

inline cplx dyadic_cplx(std::mt19937_64& rng) {
    const double re = dyadic(rng);
    const double im = dyadic(rng);
    return {re, im};
}

// Random spectrum supported on |n| <= degree (Nyquist coefficient untouched).
inline laurent::LaurentSpectrum random_spectrum(int grid_size, int degree,
                                                std::mt19937_64& rng) {
    laurent::LaurentSpectrum s(grid_size);
    for (int n = -degree; n <= degree; ++n) s.set(n, random_cplx(rng));
    return s;
}

inline double max_coeff_distance(const laurent::LaurentSpectrum& a,
                                 const laurent::LaurentSpectrum& b) {
    double d = 0.0;
    for (int n = a.min_index(); n <= a.max_index(); ++n)
        d = std::max(d, std::abs(a.at(n) - b.at(n)));
    return d;
}

inline double max_value_distance(const laurent::BoundarySamples& a,
                                 const laurent::BoundarySamples& b) {
    double d = 0.0;
    for (int j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a.value(j) - b.value(j)));
    return d;
}

} // namespace testutil

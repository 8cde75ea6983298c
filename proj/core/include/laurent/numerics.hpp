#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace laurent {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.28318530717958647692528676655900577;
inline constexpr double pi = 3.14159265358979323846264338327950288;

constexpr bool is_power_of_two(long long n) {
    return n > 0 && (n & (n - 1)) == 0;
}

// Multiplication by i without a complex multiply (exact in floating point).
inline cplx i_times(cplx z) {
    return {-z.imag(), z.real()};
}

// (i*n)^k for integer n and k >= 0.  The modulus n^k is accumulated by
// repeated multiplication, the phase i^k is applied exactly.
cplx in_power(int n, int k);

// In-place radix-2 Cooley-Tukey transform; `a` must have power-of-two size.
// Forward convention: X_k = sum_j a_j exp(-2*pi*i*j*k/N).  The inverse flag
// flips the twiddle sign; no 1/N scaling is applied in either direction.
void fft_in_place(std::vector<cplx>& a, bool inverse);

// Fixed-order pairwise (cascade) summation.  Deterministic for a given input
// order; used wherever reproducibility of long sums matters.
double pairwise_sum(std::span<const double> xs);
cplx pairwise_sum(std::span<const cplx> xs);

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre polynomial.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre_64();
GaussLegendre gauss_legendre(int n);

// Least-squares line y = slope*x + intercept with R^2 and residual SSE.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double sse = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace laurent

#pragma once

#include "laurent/numerics.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace laurent {

// Uniform sampling grid theta_j = 2*pi*j/N on the unit circle, N a power of
// two, N >= 4.
class CircleGrid {
public:
    explicit CircleGrid(int n);

    int size() const { return n_; }
    double node(int j) const { return two_pi * static_cast<double>(j) / static_cast<double>(n_); }

    friend bool operator==(const CircleGrid& a, const CircleGrid& b) { return a.n_ == b.n_; }

private:
    int n_;
};

// Complex samples of a function on the grid.  All values must be finite.
class BoundarySamples {
public:
    BoundarySamples(CircleGrid grid, std::vector<cplx> values);

    const CircleGrid& grid() const { return grid_; }
    int size() const { return grid_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    cplx value(int j) const { return values_[static_cast<std::size_t>(j)]; }

private:
    CircleGrid grid_;
    std::vector<cplx> values_;
};

// Doubly indexed coefficient table over the symmetric range [-N/2, N/2).
// The index -N/2 exists in storage but analysis always writes zero there,
// keeping d/d(theta) skew-symmetric on analyzed data.
class LaurentSpectrum {
public:
    explicit LaurentSpectrum(int grid_size);
    LaurentSpectrum(int grid_size, const std::map<int, cplx>& coefficients);

    int grid_size() const { return n_; }
    int min_index() const { return -n_ / 2; }
    int max_index() const { return n_ / 2 - 1; } // inclusive

    cplx at(int n) const;
    void set(int n, cplx value);

    const std::vector<cplx>& table() const { return c_; }

private:
    void check_index(int n) const;

    int n_;
    std::vector<cplx> c_; // c_[n + n_/2] holds index n
};

enum class DecayClass { trig_polynomial, super_polynomial, power_law, slow };

const char* to_string(DecayClass c);

struct SmoothnessReport {
    DecayClass decay_class = DecayClass::slow;
    std::optional<double> estimated_exponent; // present iff power_law
    std::optional<double> fit_quality;        // present iff a fit was performed
    std::vector<std::pair<int, double>> tail_norms; // (l, sup_n |n^l c_n|)
};

enum class SeminormFamily { sup, sum, uniform_derivative };

// Discrete Fourier coefficients (1/N) sum_j v_j exp(-i n theta_j), re-indexed
// to the symmetric range.  The Nyquist bin is zeroed.
LaurentSpectrum analyze(const BoundarySamples& samples);

// values_j = sum_n c_n exp(i n theta_j).  Requires grid.size() >= grid_size of
// the spectrum; larger grids zero-pad (exact trigonometric interpolation).
BoundarySamples synthesize(const LaurentSpectrum& spectrum, const CircleGrid& grid);
BoundarySamples synthesize(const LaurentSpectrum& spectrum);

// k-th derivative with respect to theta: c_n <- (i n)^k c_n.
LaurentSpectrum differentiate(const LaurentSpectrum& spectrum, int k);

// Graded seminorms of the C^p / A^p topologies.  l <= 64.
double seminorm(const LaurentSpectrum& spectrum, int l, SeminormFamily family);

// Coefficient-decay diagnostic over the tail |n| >= N/8.
SmoothnessReport classify_smoothness(const LaurentSpectrum& spectrum);

} // namespace laurent

#pragma once

#include "laurent/domain.hpp"
#include "laurent/split.hpp"

#include <functional>

namespace laurent {

// The smoothing isomorphism on circle spectra: c_n <- (i n) c_n for n != 0,
// the mean is kept.
LaurentSpectrum phi_circle(const LaurentSpectrum& s);

// Coefficientwise inverse: c_n <- c_n / (i n) for n != 0, mean kept.
// phi_circle(phi_circle_inverse(s)) is the identity wherever the scalar
// divide/multiply round trip is exact.
LaurentSpectrum phi_circle_inverse(const LaurentSpectrum& s);

// Disc variant: boundary formula i z f'(z) + f(0); the constant term
// survives, higher coefficients scale by (i n).
DiscFunction phi_disc(const DiscFunction& f);
DiscFunction phi_disc_inverse(const DiscFunction& g);

// Exterior variant: i z f'(z); all indices are negative, nothing is kept.
ExteriorFunction phi_exterior(const ExteriorFunction& f);
ExteriorFunction phi_exterior_inverse(const ExteriorFunction& h);

// Term-by-term antiderivative with F(0) = 0.  Throws when the top coefficient
// would leave the index range (re-grid first).
DiscFunction antiderivative_disc(const DiscFunction& f);

// Line integral of f along the straight segment from the domain center to z
// (Gauss-Legendre, 64 nodes).  Requires a star-like domain and z in the
// closed domain.
cplx antiderivative_starlike(const JordanDomain& domain, const std::function<cplx(cplx)>& f,
                             cplx z);

} // namespace laurent

#pragma once

namespace caslab {

/// Li_s(x) = sum_{m>=1} x^m / m^s for s in {2, 3, 4} and |x| <= 1.
/// Direct series; near |x| = 1 enough terms are taken for the m^{-s}
/// tail to drop below 1e-13 (s >= 3). Relative accuracy ~1e-13.
double polylog(int s, double x);

/// zeta(4) = pi^4 / 90.
double zeta4();

/// Modified dilogarithm (1/2) sum_m Gamma(4m-1)/Gamma(2m)^2 z^m/m^3,
/// convergent for 0 <= z < 1/16. Terms evaluated via lgamma.
double tilde_li2(double z);

/// I_m = pi 2^{1-6m} Gamma(4m-1)/Gamma(2m)^2 (alpha^2 + 1/2)^{1/2 - 2m},
/// the residue evaluation of the short-distance frequency integrals.
double appendix_e_Im(int m, double alpha_sq);

}  // namespace caslab

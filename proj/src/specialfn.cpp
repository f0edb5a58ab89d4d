#include "caslab/specialfn.hpp"

#include <cmath>
#include <stdexcept>

namespace caslab {

double polylog(int s, double x) {
  if (s < 2 || s > 4) throw std::domain_error("polylog: order must be in {2, 3, 4}");
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("polylog: |x| must be <= 1");
  if (x == 0.0) return 0.0;

  // tail of the power-series part is bounded by |x|^{m+1}/((1-|x|) m^s);
  // at |x| = 1 the m^{-s} tail alone must drop below tol, which limits how
  // tight the lower orders can be pushed by direct summation
  const double tol = (s >= 4) ? 1e-15 : 1e-13;
  double sum = 0.0, comp = 0.0;
  double xp = 1.0;
  const long max_terms = (s >= 4) ? 200000 : (s == 3) ? 3000000 : 50000000;
  for (long m = 1; m <= max_terms; ++m) {
    xp *= x;
    const double t = xp / (std::pow(static_cast<double>(m), s));
    const double y = t - comp;
    const double u = sum + y;
    comp = (u - sum) - y;
    sum = u;
    const double ax = std::abs(x);
    double tail;
    if (ax < 1.0) {
      tail = std::abs(t) * ax / (1.0 - ax);
    } else {
      tail = std::pow(static_cast<double>(m), 1.0 - s) / (s - 1.0);
    }
    if (tail < tol * std::max(std::abs(sum), 1e-300)) break;
  }
  return sum;
}

double zeta4() { return std::pow(M_PI, 4) / 90.0; }

double tilde_li2(double z) {
  if (!(z >= 0.0) || z > (1.0 / 16.0) * (1.0 - 1e-9)) {
    throw std::domain_error("tilde_li2: z must lie in [0, 1/16)");
  }
  if (z == 0.0) return 0.0;
  const double lz = std::log(z);
  double sum = 0.0;
  for (int m = 1; m <= 4000; ++m) {
    const double lt = std::lgamma(4.0 * m - 1.0) - 2.0 * std::lgamma(2.0 * m) + m * lz -
                      3.0 * std::log(static_cast<double>(m));
    const double t = 0.5 * std::exp(lt);
    sum += t;
    if (t < 1e-16 * sum) break;
  }
  return sum;
}

double appendix_e_Im(int m, double alpha_sq) {
  if (m < 1) throw std::domain_error("appendix_e_Im: m must be >= 1");
  const double x = alpha_sq + 0.5;
  if (!(x > 0.0)) throw std::domain_error("appendix_e_Im: alpha^2 + 1/2 must be > 0");
  const double lt = std::log(M_PI) + (1.0 - 6.0 * m) * std::log(2.0) +
                    std::lgamma(4.0 * m - 1.0) - 2.0 * std::lgamma(2.0 * m) +
                    (0.5 - 2.0 * m) * std::log(x);
  return std::exp(lt);
}

}  // namespace caslab

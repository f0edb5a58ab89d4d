#include "caslab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "caslab/constants.hpp"

namespace caslab {

namespace {
constexpr int kMaxOrder = 512;

QuadRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  jacobi.diagonal() = diag;
  if (n > 1) {
    jacobi.diagonal(1) = offdiag;
    jacobi.diagonal(-1) = offdiag;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadRule rule;
  rule.nodes = es.eigenvalues().array();
  rule.weights = mu0 * es.eigenvectors().row(0).array().square();
  return rule;
}

void check_order(int order, int min_order) {
  if (order < min_order) throw std::invalid_argument("quadrature order too small");
  if (order > kMaxOrder) throw std::invalid_argument("quadrature order exceeds supported maximum");
}

}  // namespace

void validate(const QuadratureSettings& s) {
  if (s.radial_order < 4 || s.angular_order < 4) {
    throw std::invalid_argument("QuadratureSettings: orders must be >= 4");
  }
  if (s.radial_order > kMaxOrder || s.angular_order > kMaxOrder) {
    throw std::invalid_argument("QuadratureSettings: order exceeds supported maximum");
  }
  if (!(s.target_rel_err > 0.0 && s.target_rel_err < 0.1)) {
    throw std::invalid_argument("QuadratureSettings: target_rel_err must be in (0, 0.1)");
  }
}

void validate(const MatsubaraSettings& s) {
  if (!(s.xi0_fraction > 0.0 && s.xi0_fraction <= 0.1)) {
    throw std::invalid_argument("MatsubaraSettings: xi0_fraction must be in (0, 0.1]");
  }
  if (!(s.tail_rel_tol > 0.0)) {
    throw std::invalid_argument("MatsubaraSettings: tail_rel_tol must be > 0");
  }
  if (s.max_terms < 4) throw std::invalid_argument("MatsubaraSettings: max_terms too small");
}

QuadRule gauss_laguerre_nodes(int order) {
  check_order(order, 2);
  Eigen::VectorXd diag(order), off(order - 1);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < order; ++k) off[k - 1] = static_cast<double>(k);
  return golub_welsch(diag, off, 1.0);
}

QuadRule gauss_legendre_nodes(int order, double a, double b) {
  check_order(order, 2);
  if (!(a < b)) throw std::invalid_argument("gauss_legendre_nodes: need a < b");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order), off(order - 1);
  for (int k = 1; k < order; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  QuadRule rule = golub_welsch(diag, off, 2.0);
  rule.nodes = 0.5 * (b - a) * (rule.nodes + 1.0) + a;
  rule.weights *= 0.5 * (b - a);
  return rule;
}

double matsubara_sum(const std::function<double(int, double)>& term,
                     const MatsubaraSettings& settings, double temperature) {
  validate(settings);
  if (!(temperature > 0.0)) throw std::domain_error("matsubara_sum: temperature must be > 0");

  const double xi1 = 2.0 * M_PI * k_boltzmann * temperature / hbar;
  double sum = 0.0, comp = 0.0;  // Kahan
  std::vector<double> last;      // |t| of the last nonzero terms
  int zero_run = 0;

  for (int m = 0; m < settings.max_terms; ++m) {
    const double xi = (m == 0) ? settings.xi0_fraction * xi1 : m * xi1;
    const double weight = (m == 0) ? 0.5 : 1.0;
    const double t = weight * term(m, xi);

    const double y = t - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;

    if (t == 0.0) {
      if (++zero_run >= 3 && m >= 3) return sum;
      continue;
    }
    zero_run = 0;
    last.push_back(std::abs(t));
    if (last.size() > 3) last.erase(last.begin());

    if (m >= 3 && last.size() == 3) {
      const double r = std::max(last[2] / last[1], last[1] / last[0]);
      if (r < 1.0) {
        const double tail = last[2] * r / (1.0 - r);
        if (tail <= settings.tail_rel_tol * std::abs(sum)) return sum;
      }
    }
  }
  const double tail = last.empty() ? 0.0 : last.back();
  throw NumericError("matsubara_sum: no convergence within max_terms", sum, tail);
}

double richardson_limit(const std::vector<double>& values, double ratio, double* err_estimate) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw std::invalid_argument("richardson_limit: need at least two values");
  if (!(ratio > 1.0)) throw std::invalid_argument("richardson_limit: ratio must be > 1");

  // growing first differences signal a non-convergent ladder
  double prev_diff = 0.0;
  for (int k = 1; k < n; ++k) {
    const double diff = std::abs(values[k] - values[k - 1]);
    if (k >= 2 && diff > 4.0 * prev_diff && diff > 1e-13 * std::abs(values[k])) {
      throw NumericError("richardson_limit: oscillating differences", values[n - 1], diff);
    }
    prev_diff = std::max(diff, 1e-300);
  }

  std::vector<double> row(values);
  double prev_diag = row[0];
  double err = std::abs(row[n - 1] - row[n - 2]);
  for (int j = 1; j < n; ++j) {
    const double f = std::pow(ratio, j) - 1.0;
    for (int k = n - 1; k >= j; --k) {
      row[k] = row[k] + (row[k] - row[k - 1]) / f;
    }
    err = std::abs(row[n - 1] - prev_diag);
    prev_diag = row[n - 1];
  }
  if (err_estimate) *err_estimate = err;
  return row[n - 1];
}

}  // namespace caslab

#pragma once

#include <utility>
#include <vector>

namespace caslab {

/// Single-resonance oscillator parameters, all in rad/s.
struct DrudeLorentzParams {
  double omega0 = 0.0;   // transverse resonance frequency
  double omega_p = 0.0;  // plasma frequency
  double gamma0 = 0.0;   // absorption parameter
};

/// A layer material evaluated on the positive imaginary frequency axis,
/// where the permittivity is real and >= 1.
///
/// PerfectMirror is a sentinel: its permittivity is never evaluated;
/// reflection off it is short-circuited in the stack recursion.
class PermittivityModel {
 public:
  enum class Kind { Vacuum, PerfectMirror, DrudeLorentz, Tabulated };

  static PermittivityModel vacuum();
  static PermittivityModel perfect_mirror();
  static PermittivityModel drude_lorentz(const DrudeLorentzParams& p);
  /// points: (xi [rad/s], eps) pairs, strictly increasing in xi, eps >= 1.
  static PermittivityModel tabulated(std::vector<std::pair<double, double>> points);

  Kind kind() const { return kind_; }
  bool is_vacuum() const { return kind_ == Kind::Vacuum; }
  bool is_mirror() const { return kind_ == Kind::PerfectMirror; }

  const DrudeLorentzParams& drude() const;
  const std::vector<std::pair<double, double>>& table() const { return table_; }

  /// eps(i xi), real, >= 1. Throws std::domain_error for non-finite or
  /// negative xi and std::logic_error when queried on a PerfectMirror.
  double epsilon_imag_axis(double xi) const;

  /// eps(i 0).
  double epsilon_static() const { return epsilon_imag_axis(0.0); }

 private:
  PermittivityModel() = default;
  Kind kind_ = Kind::Vacuum;
  DrudeLorentzParams dl_;
  std::vector<std::pair<double, double>> table_;
};

double epsilon_imag_axis(const PermittivityModel& model, double xi);
double epsilon_static(const PermittivityModel& model);

}  // namespace caslab

#pragma once

// The radial cut-off l_k used to flatten a Morse function near its critical
// points:
//
//   l_k(t) = k^{1/4}                          on [0, D]
//   l_k(t) = a k^{1/4} t^{-1/2-eps}           on [2D, T0],   T0 = k^{1/2} c0 / 2
//   l_k(t) = 1                                on [T1, inf),  T1 = 3 k^{1/2} c0 / 4
//
// with eps = L / (ln k - 2L), L = ln(3D / 1.4 c0), a = (3D/2)^{1/2+eps}.
// On both transition bands ln l is blended in ln t: its slope is
// -(1/2+eps) gamma, with gamma a smoothstep in a power of the band
// coordinate, so l is C^3 and 0 > l'/l >= -(1/2+eps)/t on (D, T1).

#include <stdexcept>
#include <string>

namespace lpm {

class CutoffThresholdError : public std::invalid_argument {
 public:
  CutoffThresholdError(double min_k, const std::string& what) : std::invalid_argument(what), min_k_(min_k) {}
  double min_k() const { return min_k_; }

 private:
  double min_k_;
};

struct CutoffValue {
  double l = 0;
  double d1 = 0;  // dl/dt
  double d2 = 0;
  double d3 = 0;
  double log_slope = 0;  // l'/l
};

class CutoffProfile {
 public:
  /// Throws CutoffThresholdError when k < (3D/1.4c0)^6 or the two bands
  /// overlap, and std::invalid_argument unless 3D > 1.4 c0 > 0.
  static CutoffProfile build(double k, double D, double c0);

  /// Smallest admissible k for (D, c0).
  static double min_k(double D, double c0);

  double k() const { return k_; }
  double D() const { return D_; }
  double c0() const { return c0_; }
  double eps() const { return eps_; }
  double a() const { return a_; }
  double inner_power() const { return q_inner_; }
  double outer_power() const { return q_outer_; }

  double inner_start() const { return D_; }
  double inner_end() const { return 2 * D_; }
  double outer_start() const { return T0_; }
  double outer_end() const { return T1_; }

  double operator()(double t) const { return eval(t).l; }
  CutoffValue eval(double t) const;

  /// max |l'| D / k^{1/4} on [D, 2D] and max |l'| k^{1/2} on [T0, T1],
  /// sampled at `samples` points per band.
  double eps2_observed(int samples = 4000) const;
  double eps2_outer_observed(int samples = 4000) const;

 private:
  CutoffProfile() = default;

  double k_ = 0, D_ = 0, c0_ = 0;
  double eps_ = 0, a_ = 0;
  double T0_ = 0, T1_ = 0;
  double q_inner_ = 1, q_outer_ = 1;
  double log_top_ = 0;      // ln k^{1/4}
  double log_T0_value_ = 0;  // ln l(T0)
};

/// Integral of S(s^q) over [0, v] for the quintic smoothstep S.
double smoothstep_power_integral(double q, double v);

}  // namespace lpm

#include "lpm/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lpm {

namespace {

double ln_ratio(double D, double c0) { return std::log(3.0 * D / (1.4 * c0)); }

// gamma(v) = S(v^q) and its first two derivatives in v.
struct Blend {
  double g, g1, g2;
};

Blend blend(double q, double v) {
  if (v <= 0) return {0, 0, 0};
  if (v >= 1) return {1, 0, 0};
  const double x = std::pow(v, q);
  const double w = std::pow(v, 3 * q - 2);
  const double S = x * x * x * (x * (6 * x - 15) + 10);
  const double g1 = 30 * q * w * v * (1 - x) * (1 - x);
  const double g2 = 60 * q * q * w * (1 - x) * (1 - 2 * x) + 30 * q * (q - 1) * w * (1 - x) * (1 - x);
  return {S, g1, g2};
}

// q > 1 with smoothstep_power_integral(q, 1) == target, for target in (0, 1/2].
double solve_power(double target) {
  double lo = 1, hi = 2;
  while (smoothstep_power_integral(hi, 1) > target) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (smoothstep_power_integral(mid, 1) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double smoothstep_power_integral(double q, double v) {
  if (v <= 0) return 0;
  v = std::min(v, 1.0);
  auto term = [&](double m) { return std::pow(v, m * q + 1) / (m * q + 1); };
  return 6 * term(5) - 15 * term(4) + 10 * term(3);
}

double CutoffProfile::min_k(double D, double c0) {
  const double r = 3.0 * D / (1.4 * c0);
  return std::max(std::pow(r, 6), 16.0 * D * D / (c0 * c0));
}

CutoffProfile CutoffProfile::build(double k, double D, double c0) {
  if (!(k > 0 && D > 0 && c0 > 0)) throw std::invalid_argument("k, D and c0 must be positive");
  const double L = ln_ratio(D, c0);
  if (!(L > 0)) {
    throw std::invalid_argument("eps is positive only when 3D > 1.4 c0");
  }
  const double mk = min_k(D, c0);
  const bool overlap = std::sqrt(k) * c0 / 2 <= 2 * D;
  if (k < std::pow(3.0 * D / (1.4 * c0), 6) || overlap) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "k = " << k << " is below the admissible threshold; minimal k = " << mk;
    throw CutoffThresholdError(mk, msg.str());
  }
  CutoffProfile p;
  p.k_ = k;
  p.D_ = D;
  p.c0_ = c0;
  p.eps_ = L / (std::log(k) - 2 * L);
  p.a_ = std::pow(1.5 * D, 0.5 + p.eps_);
  p.T0_ = std::sqrt(k) * c0 / 2;
  p.T1_ = 3 * std::sqrt(k) * c0 / 4;
  p.log_top_ = 0.25 * std::log(k);
  const double c = 0.5 + p.eps_;
  p.log_T0_value_ = std::log(p.a_) + p.log_top_ - c * std::log(p.T0_);

  const double inner_mean = (c * std::log(2 * D) - std::log(p.a_)) / (c * std::log(2.0));
  const double outer_mean = p.log_T0_value_ / (c * std::log(1.5));
  p.q_inner_ = solve_power(inner_mean);
  p.q_outer_ = solve_power(1 - outer_mean);
  return p;
}

CutoffValue CutoffProfile::eval(double t) const {
  if (t < 0) throw std::invalid_argument("cut-off evaluated at negative radius");
  const double c = 0.5 + eps_;
  if (t <= D_) return {std::pow(k_, 0.25), 0, 0, 0, 0};
  if (t >= T1_) return {1, 0, 0, 0, 0};

  const double tau = std::log(t);
  double G, G1, G2 = 0, G3 = 0;
  if (t < 2 * D_) {
    const double h = std::log(2.0);
    const double v = (tau - std::log(D_)) / h;
    const Blend b = blend(q_inner_, v);
    G = log_top_ - c * h * smoothstep_power_integral(q_inner_, v);
    G1 = -c * b.g;
    G2 = -c * b.g1 / h;
    G3 = -c * b.g2 / (h * h);
  } else if (t <= T0_) {
    G = std::log(a_) + log_top_ - c * tau;
    G1 = -c;
  } else {
    const double h = std::log(1.5);
    const double v = (tau - std::log(T0_)) / h;
    const Blend b = blend(q_outer_, v);
    const double I1 = smoothstep_power_integral(q_outer_, 1);
    G = c * h * ((1 - I1) - (v - smoothstep_power_integral(q_outer_, v)));
    G1 = -c * (1 - b.g);
    G2 = c * b.g1 / h;
    G3 = c * b.g2 / (h * h);
  }
  const double l = std::exp(G);
  CutoffValue out;
  out.l = l;
  out.log_slope = G1 / t;
  out.d1 = l * G1 / t;
  out.d2 = l * (G1 * G1 + G2 - G1) / (t * t);
  out.d3 = l * (G1 * G1 * G1 + 3 * G1 * G2 - 3 * G1 * G1 + G3 - 3 * G2 + 2 * G1) / (t * t * t);
  return out;
}

double CutoffProfile::eps2_observed(int samples) const {
  double m = 0;
  for (int i = 0; i <= samples; ++i) {
    const double t = D_ * std::pow(2.0, static_cast<double>(i) / samples);
    m = std::max(m, std::abs(eval(t).d1));
  }
  return m * D_ / std::pow(k_, 0.25);
}

double CutoffProfile::eps2_outer_observed(int samples) const {
  double m = 0;
  for (int i = 0; i <= samples; ++i) {
    const double t = T0_ * std::pow(1.5, static_cast<double>(i) / samples);
    m = std::max(m, std::abs(eval(t).d1));
  }
  return m * std::sqrt(k_);
}

}  // namespace lpm

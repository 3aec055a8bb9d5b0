#pragma once

// The deformation h_k of a Morse function, in the rescaled coordinates where
// the metric is k g. Around a critical point p_j with value c_j and signs
// eps_i, inside the ball of radius k^{1/2} c0 about k^{1/2} p_j:
//
//   y = x - k^{1/2} p_j,   R = l_k(|y|) y,
//   h_k(x) = k^{1/2} c_j + k^{-1/2} sum_i eps_i R_i^2.
//
// Elsewhere h_k(x) = k^{1/2} f(x / k^{1/2}) for the background f.

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

#include "lpm/cutoff.hpp"

namespace lpm {

/// Value and derivatives up to third order; third[a](b, c) = d^3/dx_a dx_b dx_c.
struct Jet {
  double value = 0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
  std::vector<Eigen::MatrixXd> third;

  double third_norm() const;  // Frobenius
};

struct CriticalPoint {
  Eigen::VectorXd center;  // base coordinates
  double value = 0;
  std::vector<int> signs;
};

struct MorseModel {
  int dimension = 2;
  std::vector<CriticalPoint> points;
  /// Background f in base coordinates; required outside the balls unless
  /// the model has a single critical point, whose quadratic is then used.
  std::function<Jet(const Eigen::VectorXd&)> background;
};

/// f(x) = c + sum eps_i (x - p)_i^2.
std::function<Jet(const Eigen::VectorXd&)> quadratic_background(const CriticalPoint& p);

class DeformedMorse {
 public:
  /// Throws std::invalid_argument on inconsistent dimensions, signs other
  /// than +-1, or centers closer than 2 c0.
  DeformedMorse(MorseModel model, CutoffProfile profile);

  const MorseModel& model() const { return model_; }
  const CutoffProfile& profile() const { return profile_; }

  /// Throws std::domain_error outside the balls when no background exists.
  Jet jet(const Eigen::VectorXd& x) const;

  /// Ball index containing x, if any.
  std::optional<std::size_t> ball_of(const Eigen::VectorXd& x) const;

 private:
  Jet local_jet(std::size_t j, const Eigen::VectorXd& x) const;

  MorseModel model_;
  CutoffProfile profile_;
};

DeformedMorse deform_morse(const MorseModel& model, const CutoffProfile& profile);

/// Polar sampling around one critical point: radii linear on [0, D] and
/// log-spaced on [D, outer_factor k^{1/2} c0], times unit directions.
struct DeformGrid {
  int inner_radii = 40;
  int outer_radii = 400;
  int directions = 48;
  double outer_factor = 1.2;
};

struct DeformReport {
  double max_grad = 0;
  double eta_observed = 0;       // min over the grid of max(|grad|, sigma_min(Hess))
  double max_third = 0;
  double annulus_grad_ratio = 0;  // max |grad| |y|^{2eps} / D^{1+2eps} on [2D, T0]
  std::size_t points = 0;
};

std::vector<Eigen::VectorXd> deform_grid_points(const DeformedMorse& h, std::size_t critical_point,
                                                const DeformGrid& grid);

DeformReport verify_deform_bounds(const DeformedMorse& h, const std::vector<Eigen::VectorXd>& points);
DeformReport verify_deform_bounds(const DeformedMorse& h, const DeformGrid& grid = {});

double smallest_singular_value(const Eigen::MatrixXd& m);

}  // namespace lpm

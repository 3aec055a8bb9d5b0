#pragma once

// Sampled quantitative transversality checks.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace lpm {

struct GradHess {
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

/// True iff at every point with |grad| < eta the Hessian has smallest
/// singular value >= eta. eta = 0 is vacuously true.
bool check_gradient_transversality(const std::function<GradHess(const Eigen::VectorXd&)>& h,
                                   const std::vector<Eigen::VectorXd>& points, double eta);

/// A complex-valued function on C^n with its real 2 x 2n derivative, columns
/// ordered (Re z_1, Im z_1, Re z_2, ...).
struct ComplexJet {
  std::complex<double> value;
  Eigen::MatrixXd jacobian;
};

using ComplexMap = std::function<ComplexJet(const Eigen::VectorXcd&)>;

/// Real 2 x 2n derivative of a holomorphic function with complex gradient g.
Eigen::MatrixXd holomorphic_jacobian(const Eigen::VectorXcd& g);

/// Smallest singular value of a 2 x m real matrix, m >= 2.
double sigma_min_2xm(const Eigen::MatrixXd& J);

struct EtaCheck {
  bool ok = true;
  double margin = 0;  // min over the grid of max(|f|, sigma_min)
  std::optional<Eigen::VectorXcd> failing_point;
  double failing_value = 0;
  double failing_sigma = 0;
};

/// Passes iff at every grid point |f| >= eta or sigma_min(df) >= eta.
EtaCheck eta_transverse_check(const ComplexMap& f, const std::vector<Eigen::VectorXcd>& grid, double eta);

/// Tensor grid on the closed ball of the given radius in C^n with `per_axis`
/// points on each real axis.
std::vector<Eigen::VectorXcd> ball_grid(int n, double radius, int per_axis);

struct ScalarJet {
  double value = 0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

/// (cos h, sin h) with derivatives by the chain rule.
struct CirclePair {
  ScalarJet cos_part;
  ScalarJet sin_part;
};

CirclePair circle_pair(const ScalarJet& h);

/// (cos h + i sin h) / (cos h - i sin h).
std::complex<double> circle_quotient(double h);
/// |circle_quotient(h) - (cos 2h + i sin 2h)|.
double circle_identity_residual(double h);

struct CirclePairReport {
  double max_value = 0;
  double max_grad = 0;
  double max_hess = 0;
  double max_residual = 0;
};

CirclePairReport circle_pair_report(const std::function<ScalarJet(const Eigen::VectorXd&)>& h,
                                    const std::vector<Eigen::VectorXd>& points);

}  // namespace lpm

#pragma once

// The radial rescaling x -> l(|x|) x and its Jacobian
//   J = l Id + (l'/|x|) x x^T,  det J = l^n (1 + |x| l'/l),
// with eigenvalues l (multiplicity n-1) and l + |x| l'.

#include <Eigen/Dense>

#include <functional>

namespace lpm {

struct RadialProfile {
  std::function<double(double)> l;
  std::function<double(double)> dl;
};

/// l(t) = A t^{-alpha}.
RadialProfile power_profile(double A, double alpha);
RadialProfile constant_profile(double c);

struct RadialReport {
  double l = 0, dl = 0, radius = 0;
  Eigen::MatrixXd jacobian;     // closed form
  Eigen::MatrixXd jacobian_fd;  // central differences
  double jacobian_rel_error = 0;
  double det_closed = 0;
  double det_numeric = 0;       // determinant of the finite-difference Jacobian
  double lambda_min_closed = 0;
  double lambda_max_closed = 0;
  Eigen::VectorXd eigen_numeric;  // sorted, from the finite-difference Jacobian
  double eigen_rel_error = 0;
  double op_norm = 0;
  bool det_bound = false;     // det >= l^n / 4
  bool eigen_bound = false;   // lambda_min >= l / 4
  bool norm_bound = false;    // ||J|| <= l
  bool ok() const { return det_bound && eigen_bound && norm_bound; }
};

/// Throws std::invalid_argument when l' > 0 or l'/l < -3/(4|x|) at |x|, or x = 0.
RadialReport radial_map_check(const RadialProfile& p, const Eigen::VectorXd& x);

Eigen::MatrixXd radial_jacobian(double l, double dl, const Eigen::VectorXd& x);

}  // namespace lpm

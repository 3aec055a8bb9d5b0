#include "lpm/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpm {

RadialProfile power_profile(double A, double alpha) {
  return {[=](double t) { return A * std::pow(t, -alpha); },
          [=](double t) { return -alpha * A * std::pow(t, -alpha - 1); }};
}

RadialProfile constant_profile(double c) {
  return {[=](double) { return c; }, [](double) { return 0.0; }};
}

Eigen::MatrixXd radial_jacobian(double l, double dl, const Eigen::VectorXd& x) {
  const double t = x.norm();
  const long n = x.size();
  Eigen::MatrixXd J = l * Eigen::MatrixXd::Identity(n, n);
  if (t > 0) J += (dl / t) * x * x.transpose();
  return J;
}

RadialReport radial_map_check(const RadialProfile& p, const Eigen::VectorXd& x) {
  const double t = x.norm();
  if (!(t > 0)) throw std::invalid_argument("radial check needs x != 0");
  RadialReport r;
  r.radius = t;
  r.l = p.l(t);
  r.dl = p.dl(t);
  if (r.dl > 0 || r.dl / r.l < -0.75 / t) {
    throw std::invalid_argument("profile violates 0 >= l' and l'/l >= -3/(4t) at t = " + std::to_string(t));
  }
  const long n = x.size();
  r.jacobian = radial_jacobian(r.l, r.dl, x);

  const double h = 1e-6 * std::max(1.0, t);
  auto map = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd { return p.l(y.norm()) * y; };
  r.jacobian_fd.resize(n, n);
  for (long j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(j) = h;
    r.jacobian_fd.col(j) = (map(x + e) - map(x - e)) / (2 * h);
  }
  r.jacobian_rel_error = (r.jacobian_fd - r.jacobian).norm() / r.jacobian.norm();

  r.det_closed = std::pow(r.l, static_cast<double>(n)) * (1 + t * r.dl / r.l);
  r.det_numeric = r.jacobian_fd.determinant();
  const double radial_eig = r.l + t * r.dl;
  r.lambda_min_closed = std::min(r.l, radial_eig);
  r.lambda_max_closed = std::max(r.l, radial_eig);

  const Eigen::MatrixXd sym = 0.5 * (r.jacobian_fd + r.jacobian_fd.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  r.eigen_numeric = es.eigenvalues();
  Eigen::VectorXd expected = Eigen::VectorXd::Constant(n, r.l);
  expected(0) = radial_eig;
  std::sort(expected.data(), expected.data() + n);
  r.eigen_rel_error = (r.eigen_numeric - expected).cwiseAbs().maxCoeff() / r.l;

  r.op_norm = r.jacobian.jacobiSvd().singularValues()(0);
  r.det_bound = r.det_closed >= std::pow(r.l, static_cast<double>(n)) / 4;
  r.eigen_bound = r.lambda_min_closed >= r.l / 4;
  r.norm_bound = r.op_norm <= r.l * (1 + 1e-12);
  return r;
}

}  // namespace lpm

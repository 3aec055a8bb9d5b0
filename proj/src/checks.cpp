#include "lpm/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpm {

bool check_gradient_transversality(const std::function<GradHess(const Eigen::VectorXd&)>& h,
                                   const std::vector<Eigen::VectorXd>& points, double eta) {
  for (const auto& x : points) {
    const GradHess gh = h(x);
    if (gh.grad.norm() >= eta) continue;
    if (gh.hess.jacobiSvd().singularValues().minCoeff() < eta) return false;
  }
  return true;
}

Eigen::MatrixXd holomorphic_jacobian(const Eigen::VectorXcd& g) {
  const long n = g.size();
  Eigen::MatrixXd J(2, 2 * n);
  for (long i = 0; i < n; ++i) {
    J(0, 2 * i) = g(i).real();
    J(0, 2 * i + 1) = -g(i).imag();
    J(1, 2 * i) = g(i).imag();
    J(1, 2 * i + 1) = g(i).real();
  }
  return J;
}

double sigma_min_2xm(const Eigen::MatrixXd& J) {
  if (J.rows() != 2 || J.cols() < 2) throw std::invalid_argument("expected a 2 x m matrix with m >= 2");
  const Eigen::Matrix2d G = J * J.transpose();
  // Cauchy-Binet: det G is the sum of squared 2x2 minors.
  double det = 0;
  for (long i = 0; i < J.cols(); ++i)
    for (long j = i + 1; j < J.cols(); ++j) {
      const double m = J(0, i) * J(1, j) - J(0, j) * J(1, i);
      det += m * m;
    }
  const double hi = 0.5 * G.trace() + std::hypot(0.5 * (G(0, 0) - G(1, 1)), G(0, 1));
  const double small = hi > 0 ? det / hi : 0.0;
  return std::sqrt(small);
}

EtaCheck eta_transverse_check(const ComplexMap& f, const std::vector<Eigen::VectorXcd>& grid, double eta) {
  EtaCheck out;
  out.margin = std::numeric_limits<double>::infinity();
  for (const auto& z : grid) {
    const ComplexJet j = f(z);
    const double v = std::abs(j.value);
    const double s = sigma_min_2xm(j.jacobian);
    out.margin = std::min(out.margin, std::max(v, s));
    if (out.ok && v < eta && !(s >= eta)) {
      out.ok = false;
      out.failing_point = z;
      out.failing_value = v;
      out.failing_sigma = s;
    }
  }
  return out;
}

std::vector<Eigen::VectorXcd> ball_grid(int n, double radius, int per_axis) {
  if (n < 1 || per_axis < 2) throw std::invalid_argument("ball grid needs n >= 1 and >= 2 points per axis");
  const int dims = 2 * n;
  const double h = 2 * radius / (per_axis - 1);
  std::vector<int> idx(static_cast<std::size_t>(dims), 0);
  std::vector<Eigen::VectorXcd> out;
  while (true) {
    Eigen::VectorXd x(dims);
    for (int d = 0; d < dims; ++d) x(d) = -radius + h * idx[static_cast<std::size_t>(d)];
    if (x.norm() <= radius * (1 + 1e-12)) {
      Eigen::VectorXcd z(n);
      for (int i = 0; i < n; ++i) z(i) = {x(2 * i), x(2 * i + 1)};
      out.push_back(z);
    }
    int d = 0;
    while (d < dims && ++idx[static_cast<std::size_t>(d)] == per_axis) idx[static_cast<std::size_t>(d++)] = 0;
    if (d == dims) break;
  }
  return out;
}

CirclePair circle_pair(const ScalarJet& h) {
  const double c = std::cos(h.value);
  const double s = std::sin(h.value);
  const Eigen::MatrixXd gg = h.grad * h.grad.transpose();
  CirclePair out;
  out.cos_part = {c, -s * h.grad, -c * gg - s * h.hess};
  out.sin_part = {s, c * h.grad, -s * gg + c * h.hess};
  return out;
}

std::complex<double> circle_quotient(double h) {
  const std::complex<double> u(std::cos(h), std::sin(h));
  return u / std::conj(u);
}

double circle_identity_residual(double h) {
  return std::abs(circle_quotient(h) - std::complex<double>(std::cos(2 * h), std::sin(2 * h)));
}

CirclePairReport circle_pair_report(const std::function<ScalarJet(const Eigen::VectorXd&)>& h,
                                    const std::vector<Eigen::VectorXd>& points) {
  CirclePairReport r;
  for (const auto& x : points) {
    const ScalarJet j = h(x);
    const CirclePair p = circle_pair(j);
    for (const ScalarJet* part : {&p.cos_part, &p.sin_part}) {
      r.max_value = std::max(r.max_value, std::abs(part->value));
      r.max_grad = std::max(r.max_grad, part->grad.norm());
      r.max_hess = std::max(r.max_hess, part->hess.norm());
    }
    r.max_residual = std::max(r.max_residual, circle_identity_residual(j.value));
  }
  return r;
}

}  // namespace lpm

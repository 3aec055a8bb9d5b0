#include "lpm/morse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpm/rng.hpp"

namespace lpm {

double Jet::third_norm() const {
  double s = 0;
  for (const auto& m : third) s += m.squaredNorm();
  return std::sqrt(s);
}

double smallest_singular_value(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  return m.jacobiSvd().singularValues().minCoeff();
}

std::function<Jet(const Eigen::VectorXd&)> quadratic_background(const CriticalPoint& p) {
  return [p](const Eigen::VectorXd& x) {
    const long n = x.size();
    Jet j;
    const Eigen::VectorXd y = x - p.center;
    j.value = p.value;
    j.grad.resize(n);
    j.hess = Eigen::MatrixXd::Zero(n, n);
    for (long i = 0; i < n; ++i) {
      const double e = p.signs[static_cast<std::size_t>(i)];
      j.value += e * y(i) * y(i);
      j.grad(i) = 2 * e * y(i);
      j.hess(i, i) = 2 * e;
    }
    j.third.assign(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    return j;
  };
}

DeformedMorse::DeformedMorse(MorseModel model, CutoffProfile profile)
    : model_(std::move(model)), profile_(profile) {
  const int n = model_.dimension;
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (model_.points.empty()) throw std::invalid_argument("model needs at least one critical point");
  for (const auto& p : model_.points) {
    if (p.center.size() != n || static_cast<int>(p.signs.size()) != n) {
      throw std::invalid_argument("critical point dimension mismatch");
    }
    for (int s : p.signs)
      if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
  for (std::size_t i = 0; i < model_.points.size(); ++i)
    for (std::size_t j = i + 1; j < model_.points.size(); ++j)
      if ((model_.points[i].center - model_.points[j].center).norm() <= 2 * profile_.c0()) {
        throw std::invalid_argument("critical points must be more than 2 c0 apart");
      }
  if (!model_.background && model_.points.size() == 1) {
    model_.background = quadratic_background(model_.points.front());
  }
}

std::optional<std::size_t> DeformedMorse::ball_of(const Eigen::VectorXd& x) const {
  const double sk = std::sqrt(profile_.k());
  for (std::size_t j = 0; j < model_.points.size(); ++j) {
    if ((x - sk * model_.points[j].center).norm() < sk * profile_.c0()) return j;
  }
  return std::nullopt;
}

Jet DeformedMorse::jet(const Eigen::VectorXd& x) const {
  if (x.size() != model_.dimension) throw std::invalid_argument("point dimension mismatch");
  if (auto j = ball_of(x)) return local_jet(*j, x);
  if (!model_.background) throw std::domain_error("point outside every ball and no background function");
  const double sk = std::sqrt(profile_.k());
  Jet b = model_.background(x / sk);
  b.value *= sk;
  b.hess /= sk;
  for (auto& m : b.third) m /= profile_.k();
  return b;
}

Jet DeformedMorse::local_jet(std::size_t idx, const Eigen::VectorXd& x) const {
  const CriticalPoint& cp = model_.points[idx];
  const long n = x.size();
  const double sk = std::sqrt(profile_.k());
  const double s = 1 / sk;
  const Eigen::VectorXd y = x - sk * cp.center;
  const double t = y.norm();
  const CutoffValue cv = profile_.eval(t);
  const double lam = cv.l;

  // Derivatives of lambda(y) = l(|y|).
  Eigen::VectorXd l1 = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd l2 = Eigen::MatrixXd::Zero(n, n);
  std::vector<Eigen::MatrixXd> l3(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  if (t > 0 && (cv.d1 != 0 || cv.d2 != 0 || cv.d3 != 0)) {
    const Eigen::VectorXd u = y / t;
    l1 = cv.d1 * u;
    l2 = (cv.d2 - cv.d1 / t) * u * u.transpose() + (cv.d1 / t) * Eigen::MatrixXd::Identity(n, n);
    const double A = cv.d3 - 3 * cv.d2 / t + 3 * cv.d1 / (t * t);
    const double B = cv.d2 / t - cv.d1 / (t * t);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long c = 0; c < n; ++c) {
          double v = A * u(a) * u(b) * u(c);
          if (a == b) v += B * u(c);
          if (a == c) v += B * u(b);
          if (b == c) v += B * u(a);
          l3[static_cast<std::size_t>(a)](b, c) = v;
        }
  }
  auto d = [](long i, long j) { return i == j ? 1.0 : 0.0; };

  // R_i = lambda y_i and its derivatives.
  Eigen::VectorXd R = lam * y;
  Eigen::MatrixXd R1(n, n);  // R1(i, a)
  for (long i = 0; i < n; ++i)
    for (long a = 0; a < n; ++a) R1(i, a) = l1(a) * y(i) + lam * d(i, a);
  std::vector<Eigen::MatrixXd> R2(static_cast<std::size_t>(n), Eigen::MatrixXd(n, n));  // R2[i](a, b)
  for (long i = 0; i < n; ++i)
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        R2[static_cast<std::size_t>(i)](a, b) = l2(a, b) * y(i) + l1(a) * d(i, b) + l1(b) * d(i, a);

  Eigen::VectorXd Q1(n);  // dQ/dz_i
  Eigen::VectorXd Q2(n);  // d2Q/dz_i^2 (diagonal)
  double Q = 0;
  for (long i = 0; i < n; ++i) {
    const double e = cp.signs[static_cast<std::size_t>(i)];
    Q += s * e * R(i) * R(i);
    Q1(i) = 2 * s * e * R(i);
    Q2(i) = 2 * s * e;
  }

  Jet out;
  out.value = sk * cp.value + Q;
  out.grad = R1.transpose() * Q1;
  out.hess = Eigen::MatrixXd::Zero(n, n);
  for (long i = 0; i < n; ++i) {
    out.hess += Q2(i) * R1.row(i).transpose() * R1.row(i);
    out.hess += Q1(i) * R2[static_cast<std::size_t>(i)];
  }
  out.third.assign(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        double v = 0;
        for (long i = 0; i < n; ++i) {
          const auto& r2 = R2[static_cast<std::size_t>(i)];
          v += Q2(i) * (r2(a, c) * R1(i, b) + R1(i, a) * r2(b, c) + r2(a, b) * R1(i, c));
          const double r3 = l3[static_cast<std::size_t>(a)](b, c) * y(i) + l2(a, b) * d(i, c) +
                            l2(a, c) * d(i, b) + l2(b, c) * d(i, a);
          v += Q1(i) * r3;
        }
        out.third[static_cast<std::size_t>(a)](b, c) = v;
      }
  return out;
}

DeformedMorse deform_morse(const MorseModel& model, const CutoffProfile& profile) {
  return DeformedMorse(model, profile);
}

std::vector<Eigen::VectorXd> deform_grid_points(const DeformedMorse& h, std::size_t critical_point,
                                                const DeformGrid& grid) {
  const auto& model = h.model();
  const auto& prof = h.profile();
  const long n = model.dimension;
  const Eigen::VectorXd center = std::sqrt(prof.k()) * model.points.at(critical_point).center;

  std::vector<Eigen::VectorXd> dirs;
  if (n == 1) {
    dirs = {Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(1, -1.0)};
  } else if (n == 2) {
    for (int m = 0; m < grid.directions; ++m) {
      const double th = 2 * M_PI * m / grid.directions;
      Eigen::VectorXd v(2);
      v << std::cos(th), std::sin(th);
      dirs.push_back(v);
    }
  } else {
    for (long i = 0; i < n; ++i)
      for (double sgn : {1.0, -1.0}) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
        v(i) = sgn;
        dirs.push_back(v);
      }
    PortableRng rng(0x5eed);
    while (static_cast<int>(dirs.size()) < grid.directions) {
      Eigen::VectorXd v(n);
      for (long i = 0; i < n; ++i) v(i) = rng.normal();
      dirs.push_back(v.normalized());
    }
  }

  std::vector<double> radii;
  for (int i = 1; i <= grid.inner_radii; ++i) radii.push_back(prof.D() * i / grid.inner_radii);
  const double rmax = grid.outer_factor * std::sqrt(prof.k()) * prof.c0();
  for (int j = 1; j <= grid.outer_radii; ++j) {
    radii.push_back(prof.D() * std::pow(rmax / prof.D(), static_cast<double>(j) / grid.outer_radii));
  }

  std::vector<Eigen::VectorXd> pts{center};
  for (double r : radii)
    for (const auto& u : dirs) pts.push_back(center + r * u);
  return pts;
}

DeformReport verify_deform_bounds(const DeformedMorse& h, const std::vector<Eigen::VectorXd>& points) {
  DeformReport rep;
  rep.eta_observed = std::numeric_limits<double>::infinity();
  const auto& prof = h.profile();
  const double sk = std::sqrt(prof.k());
  const double twoeps = 2 * prof.eps();
  for (const auto& x : points) {
    const Jet j = h.jet(x);
    const double g = j.grad.norm();
    rep.max_grad = std::max(rep.max_grad, g);
    rep.eta_observed = std::min(rep.eta_observed, std::max(g, smallest_singular_value(j.hess)));
    rep.max_third = std::max(rep.max_third, j.third_norm());
    if (auto b = h.ball_of(x)) {
      const double t = (x - sk * h.model().points[*b].center).norm();
      if (t >= 2 * prof.D() && t <= prof.outer_start()) {
        rep.annulus_grad_ratio =
            std::max(rep.annulus_grad_ratio, g * std::pow(t, twoeps) / std::pow(prof.D(), 1 + twoeps));
      }
    }
  }
  rep.points = points.size();
  return rep;
}

DeformReport verify_deform_bounds(const DeformedMorse& h, const DeformGrid& grid) {
  std::vector<Eigen::VectorXd> pts;
  for (std::size_t j = 0; j < h.model().points.size(); ++j) {
    auto p = deform_grid_points(h, j, grid);
    pts.insert(pts.end(), p.begin(), p.end());
  }
  return verify_deform_bounds(h, pts);
}

}  // namespace lpm

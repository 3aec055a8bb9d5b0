#pragma once

// The perturbation s(z, w) = p(z) - w - conj(w) q(z) with |q| < 1: solving
// for w on the graph, and choosing a small constant w0 for which
// p - w0 - conj(w0) q is sigma-transverse to 0 over the unit ball.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "lpm/checks.hpp"

namespace lpm {

using cplx = std::complex<double>;

class Polynomial {
 public:
  explicit Polynomial(int vars = 1) : vars_(vars) {}

  int vars() const { return vars_; }
  int degree() const;
  const std::map<std::vector<int>, cplx>& terms() const { return terms_; }

  /// Adds c z^e; throws std::invalid_argument on a bad exponent tuple.
  void add(const std::vector<int>& exponent, cplx c);
  Polynomial scaled(cplx c) const;

  cplx operator()(const Eigen::VectorXcd& z) const;
  Eigen::VectorXcd gradient(const Eigen::VectorXcd& z) const;

 private:
  int vars_;
  std::map<std::vector<int>, cplx> terms_;
};

struct LocalTransInstance {
  Polynomial p;
  Polynomial q;
  double kappa = 0.2;
  double delta = 0.1;
  int pexp = 2;

  /// delta (ln 1/delta)^-pexp
  double sigma() const;
  int vars() const { return p.vars(); }
};

/// Throws std::invalid_argument unless 0 < kappa < 1, 0 < delta < 1/2,
/// pexp >= 1, the variable counts match and the sampled sup of |q| on the
/// 11/10-ball is <= 1 - kappa. Returns the sampled sup of |p|, which is
/// reported rather than enforced.
double validate(const LocalTransInstance& inst, int per_axis = 41);

/// Maximum of |f| over the 11/10-ball grid.
double sampled_sup(const Polynomial& f, int per_axis = 41);

/// w = (p - conj(p) q) / (1 - |q|^2); throws std::domain_error if |q| >= 1.
cplx solve_w(cplx p, cplx q);
cplx solve_w(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z);

/// p(z) - w - conj(w) q(z).
cplx s_residual(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z, cplx w);

/// l(z) = d s / d z along the graph: p'(z) - conj(w(z)) q'(z).
Eigen::VectorXcd graph_gradient(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z);

/// Real 2 x 2n derivative of w(z).
Eigen::MatrixXd dw_dz(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z);

/// The function z -> p(z) - w0 - conj(w0) q(z) with its real derivative.
ComplexMap perturbed_map(const Polynomial& p, const Polynomial& q, cplx w0);

struct CertificateOptions {
  double C = 4;
  int z_per_axis = 0;       // 0: 201 for n = 1, 25 for n = 2
  int verify_per_axis = 0;  // 0: 2 z_per_axis - 1
  int w_per_axis = 401;
  bool allow_refine = true;
};

struct TransversalityCertificate {
  cplx w0;
  double sigma = 0;
  double margin = 0;
  double clearance_area = 0;
  double clearance_ratio = 0;  // clearance_area / (pi delta^2)
  bool area_claim_holds = false;
  int z_per_axis = 0;
  int verify_per_axis = 0;
  int w_per_axis = 0;
  bool refined = false;
  std::size_t sublevel_points = 0;  // grid points in Y
  double p_sup = 0;                  // sampled sup of |p| on the 11/10-ball
};

class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, Eigen::VectorXcd point, double value, double sigma_min,
                      cplx w0)
      : std::runtime_error(what), point_(std::move(point)), value_(value), sigma_min_(sigma_min), w0_(w0) {}
  const Eigen::VectorXcd& point() const { return point_; }
  double value() const { return value_; }
  double sigma_min() const { return sigma_min_; }
  cplx w0() const { return w0_; }

 private:
  Eigen::VectorXcd point_;
  double value_;
  double sigma_min_;
  cplx w0_;
};

/// Throws VerificationFailure when the brute-force check fails after the
/// optional refinement.
TransversalityCertificate find_good_w0(const LocalTransInstance& inst, const CertificateOptions& opts = {});

/// Seeded random instance: degrees <= max_degree, p scaled to sampled sup 1,
/// q scaled to sampled sup (1 - kappa) U(0.2, 1).
LocalTransInstance random_instance(std::uint64_t seed, int vars, int max_degree, double kappa, double delta,
                                   int pexp);

}  // namespace lpm

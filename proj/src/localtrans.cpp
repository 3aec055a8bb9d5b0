#include "lpm/localtrans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpm/rng.hpp"

namespace lpm {

namespace {

cplx ipow(cplx z, int e) {
  cplx r = 1;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// Exact squared Euclidean distance transform of a 1-D sampled function.
void edt_1d(const std::vector<double>& f, std::vector<double>& d) {
  const int n = static_cast<int>(f.size());
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<double> z(static_cast<std::size_t>(n) + 1);
  const double inf = std::numeric_limits<double>::infinity();
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[static_cast<std::size_t>(q)] == inf) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -inf;
      z[1] = inf;
      continue;
    }
    double s;
    while (true) {
      const int p = v[static_cast<std::size_t>(k)];
      s = ((f[static_cast<std::size_t>(q)] + q * q) - (f[static_cast<std::size_t>(p)] + p * p)) / (2.0 * (q - p));
      if (s <= z[static_cast<std::size_t>(k)] && k > 0) {
        --k;
      } else {
        break;
      }
    }
    if (s <= z[static_cast<std::size_t>(k)]) {
      v[static_cast<std::size_t>(k)] = q;
      z[static_cast<std::size_t>(k) + 1] = inf;
      continue;
    }
    ++k;
    v[static_cast<std::size_t>(k)] = q;
    z[static_cast<std::size_t>(k)] = s;
    z[static_cast<std::size_t>(k) + 1] = inf;
  }
  d.assign(static_cast<std::size_t>(n), inf);
  if (k < 0) return;
  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[static_cast<std::size_t>(j) + 1] < q) ++j;
    const int p = v[static_cast<std::size_t>(j)];
    d[static_cast<std::size_t>(q)] = (q - p) * static_cast<double>(q - p) + f[static_cast<std::size_t>(p)];
  }
}

// Squared distances (in cells) to the nearest occupied cell of an m x m grid.
std::vector<double> edt_2d(const std::vector<char>& occupied, int m) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> g(occupied.size());
  for (std::size_t i = 0; i < occupied.size(); ++i) g[i] = occupied[i] ? 0.0 : inf;
  std::vector<double> f(static_cast<std::size_t>(m)), d;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) f[static_cast<std::size_t>(c)] = g[static_cast<std::size_t>(r * m + c)];
    edt_1d(f, d);
    for (int c = 0; c < m; ++c) g[static_cast<std::size_t>(r * m + c)] = d[static_cast<std::size_t>(c)];
  }
  for (int c = 0; c < m; ++c) {
    for (int r = 0; r < m; ++r) f[static_cast<std::size_t>(r)] = g[static_cast<std::size_t>(r * m + c)];
    edt_1d(f, d);
    for (int r = 0; r < m; ++r) g[static_cast<std::size_t>(r * m + c)] = d[static_cast<std::size_t>(r)];
  }
  return g;
}

struct Attempt {
  TransversalityCertificate cert;
  EtaCheck check;
};

Attempt attempt(const LocalTransInstance& inst, double C, int zN, int vN, int wN) {
  const int n = inst.vars();
  const double sigma = inst.sigma();
  const double cs = C * sigma;
  const double E = inst.delta + cs;
  const double h = 2 * E / (wN - 1);

  std::vector<char> occupied(static_cast<std::size_t>(wN) * static_cast<std::size_t>(wN), 0);
  std::size_t ycount = 0;
  for (const auto& z : ball_grid(n, 1.1, zN)) {
    const cplx w = solve_w(inst.p, inst.q, z);
    if (graph_gradient(inst.p, inst.q, z).norm() > cs) continue;
    ++ycount;
    const long ix = std::lround((w.real() + E) / h);
    const long iy = std::lround((w.imag() + E) / h);
    if (ix < 0 || iy < 0 || ix >= wN || iy >= wN) continue;
    occupied[static_cast<std::size_t>(iy * wN + ix)] = 1;
  }
  const std::vector<double> d2 = edt_2d(occupied, wN);

  auto center = [&](int ix, int iy) { return cplx(-E + h * ix, -E + h * iy); };
  const double slack = h * std::sqrt(2.0) / 2;
  std::vector<char> is_free(occupied.size(), 0);
  std::vector<char> in_disc(occupied.size(), 0);
  for (int iy = 0; iy < wN; ++iy)
    for (int ix = 0; ix < wN; ++ix) {
      const std::size_t id = static_cast<std::size_t>(iy * wN + ix);
      if (std::abs(center(ix, iy)) >= inst.delta) continue;
      in_disc[id] = 1;
      is_free[id] = std::sqrt(d2[id]) * h - slack > cs;
    }

  // Largest 4-connected free component inside the disc.
  std::vector<int> label(occupied.size(), -1);
  std::size_t best_size = 0;
  int best_label = -1;
  int next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < occupied.size(); ++s) {
    if (!is_free[s] || label[s] >= 0) continue;
    std::size_t size = 0;
    stack.push_back(s);
    label[s] = next;
    while (!stack.empty()) {
      const std::size_t id = stack.back();
      stack.pop_back();
      ++size;
      const int ix = static_cast<int>(id % static_cast<std::size_t>(wN));
      const int iy = static_cast<int>(id / static_cast<std::size_t>(wN));
      const int nb[4][2] = {{ix + 1, iy}, {ix - 1, iy}, {ix, iy + 1}, {ix, iy - 1}};
      for (const auto& p : nb) {
        if (p[0] < 0 || p[1] < 0 || p[0] >= wN || p[1] >= wN) continue;
        const std::size_t j = static_cast<std::size_t>(p[1] * wN + p[0]);
        if (is_free[j] && label[j] < 0) {
          label[j] = next;
          stack.push_back(j);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_label = next;
    }
    ++next;
  }

  std::size_t pick = occupied.size();
  for (std::size_t id = 0; id < occupied.size(); ++id) {
    const bool eligible = best_label >= 0 ? label[id] == best_label : in_disc[id] != 0;
    if (eligible && (pick == occupied.size() || d2[id] > d2[pick])) pick = id;
  }

  Attempt a;
  auto& c = a.cert;
  c.w0 = center(static_cast<int>(pick % static_cast<std::size_t>(wN)),
                static_cast<int>(pick / static_cast<std::size_t>(wN)));
  c.sigma = sigma;
  c.clearance_area = static_cast<double>(best_size) * h * h;
  c.clearance_ratio = c.clearance_area / (M_PI * inst.delta * inst.delta);
  c.area_claim_holds = c.clearance_ratio > 0.9;
  c.z_per_axis = zN;
  c.verify_per_axis = vN;
  c.w_per_axis = wN;
  c.sublevel_points = ycount;

  a.check = eta_transverse_check(perturbed_map(inst.p, inst.q, c.w0), ball_grid(n, 1.0, vN), sigma);
  c.margin = a.check.margin;
  return a;
}

}  // namespace

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    if (c == cplx(0)) continue;
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add(const std::vector<int>& exponent, cplx c) {
  if (static_cast<int>(exponent.size()) != vars_) throw std::invalid_argument("exponent tuple has wrong length");
  for (int e : exponent)
    if (e < 0) throw std::invalid_argument("negative exponent");
  terms_[exponent] += c;
}

Polynomial Polynomial::scaled(cplx c) const {
  Polynomial out(vars_);
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

cplx Polynomial::operator()(const Eigen::VectorXcd& z) const {
  if (z.size() != vars_) throw std::invalid_argument("point dimension mismatch");
  cplx s = 0;
  for (const auto& [e, c] : terms_) {
    cplx t = c;
    for (int i = 0; i < vars_; ++i) t *= ipow(z(i), e[static_cast<std::size_t>(i)]);
    s += t;
  }
  return s;
}

Eigen::VectorXcd Polynomial::gradient(const Eigen::VectorXcd& z) const {
  if (z.size() != vars_) throw std::invalid_argument("point dimension mismatch");
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(vars_);
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < vars_; ++k) {
      const int ek = e[static_cast<std::size_t>(k)];
      if (ek == 0) continue;
      cplx t = c * static_cast<double>(ek);
      for (int i = 0; i < vars_; ++i) t *= ipow(z(i), i == k ? ek - 1 : e[static_cast<std::size_t>(i)]);
      g(k) += t;
    }
  }
  return g;
}

double LocalTransInstance::sigma() const { return delta * std::pow(std::log(1 / delta), -pexp); }

double sampled_sup(const Polynomial& f, int per_axis) {
  double m = 0;
  for (const auto& z : ball_grid(f.vars(), 1.1, per_axis)) m = std::max(m, std::abs(f(z)));
  return m;
}

double validate(const LocalTransInstance& inst, int per_axis) {
  if (!(inst.kappa > 0 && inst.kappa < 1)) throw std::invalid_argument("kappa must lie in (0, 1)");
  if (!(inst.delta > 0 && inst.delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
  if (inst.pexp < 1) throw std::invalid_argument("pexp must be a positive integer");
  if (inst.p.vars() != inst.q.vars()) throw std::invalid_argument("p and q need the same variables");
  if (sampled_sup(inst.q, per_axis) > 1 - inst.kappa + 1e-12) {
    throw std::invalid_argument("sampled sup of |q| exceeds 1 - kappa");
  }
  return sampled_sup(inst.p, per_axis);
}

cplx solve_w(cplx p, cplx q) {
  const double nq = std::norm(q);
  if (!(nq < 1)) throw std::domain_error("|q| >= 1");
  return (p - std::conj(p) * q) / (1 - nq);
}

cplx solve_w(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z) { return solve_w(p(z), q(z)); }

cplx s_residual(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z, cplx w) {
  return p(z) - w - std::conj(w) * q(z);
}

Eigen::VectorXcd graph_gradient(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z) {
  const cplx w = solve_w(p, q, z);
  return p.gradient(z) - std::conj(w) * q.gradient(z);
}

Eigen::MatrixXd dw_dz(const Polynomial& p, const Polynomial& q, const Eigen::VectorXcd& z) {
  const cplx qz = q(z);
  Eigen::Matrix2d M;
  M << 1 + qz.real(), qz.imag(), qz.imag(), 1 - qz.real();
  return M.inverse() * holomorphic_jacobian(graph_gradient(p, q, z));
}

ComplexMap perturbed_map(const Polynomial& p, const Polynomial& q, cplx w0) {
  return [p, q, w0](const Eigen::VectorXcd& z) {
    ComplexJet j;
    j.value = p(z) - w0 - std::conj(w0) * q(z);
    j.jacobian = holomorphic_jacobian(p.gradient(z) - std::conj(w0) * q.gradient(z));
    return j;
  };
}

TransversalityCertificate find_good_w0(const LocalTransInstance& inst, const CertificateOptions& opts) {
  const double p_sup = validate(inst);
  const int n = inst.vars();
  int zN = opts.z_per_axis > 0 ? opts.z_per_axis : (n == 1 ? 201 : 25);
  int vN = opts.verify_per_axis > 0 ? opts.verify_per_axis : 2 * zN - 1;
  int wN = opts.w_per_axis;
  Attempt a = attempt(inst, opts.C, zN, vN, wN);
  if (!a.check.ok && opts.allow_refine) {
    a = attempt(inst, opts.C, 2 * zN - 1, 2 * vN - 1, 2 * wN - 1);
    a.cert.refined = true;
  }
  if (!a.check.ok) {
    throw VerificationFailure("perturbation is not sigma-transverse at a grid point", *a.check.failing_point,
                              a.check.failing_value, a.check.failing_sigma, a.cert.w0);
  }
  a.cert.p_sup = p_sup;
  return a.cert;
}

LocalTransInstance random_instance(std::uint64_t seed, int vars, int max_degree, double kappa, double delta,
                                   int pexp) {
  if (vars < 1 || vars > 2) throw std::invalid_argument("random instances support 1 or 2 variables");
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  PortableRng rng(seed);
  auto random_poly = [&](int deg) {
    Polynomial f(vars);
    for (int a = 0; a <= deg; ++a) {
      if (vars == 1) {
        f.add({a}, {rng.normal(), rng.normal()});
      } else {
        for (int b = 0; a + b <= deg; ++b) f.add({a, b}, {rng.normal(), rng.normal()});
      }
    }
    return f;
  };
  Polynomial p = random_poly(rng.integer(1, max_degree));
  Polynomial q = random_poly(rng.integer(0, max_degree));
  const double q_target = (1 - kappa) * rng.uniform(0.2, 1.0);
  LocalTransInstance inst;
  inst.p = p.scaled(1 / sampled_sup(p));
  inst.q = q.scaled(q_target / sampled_sup(q));
  inst.kappa = kappa;
  inst.delta = delta;
  inst.pexp = pexp;
  return inst;
}

}  // namespace lpm

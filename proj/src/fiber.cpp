#include "lpm/fiber.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lpm {

FiberModel FiberModel::torus() { return FiberModel(FiberKind::Torus, 1); }

FiberModel FiberModel::symplectic_homology(int genus) {
  if (genus < 1) throw std::invalid_argument("symplectic homology model needs genus >= 1");
  return FiberModel(FiberKind::SymplecticHomology, genus);
}

FiberModel FiberModel::punctured_disc(int punctures) {
  if (punctures < 2) throw std::invalid_argument("punctured disc model needs >= 2 punctures");
  return FiberModel(FiberKind::PuncturedDisc, punctures);
}

int FiberModel::genus() const {
  if (!is_homological()) throw std::logic_error("disc model has no genus");
  return param_;
}

int FiberModel::punctures() const {
  if (is_homological()) throw std::logic_error("homology model has no punctures");
  return param_;
}

int FiberModel::dimension() const { return 2 * genus(); }

std::string FiberModel::name() const {
  switch (kind_) {
    case FiberKind::Torus:
      return "torus";
    case FiberKind::SymplecticHomology:
      return "sp(genus=" + std::to_string(param_) + ")";
    case FiberKind::PuncturedDisc:
      return "disc(punctures=" + std::to_string(param_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}

IntMatrix::IntMatrix(int n, std::vector<Integer> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("matrix needs " + std::to_string(n * n) + " entries");
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("dimension mismatch");
  std::vector<Integer> out(v.size());
  for (int i = 0; i < n_; ++i) {
    Integer s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = std::move(s);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  const int n = a.size();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix standard_symplectic_form(int genus) {
  IntMatrix j(2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.size() % 2 != 0 || m.size() == 0) return false;
  const IntMatrix j = standard_symplectic_form(m.size() / 2);
  return m.transpose() * j * m == j;
}

Integer symplectic_pairing(const std::vector<Integer>& u, const std::vector<Integer>& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw std::invalid_argument("dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

// ---------------------------------------------------------------------------

FreeWord canonical_cyclic_word(const FreeWord& w) {
  const FreeWord core = cyclic_reduction(w).second;
  const FreeWord inv = core.inverse();
  const std::size_t n = core.size();
  std::vector<int> best;
  for (const FreeWord* src : {&core, &inv}) {
    const auto& ls = src->letters();
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> rot(ls.begin() + static_cast<long>(k), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(k));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return FreeWord(w.rank(), std::move(best));
}

Cycle with_witness(Cycle c, CurveWitness w) {
  c.witness_ = std::move(w);
  return c;
}

Cycle Cycle::homology(const FiberModel& model, std::vector<Integer> coords) {
  if (!model.is_homological()) throw std::invalid_argument("homology cycle in disc model");
  if (coords.size() != static_cast<std::size_t>(model.dimension())) {
    throw std::invalid_argument("cycle needs " + std::to_string(model.dimension()) +
                                " coordinates, got " + std::to_string(coords.size()));
  }
  Integer g = 0;
  for (const auto& x : coords) g = boost::multiprecision::gcd(g, x);
  if (g != 1) {
    throw std::invalid_argument(g == 0 ? "cycle must be nonzero" : "cycle must be primitive");
  }
  auto first = std::find_if(coords.begin(), coords.end(), [](const Integer& x) { return !x.is_zero(); });
  if (*first < 0) {
    for (auto& x : coords) x = -x;
  }
  Cycle c(model);
  c.coords_ = std::move(coords);
  return c;
}

Cycle Cycle::disc_curve(const FiberModel& model, const FreeWord& word) {
  if (model.is_homological()) throw std::invalid_argument("disc curve in homology model");
  if (word.rank() != model.punctures()) throw std::invalid_argument("curve word rank mismatch");
  Cycle c(model);
  c.word_ = canonical_cyclic_word(word);
  if (c.word_.empty()) throw std::invalid_argument("disc curve word is trivial");
  if (auto range = c.standard_range()) c.witness_ = CurveWitness{Braid(model.punctures()), range->first, range->second};
  return c;
}

Cycle Cycle::standard_curve(const FiberModel& model, int first, int last) {
  const int n = model.punctures();
  if (first < 1 || last > n || first > last) throw std::invalid_argument("puncture range out of bounds");
  std::vector<int> ls;
  for (int i = first; i <= last; ++i) ls.push_back(i);
  return disc_curve(model, FreeWord(n, std::move(ls)));
}

const std::vector<Integer>& Cycle::coords() const {
  if (!model_.is_homological()) throw std::logic_error("disc curve has no coordinates");
  return coords_;
}

const FreeWord& Cycle::word() const {
  if (model_.is_homological()) throw std::logic_error("homology cycle has no word");
  return word_;
}

std::optional<std::pair<int, int>> Cycle::standard_range() const {
  if (model_.is_homological()) return std::nullopt;
  // The canonical form of x_i ... x_j is X_j X_{j-1} ... X_i.
  const auto& ls = word_.letters();
  if (ls.empty() || ls[0] > 0) return std::nullopt;
  for (std::size_t k = 1; k < ls.size(); ++k) {
    if (ls[k] != ls[k - 1] + 1) return std::nullopt;
  }
  return std::make_pair(-ls.back(), -ls.front());
}

std::string Cycle::to_string() const {
  if (!model_.is_homological()) return lpm::to_string(word_);
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

FiberElement FiberElement::identity(const FiberModel& model) {
  if (model.is_homological()) return FiberElement(model, IntMatrix::identity(model.dimension()));
  return FiberElement(model, Braid(model.punctures()));
}

FiberElement FiberElement::matrix(const FiberModel& model, IntMatrix m) {
  if (!model.is_homological()) throw std::invalid_argument("matrix element in disc model");
  if (m.size() != model.dimension()) throw std::invalid_argument("matrix dimension mismatch");
  if (!is_symplectic(m)) {
    throw std::invalid_argument(model.kind() == FiberKind::Torus ? "torus element must have determinant 1"
                                                                 : "matrix is not symplectic");
  }
  return FiberElement(model, std::move(m));
}

FiberElement FiberElement::braid(const FiberModel& model, Braid b) {
  if (model.is_homological()) throw std::invalid_argument("braid element in homology model");
  if (b.strands() != model.punctures()) throw std::invalid_argument("fiber braid strand mismatch");
  return FiberElement(model, std::move(b));
}

const IntMatrix& FiberElement::as_matrix() const { return std::get<IntMatrix>(data_); }
const Braid& FiberElement::as_braid() const { return std::get<Braid>(data_); }

FiberElement FiberElement::inverse() const {
  if (!model_.is_homological()) return FiberElement(model_, as_braid().inverse());
  const IntMatrix j = standard_symplectic_form(model_.genus());
  IntMatrix minus_j = j;
  for (int r = 0; r < j.size(); ++r)
    for (int c = 0; c < j.size(); ++c) minus_j(r, c) = -j(r, c);
  return FiberElement(model_, minus_j * as_matrix().transpose() * j);
}

std::vector<Integer> FiberElement::apply(const std::vector<Integer>& v) const { return as_matrix().apply(v); }

FiberElement operator*(const FiberElement& a, const FiberElement& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("fiber model mismatch");
  if (a.model().is_homological()) return FiberElement(a.model(), a.as_matrix() * b.as_matrix());
  return FiberElement(a.model(), a.as_braid() * b.as_braid());
}

std::string to_string(const FiberElement& g) {
  if (!g.model().is_homological()) return to_string(g.as_braid());
  const IntMatrix& m = g.as_matrix();
  std::string out = "[";
  for (int i = 0; i < m.size(); ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ",";
      out += m(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

bool elem_eq(const FiberElement& a, const FiberElement& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("fiber model mismatch");
  if (a.model().is_homological()) return a.as_matrix() == b.as_matrix();
  return braid_eq(a.as_braid(), b.as_braid());
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::pair<int, int>> range_of(const FreeWord& canonical) {
  const auto& ls = canonical.letters();
  if (ls.empty() || ls[0] > 0) return std::nullopt;
  for (std::size_t k = 1; k < ls.size(); ++k)
    if (ls[k] != ls[k - 1] + 1) return std::nullopt;
  return std::make_pair(-ls.back(), -ls.front());
}

}  // namespace

std::optional<CurveWitness> find_curve_witness(const FreeWord& word, int max_depth) {
  const int n = word.rank();
  if (n < 2) return std::nullopt;
  FreeWord current = canonical_cyclic_word(word);
  if (current.empty()) return std::nullopt;
  Braid pushed(n);  // pushed(word) ~ current

  auto finish = [&](const Braid& b, const std::pair<int, int>& r) {
    return CurveWitness{b.inverse(), r.first, r.second};
  };

  while (true) {
    if (auto r = range_of(current)) return finish(pushed, *r);
    std::optional<std::pair<FreeWord, int>> best;
    for (int k = 1; k < n; ++k) {
      for (int e : {1, -1}) {
        FreeWord next = canonical_cyclic_word(artin_apply(Braid::generator(n, k, e), current));
        if (next.size() < current.size() && (!best || next.size() < best->first.size())) {
          best = std::make_pair(std::move(next), e * k);
        }
      }
    }
    if (!best) break;
    current = std::move(best->first);
    pushed = Braid::generator(n, std::abs(best->second), best->second > 0 ? 1 : -1) * pushed;
  }

  // Greedy descent stalled: breadth-first over short braids.
  std::deque<std::pair<Braid, FreeWord>> frontier{{Braid(n), current}};
  for (int depth = 0; depth < max_depth; ++depth) {
    std::deque<std::pair<Braid, FreeWord>> next_frontier;
    for (const auto& [b, w] : frontier) {
      for (int k = 1; k < n; ++k) {
        for (int e : {1, -1}) {
          if (!b.letters().empty() && b.letters().front() == -e * k) continue;
          Braid nb = Braid::generator(n, k, e) * b;
          FreeWord nw = canonical_cyclic_word(artin_apply(Braid::generator(n, k, e), w));
          if (auto r = range_of(nw)) return finish(nb * pushed, *r);
          next_frontier.emplace_back(std::move(nb), std::move(nw));
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return std::nullopt;
}

FiberElement dehn_twist(const Cycle& c) {
  const FiberModel& m = c.model();
  if (m.is_homological()) {
    // Columns are the images of the basis vectors under v -> v + <v,c> c.
    const auto& cv = c.coords();
    const int d = m.dimension();
    IntMatrix t = IntMatrix::identity(d);
    for (int j = 0; j < d; ++j) {
      std::vector<Integer> e(static_cast<std::size_t>(d));
      e[static_cast<std::size_t>(j)] = 1;
      const Integer p = symplectic_pairing(e, cv);
      for (int i = 0; i < d; ++i) t(i, j) += p * cv[static_cast<std::size_t>(i)];
    }
    return FiberElement::matrix(m, std::move(t));
  }
  std::optional<CurveWitness> w = c.witness();
  if (!w) w = find_curve_witness(c.word());
  if (!w) {
    throw std::domain_error("disc curve " + c.to_string() +
                            " is not a recognised pushforward of a standard curve");
  }
  const int n = m.punctures();
  return FiberElement::braid(m, w->carrier * full_twist(n, w->first, w->last) * w->carrier.inverse());
}

Cycle act(const FiberElement& g, const Cycle& c) {
  if (!(g.model() == c.model())) throw std::invalid_argument("fiber model mismatch");
  if (c.model().is_homological()) return Cycle::homology(c.model(), g.apply(c.coords()));
  Cycle out = Cycle::disc_curve(c.model(), artin_apply(g.as_braid(), c.word()));
  if (c.witness() && !out.standard_range()) {
    out.witness_ = CurveWitness{g.as_braid() * c.witness()->carrier, c.witness()->first, c.witness()->last};
  }
  return out;
}

bool cycle_eq(const Cycle& a, const Cycle& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("fiber model mismatch");
  return a == b;
}

IntersectionNumber intersection_number(const Cycle& a, const Cycle& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("fiber model mismatch");
  switch (a.model().kind()) {
    case FiberKind::Torus:
      return {abs(symplectic_pairing(a.coords(), b.coords())), Exactness::Exact};
    case FiberKind::SymplecticHomology:
      return {abs(symplectic_pairing(a.coords(), b.coords())), Exactness::LowerBound};
    case FiberKind::PuncturedDisc:
      break;
  }
  const auto ra = a.standard_range();
  const auto rb = b.standard_range();
  if (!ra || !rb) return {0, Exactness::LowerBound};
  const bool disjoint = ra->second < rb->first || rb->second < ra->first;
  const bool nested = (ra->first <= rb->first && rb->second <= ra->second) ||
                      (rb->first <= ra->first && ra->second <= rb->second);
  if (disjoint || nested) return {0, Exactness::Exact};
  return {2, Exactness::LowerBound};
}

FiberElement base_half_twist(const FiberModel& model, const PunctureArc& d) {
  if (model.is_homological()) throw std::invalid_argument("base-point half-twist needs a disc fiber");
  const int n = model.punctures();
  if (d.carrier.strands() != n) throw std::invalid_argument("puncture arc strand mismatch");
  if (d.base < 1 || d.base >= n) throw std::invalid_argument("puncture arc base out of range");
  return FiberElement::braid(model, half_twist(Arc{d.base, d.carrier}));
}

}  // namespace lpm

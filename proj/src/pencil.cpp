#include "lpm/pencil.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lpm {

namespace {

void require_strands(const Pencil& p, int strands) {
  if (strands != p.size()) {
    throw std::invalid_argument("braid on " + std::to_string(strands) + " strands, pencil has " +
                                std::to_string(p.size()) + " cycles");
  }
}

FreeWord boundary_word(int r) {
  std::vector<int> ls;
  for (int i = 1; i <= r; ++i) ls.push_back(i);
  return FreeWord(r, std::move(ls));
}

std::string pair_key(const GeneratorConjugate& a, const GeneratorConjugate& b) {
  return std::to_string(a.core) + "|" + to_string(a.conjugator) + "|" + std::to_string(b.core) + "|" +
         to_string(b.conjugator);
}

std::string pencil_key(const Pencil& p) {
  std::string k;
  for (const auto& c : p.cycles()) k += c.to_string() + ";";
  return k;
}

}  // namespace

Pencil::Pencil(FiberModel fiber, std::vector<Cycle> cycles) : fiber_(fiber), cycles_(std::move(cycles)) {
  if (cycles_.empty()) throw std::invalid_argument("a pencil needs at least one cycle");
  for (const auto& c : cycles_) {
    if (!(c.model() == fiber_)) throw std::invalid_argument("cycle model does not match the fiber");
    try {
      twists_.push_back(dehn_twist(c));
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(e.what());
    }
    inverses_.push_back(twists_.back().inverse());
  }
}

FiberElement monodromy_of(const Pencil& p, const FreeWord& gamma) {
  if (gamma.rank() != p.size()) {
    throw std::invalid_argument("word of rank " + std::to_string(gamma.rank()) + " on a pencil with " +
                                std::to_string(p.size()) + " cycles");
  }
  FiberElement out = FiberElement::identity(p.fiber());
  for (int l : gamma.letters()) out = out * (l > 0 ? p.twist(l) : p.twist_inverse(-l));
  return out;
}

FiberElement total_monodromy(const Pencil& p) { return monodromy_of(p, boundary_word(p.size())); }

bool is_closed(const Pencil& p) {
  return elem_eq(total_monodromy(p), FiberElement::identity(p.fiber()));
}

Cycle vanishing_label(const Pencil& p, const GeneratorConjugate& gamma) {
  if (gamma.conjugator.rank() != p.size() || gamma.core < 1 || gamma.core > p.size()) {
    throw std::invalid_argument("generator conjugate does not match the pencil rank");
  }
  return act(monodromy_of(p, gamma.conjugator), p.cycle(gamma.core));
}

Cycle vanishing_label(const Pencil& p, const FreeWord& gamma) {
  auto gc = is_generator_conjugate(gamma);
  if (!gc) throw std::invalid_argument("'" + to_string(gamma) + "' is not a conjugate of a generator");
  return vanishing_label(p, *gc);
}

Pencil hurwitz_apply(const Braid& b, const Pencil& p) {
  require_strands(p, b.strands());
  const auto images = artin_images(b.inverse());
  std::vector<Cycle> out;
  out.reserve(images.size());
  for (const auto& w : images) out.push_back(vanishing_label(p, w));
  return Pencil(p.fiber(), std::move(out));
}

GammaReport gamma_report(const Automorphism& a, const Pencil& p) {
  require_strands(p, a.b.strands());
  if (!(a.g.model() == p.fiber())) throw std::invalid_argument("fiber element model does not match the pencil");
  const auto images = artin_images(a.b);
  const FiberElement g_inv = a.g.inverse();
  for (int i = 1; i <= p.size(); ++i) {
    const FreeWord& u = images[static_cast<std::size_t>(i - 1)];
    const FiberElement lhs = monodromy_of(p, u);
    const FiberElement rhs = a.g * p.twist(i) * g_inv;
    if (!elem_eq(lhs, rhs)) return {false, i, "monodromy", to_string(lhs), to_string(rhs)};
    const Cycle l = vanishing_label(p, u);
    const Cycle r = act(a.g, p.cycle(i));
    if (!cycle_eq(l, r)) return {false, i, "label", l.to_string(), r.to_string()};
  }
  return {};
}

bool in_gamma(const Automorphism& a, const Pencil& p) { return gamma_report(a, p).member; }

std::string to_string(ArcKind k) {
  switch (k) {
    case ArcKind::Matching:
      return "Matching";
    case ArcKind::DisjointPair:
      return "DisjointPair";
    case ArcKind::OnceIntersecting:
      return "OnceIntersecting";
    case ArcKind::BasePointTwist:
      return "BasePointTwist";
    case ArcKind::Other:
      return "Other";
  }
  return "?";
}

std::optional<int> curve_arc_intersection(const Cycle& c, const PunctureArc& d) {
  if (c.model().is_homological()) throw std::invalid_argument("curve-arc intersection needs a disc fiber");
  const FiberElement pull = FiberElement::braid(c.model(), d.carrier.inverse());
  const auto range = act(pull, c).standard_range();
  if (!range) return std::nullopt;
  auto inside = [&](int k) { return range->first <= k && k <= range->second; };
  return inside(d.base) != inside(d.base + 1) ? 1 : 0;
}

namespace {

struct LabelPair {
  Cycle first;
  Cycle second;
};

LabelPair labels_of(const Arc& a, const Pencil& p) {
  require_strands(p, a.strands());
  auto [e1, e2] = supporting_pair(a);
  return {vanishing_label(p, e1), vanishing_label(p, e2)};
}

// Empty string on success, otherwise the failing clause.
std::string base_twist_clause(const LabelPair& s, const PunctureArc& d, const FiberModel& m, Handedness hand,
                              std::string* detail) {
  const auto meets = curve_arc_intersection(s.first, d);
  if (!meets) {
    *detail = "S' and the puncture arc are not in a supported standard configuration";
    return "(i)";
  }
  if (*meets != 1) {
    *detail = "S' meets the puncture arc " + std::to_string(*meets) + " times";
    return "(i)";
  }
  const FiberElement t = base_half_twist(m, d);
  const FiberElement tt = hand == Handedness::Positive ? t : t.inverse();
  const Cycle pushed = act(tt, s.first);
  if (!cycle_eq(s.second, pushed)) {
    *detail = "S'' = " + s.second.to_string() + " but the half-twist sends S' to " + pushed.to_string();
    return "(ii)";
  }
  FiberElement twist = dehn_twist(s.second);
  if (hand == Handedness::Negative) twist = twist.inverse();
  const Cycle back = act(twist * tt * tt, s.first);
  if (!cycle_eq(back, s.first)) {
    *detail = "the twist identity sends S' to " + back.to_string();
    return "identity";
  }
  return {};
}

}  // namespace

ArcClass classify_arc(const Arc& a, const Pencil& p, const ClassifyOptions& opts) {
  const LabelPair s = labels_of(a, p);
  if (cycle_eq(s.first, s.second)) return {ArcKind::Matching, {}, {}};
  const IntersectionNumber in = intersection_number(s.first, s.second);
  if (in.exactness == Exactness::Exact || opts.trust_algebraic) {
    if (in.value == 0) return {ArcKind::DisjointPair, {}, {}};
    if (in.value == 1) return {ArcKind::OnceIntersecting, {}, {}};
    return {ArcKind::Other, "intersection number " + in.value.str(), {}};
  }
  if (opts.base_arc && !p.fiber().is_homological()) {
    std::string detail;
    for (Handedness h : {Handedness::Positive, Handedness::Negative}) {
      if (base_twist_clause(s, *opts.base_arc, p.fiber(), h, &detail).empty()) {
        return {ArcKind::BasePointTwist, {}, opts.base_arc};
      }
    }
  }
  return {ArcKind::Other, "intersection number is only a lower bound (" + in.value.str() + ")", {}};
}

Automorphism automorphism_from_arc(const Arc& a, const Pencil& p, const ClassifyOptions& opts) {
  const ArcClass cls = classify_arc(a, p, opts);
  int power = 0;
  switch (cls.kind) {
    case ArcKind::Matching:
      power = 1;
      break;
    case ArcKind::DisjointPair:
      power = 2;
      break;
    case ArcKind::OnceIntersecting:
      power = 3;
      break;
    default:
      throw std::invalid_argument("arc class " + to_string(cls.kind) + " has no kernel automorphism");
  }
  Automorphism out{half_twist(a).pow(power), FiberElement::identity(p.fiber())};
  const GammaReport rep = gamma_report(out, p);
  if (!rep.member) {
    throw std::logic_error("automorphism of a " + to_string(cls.kind) + " arc fails at generator " +
                           std::to_string(rep.generator) + " (" + rep.clause + ")");
  }
  return out;
}

Automorphism base_twist_automorphism(const Arc& a, const PunctureArc& d, const Pencil& p, Handedness hand) {
  if (p.fiber().is_homological()) throw std::invalid_argument("base-point twists need a disc fiber");
  const LabelPair s = labels_of(a, p);
  std::string detail;
  const std::string clause = base_twist_clause(s, d, p.fiber(), hand, &detail);
  if (!clause.empty()) throw HypothesisFailure(clause, detail);
  const FiberElement t = base_half_twist(p.fiber(), d);
  Automorphism out{half_twist(a), hand == Handedness::Positive ? t : t.inverse()};
  const GammaReport rep = gamma_report(out, p);
  if (!rep.member) {
    throw HypothesisFailure("gamma", "generator " + std::to_string(rep.generator) + " " + rep.clause +
                                         ": " + rep.lhs + " vs " + rep.rhs);
  }
  return out;
}

Braid dual_singularity_braid(DualSingularity kind, const Arc& a) {
  const Braid h = half_twist(a);
  switch (kind) {
    case DualSingularity::Node:
      return h.pow(2);
    case DualSingularity::Cusp:
      return h.pow(3);
    case DualSingularity::Tangency:
      return h;
  }
  return h;
}

std::pair<int, FreeWord> canonical_supporting_pair(const Arc& a) {
  auto [e1, e2] = supporting_pair(a);
  return {e1.core, conjugate(e2.word(), e1.conjugator.inverse())};
}

std::vector<Arc> enumerate_arcs(int strands, int max_len) {
  if (max_len < 0) throw std::invalid_argument("maximal carrier length must be >= 0");
  std::vector<Arc> out;
  if (strands < 2) return out;
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::set<std::pair<int, std::vector<int>>> seen;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= max_len; ++len) {
    for (int base = 1; base < strands; ++base) {
      for (const auto& word : layer) {
        Arc a{base, Braid(strands, word)};
        auto [core, second] = canonical_supporting_pair(a);
        if (seen.emplace(core, second.letters()).second) out.push_back(std::move(a));
      }
    }
    if (len == max_len) break;
    std::vector<std::vector<int>> next;
    for (const auto& word : layer) {
      for (int l : alphabet) {
        if (!word.empty() && word.back() == -l) continue;
        auto w = word;
        w.push_back(l);
        next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Arc> enumerate_arcs(const Pencil& p, int max_len) { return enumerate_arcs(p.size(), max_len); }

std::vector<Arc> enumerate_matching_arcs(const Pencil& p, int max_len, const ClassifyOptions& opts) {
  std::vector<Arc> out;
  for (auto& a : enumerate_arcs(p, max_len)) {
    if (classify_arc(a, p, opts).kind == ArcKind::Matching) out.push_back(std::move(a));
  }
  return out;
}

std::vector<Arc> kernel_orbit(const Arc& a, const Pencil& p, const std::vector<Automorphism>& gens, int depth,
                              const ClassifyOptions& opts) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!in_gamma(gens[k], p)) {
      throw std::invalid_argument("generator " + std::to_string(k + 1) + " is not in the stabilizer");
    }
  }
  const ArcKind kind = classify_arc(a, p, opts).kind;
  std::vector<Braid> moves;
  for (const auto& g : gens) {
    moves.push_back(g.b);
    moves.push_back(g.b.inverse());
  }
  auto key = [](const Arc& x) {
    auto [e1, e2] = supporting_pair(x);
    return pair_key(e1, e2);
  };
  std::vector<Arc> out{a};
  std::set<std::string> seen{key(a)};
  std::vector<Arc> frontier{a};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Arc> next;
    for (const auto& x : frontier) {
      for (const auto& m : moves) {
        Arc y{x.base, m * x.carrier};
        if (!seen.insert(key(y)).second) continue;
        const ArcKind k = classify_arc(y, p, opts).kind;
        if (k != kind) {
          throw std::logic_error("orbit element with carrier '" + to_string(y.carrier) + "' classifies as " +
                                 to_string(k) + ", expected " + to_string(kind));
        }
        out.push_back(y);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Pencil> hurwitz_orbit(const Pencil& p, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  const int r = p.size();
  std::map<std::string, Pencil> found{{pencil_key(p), p}};
  std::vector<Pencil> frontier{p};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Pencil> next;
    for (const auto& q : frontier) {
      for (int i = 1; i < r; ++i) {
        for (int e : {1, -1}) {
          Pencil moved = hurwitz_apply(Braid::generator(r, i, e), q);
          if (found.emplace(pencil_key(moved), moved).second) next.push_back(std::move(moved));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Pencil> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

}  // namespace lpm

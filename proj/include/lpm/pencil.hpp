#pragma once

// Positive factorizations over a disc, their enhanced monodromy, Hurwitz
// moves, matching-path detection and the stabilizer group of the monodromy.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpm/fiber.hpp"
#include "lpm/wordcore.hpp"

namespace lpm {

/// An ordered tuple of vanishing cycles; twist i is the monodromy around x_i.
class Pencil {
 public:
  /// Throws std::invalid_argument on an empty list, a model mismatch, or a
  /// disc curve whose Dehn twist cannot be computed.
  Pencil(FiberModel fiber, std::vector<Cycle> cycles);

  const FiberModel& fiber() const { return fiber_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  int size() const { return static_cast<int>(cycles_.size()); }

  /// 1-based.
  const Cycle& cycle(int i) const { return cycles_.at(static_cast<std::size_t>(i - 1)); }
  const FiberElement& twist(int i) const { return twists_.at(static_cast<std::size_t>(i - 1)); }
  const FiberElement& twist_inverse(int i) const { return inverses_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const Pencil& a, const Pencil& b) {
    return a.fiber_ == b.fiber_ && a.cycles_ == b.cycles_;
  }

 private:
  FiberModel fiber_;
  std::vector<Cycle> cycles_;
  std::vector<FiberElement> twists_;
  std::vector<FiberElement> inverses_;
};

struct Automorphism {
  Braid b;
  FiberElement g;
};

/// zeta(x_i) = dehn_twist(c_i), zeta(uv) = zeta(u) zeta(v).
FiberElement monodromy_of(const Pencil& p, const FreeWord& gamma);
FiberElement total_monodromy(const Pencil& p);
bool is_closed(const Pencil& p);

/// L(w x_i w^-1) = act(zeta(w), c_i).
Cycle vanishing_label(const Pencil& p, const GeneratorConjugate& gamma);
/// Throws std::invalid_argument unless gamma is a conjugate of a generator.
Cycle vanishing_label(const Pencil& p, const FreeWord& gamma);

/// The pencil whose enhanced monodromy is that of p precomposed with the
/// Artin automorphism of b^-1; sigma_i sends (c_i, c_{i+1}) to
/// (c_{i+1}, tau_{c_{i+1}}^-1 (c_i)).
Pencil hurwitz_apply(const Braid& b, const Pencil& p);

struct GammaReport {
  bool member = true;
  int generator = 0;   // first failing generator index, 0 when member
  std::string clause;  // "monodromy" or "label"
  std::string lhs;
  std::string rhs;
};

GammaReport gamma_report(const Automorphism& a, const Pencil& p);
bool in_gamma(const Automorphism& a, const Pencil& p);

enum class ArcKind { Matching, DisjointPair, OnceIntersecting, BasePointTwist, Other };

struct ArcClass {
  ArcKind kind = ArcKind::Other;
  std::string reason;                   // set for Other
  std::optional<PunctureArc> base_arc;  // set for BasePointTwist
};

std::string to_string(ArcKind k);

struct ClassifyOptions {
  /// Accept LowerBound intersection data as if it were exact.
  bool trust_algebraic = false;
  /// In a disc fiber, a puncture arc to test the base-point-twist hypotheses
  /// against when none of the other cases applies.
  std::optional<PunctureArc> base_arc;
};

ArcClass classify_arc(const Arc& a, const Pencil& p, const ClassifyOptions& opts = {});

/// (sigma, 1), (sigma^2, 1) or (sigma^3, 1) by class; throws
/// std::invalid_argument for other classes and std::logic_error if the
/// result is not a member.
Automorphism automorphism_from_arc(const Arc& a, const Pencil& p, const ClassifyOptions& opts = {});

class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(std::string clause, const std::string& what)
      : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// Positive: S'' = tau_delta(S'), result (sigma, tau_delta).
/// Negative: S'' = tau_delta^-1(S'), result (sigma, tau_delta^-1).
enum class Handedness { Positive, Negative };

/// Checks, in order: (i) S' meets the puncture arc d once, (ii) S'' is the
/// image of S' under the base-point half-twist, the lantern identity, and
/// membership. Throws HypothesisFailure naming the clause that failed:
/// "(i)", "(ii)", "identity" or "gamma".
Automorphism base_twist_automorphism(const Arc& a, const PunctureArc& d, const Pencil& p,
                                     Handedness hand = Handedness::Positive);

/// Geometric intersection of a disc curve with a puncture arc, when both
/// can be moved simultaneously into standard position; nullopt otherwise.
std::optional<int> curve_arc_intersection(const Cycle& c, const PunctureArc& d);

enum class DualSingularity { Node, Cusp, Tangency };
Braid dual_singularity_braid(DualSingularity kind, const Arc& a);

/// Supporting pair conjugated so that the first element is a bare generator.
std::pair<int, FreeWord> canonical_supporting_pair(const Arc& a);

/// All arcs on r strands with carrier length <= max_len, deduplicated by the
/// canonical supporting pair. Order: by carrier length, then base, then word.
std::vector<Arc> enumerate_arcs(int strands, int max_len);
std::vector<Arc> enumerate_arcs(const Pencil& p, int max_len);
std::vector<Arc> enumerate_matching_arcs(const Pencil& p, int max_len, const ClassifyOptions& opts = {});

/// Closure of {a} under pushforward by the generator braids and their
/// inverses, to the given depth. Throws std::invalid_argument on a
/// non-member generator and std::logic_error if classification changes.
std::vector<Arc> kernel_orbit(const Arc& a, const Pencil& p, const std::vector<Automorphism>& gens,
                              int depth, const ClassifyOptions& opts = {});

/// Closure of {p} under sigma_i^{+-1} to the given depth, sorted canonically.
std::vector<Pencil> hurwitz_orbit(const Pencil& p, int depth);

}  // namespace lpm

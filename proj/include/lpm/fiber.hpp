#pragma once

// Decidable stand-ins for the fiber mapping class group and its vanishing
// cycles:
//
//   Torus               SL(2,Z) acting on primitive classes in H_1(T^2); exact.
//   SymplecticHomology  Sp(2h,Z) acting on primitive classes in Z^{2h}; a
//                       necessary-condition proxy (algebraic data only).
//   PuncturedDisc       B_n acting on simple closed curves of the n-punctured
//                       disc, recorded as cyclic words in F_n; exact for the
//                       standard curve family and its braid pushforwards.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpm/wordcore.hpp"

namespace lpm {

class FiberElement;

using Integer = boost::multiprecision::cpp_int;

enum class FiberKind { Torus, SymplecticHomology, PuncturedDisc };

class FiberModel {
 public:
  static FiberModel torus();
  static FiberModel symplectic_homology(int genus);
  static FiberModel punctured_disc(int punctures);

  FiberKind kind() const { return kind_; }
  bool is_homological() const { return kind_ != FiberKind::PuncturedDisc; }
  int genus() const;
  int punctures() const;
  /// 2h for the homology models.
  int dimension() const;

  std::string name() const;

  friend bool operator==(const FiberModel&, const FiberModel&) = default;

 private:
  FiberModel(FiberKind kind, int param) : kind_(kind), param_(param) {}
  FiberKind kind_;
  int param_;
};

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);
  IntMatrix(int n, std::vector<Integer> entries);
  static IntMatrix identity(int n);

  int size() const { return n_; }
  const Integer& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  Integer& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<Integer>& entries() const { return a_; }

  IntMatrix transpose() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  int n_ = 0;
  std::vector<Integer> a_;
};

/// The standard symplectic form: block diagonal with blocks [[0,1],[-1,0]].
IntMatrix standard_symplectic_form(int genus);
bool is_symplectic(const IntMatrix& m);

/// <u,v> = sum_i (u_{2i-1} v_{2i} - u_{2i} v_{2i-1})
Integer symplectic_pairing(const std::vector<Integer>& u, const std::vector<Integer>& v);

/// Pushforward of the standard curve around punctures first..last by carrier.
struct CurveWitness {
  Braid carrier;
  int first = 1;
  int last = 1;
};

class Cycle {
 public:
  /// Primitive nonzero class; stored up to sign (first nonzero entry > 0).
  static Cycle homology(const FiberModel& model, std::vector<Integer> coords);
  /// Canonical cyclic word of `word`, which must be nonempty after cyclic reduction.
  static Cycle disc_curve(const FiberModel& model, const FreeWord& word);
  /// The standard round curve enclosing punctures first..last.
  static Cycle standard_curve(const FiberModel& model, int first, int last);

  const FiberModel& model() const { return model_; }
  const std::vector<Integer>& coords() const;
  const FreeWord& word() const;
  const std::optional<CurveWitness>& witness() const { return witness_; }

  /// Range first..last when this disc curve is a standard round curve.
  std::optional<std::pair<int, int>> standard_range() const;

  std::string to_string() const;

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.model_ == b.model_ && a.coords_ == b.coords_ && a.word_ == b.word_;
  }

 private:
  Cycle(FiberModel model) : model_(model) {}
  friend Cycle act(const FiberElement& g, const Cycle& c);
  friend Cycle with_witness(Cycle c, CurveWitness w);

  FiberModel model_;
  std::vector<Integer> coords_;
  FreeWord word_;
  std::optional<CurveWitness> witness_;
};

/// Lexicographically least rotation of the cyclic reduction of w or w^-1.
FreeWord canonical_cyclic_word(const FreeWord& w);

class FiberElement {
 public:
  static FiberElement identity(const FiberModel& model);
  /// Throws unless det = 1 (torus) or M^T J M = J (symplectic homology).
  static FiberElement matrix(const FiberModel& model, IntMatrix m);
  static FiberElement braid(const FiberModel& model, Braid b);

  const FiberModel& model() const { return model_; }
  const IntMatrix& as_matrix() const;
  const Braid& as_braid() const;

  FiberElement inverse() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend FiberElement operator*(const FiberElement& a, const FiberElement& b);

 private:
  FiberElement(FiberModel model, std::variant<IntMatrix, Braid> data)
      : model_(model), data_(std::move(data)) {}
  FiberModel model_;
  std::variant<IntMatrix, Braid> data_;
};

std::string to_string(const FiberElement& g);

/// Group equality; braid_eq in the disc model.
bool elem_eq(const FiberElement& a, const FiberElement& b);

FiberElement dehn_twist(const Cycle& c);
Cycle act(const FiberElement& g, const Cycle& c);
bool cycle_eq(const Cycle& a, const Cycle& b);

enum class Exactness { Exact, LowerBound };

struct IntersectionNumber {
  Integer value;
  Exactness exactness;
};

IntersectionNumber intersection_number(const Cycle& a, const Cycle& b);

/// An arc between punctures of a disc fiber: the image of the straight arc
/// between punctures base, base+1 under carrier.
struct PunctureArc {
  int base = 1;
  Braid carrier;
};

FiberElement base_half_twist(const FiberModel& model, const PunctureArc& d);

/// Finds (carrier, range) with carrier pushing the standard curve on range to
/// `word`, searching braids of length <= max_depth after a greedy descent.
std::optional<CurveWitness> find_curve_witness(const FreeWord& word, int max_depth = 4);

}  // namespace lpm

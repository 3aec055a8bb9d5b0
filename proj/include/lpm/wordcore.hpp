#pragma once

// Free groups, braid groups and the Artin action of B_r on F_r.
//
// Letters are stored as signed integers: +i is the generator x_i (or sigma_i),
// -i its inverse. Indices are 1-based throughout.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpm {

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  /// Freely reduces `letters`; throws std::invalid_argument on a zero letter
  /// or an index above `rank`.
  FreeWord(int rank, std::vector<int> letters);

  static FreeWord generator(int rank, int index);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  struct Trusted {};
  FreeWord(int rank, std::vector<int> letters, Trusted)
      : rank_(rank), letters_(std::move(letters)) {}
  friend class WordBuilder;

  int rank_ = 0;
  std::vector<int> letters_;
};

/// Accumulates letters with on-the-fly free reduction.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : rank_(rank) {}

  void push(int letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  FreeWord build() &&;

 private:
  int rank_;
  std::vector<int> stack_;
};

FreeWord free_mul(const FreeWord& u, const FreeWord& v);
FreeWord free_inv(const FreeWord& u);
/// g * u * g^-1
FreeWord conjugate(const FreeWord& u, const FreeWord& g);

/// Removes matching first/last letter pairs; returns (peeled prefix, core).
std::pair<FreeWord, FreeWord> cyclic_reduction(const FreeWord& u);

class Braid {
 public:
  Braid() = default;
  explicit Braid(int strands);
  /// The word is kept exactly as given (no cancellation), so that
  /// serialization round-trips bit-exactly.
  Braid(int strands, std::vector<int> letters);

  static Braid generator(int strands, int index, int exponent = 1);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  Braid inverse() const;
  Braid pow(int exponent) const;

  /// Word equality. Group equality is braid_eq.
  friend bool operator==(const Braid&, const Braid&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Concatenation, cancelling inverse pairs at the junction.
Braid operator*(const Braid& a, const Braid& b);

struct GeneratorConjugate {
  int core = 0;
  FreeWord conjugator;

  FreeWord word() const;
  friend bool operator==(const GeneratorConjugate&, const GeneratorConjugate&) = default;
};

std::optional<GeneratorConjugate> is_generator_conjugate(const FreeWord& u);

/// Images of x_1..x_r under the automorphism induced by `b`.
/// Convention: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i,
/// and artin_apply(b1*b2, u) == artin_apply(b1, artin_apply(b2, u)).
std::vector<FreeWord> artin_images(const Braid& b);

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& u);
FreeWord artin_apply(const Braid& b, const FreeWord& u);
bool braid_eq(const Braid& b1, const Braid& b2);

/// The image of the straight arc between punctures base, base+1 under `carrier`.
struct Arc {
  int base = 1;
  Braid carrier;

  int strands() const { return carrier.strands(); }
};

Braid half_twist(const Arc& a);
std::pair<GeneratorConjugate, GeneratorConjugate> supporting_pair(const Arc& a);

/// Full twist on the consecutive strands first..last.
Braid full_twist(int strands, int first, int last);

// Text forms: "x1 X2" for free words, "s2 S1" for braids; "" is the identity.
std::string to_string(const FreeWord& w);
std::string to_string(const Braid& b);
FreeWord parse_free_word(std::string_view text, int rank);
Braid parse_braid(std::string_view text, int strands);

}  // namespace lpm

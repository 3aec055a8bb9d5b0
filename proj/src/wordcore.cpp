#include "lpm/wordcore.hpp"

#include <cstdlib>
#include <sstream>

namespace lpm {

namespace {

void check_letter(int letter, int bound, const char* what) {
  if (letter == 0 || std::abs(letter) > bound) {
    throw std::invalid_argument(std::string(what) + " letter " + std::to_string(letter) +
                                " out of range 1.." + std::to_string(bound));
  }
}

void require_same_rank(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
  }
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be positive");
}

FreeWord::FreeWord(int rank, std::vector<int> letters) : FreeWord(rank) {
  WordBuilder b(rank);
  for (int l : letters) {
    check_letter(l, rank, "free word");
    b.push(l);
  }
  *this = std::move(b).build();
}

FreeWord FreeWord::generator(int rank, int index) { return FreeWord(rank, {index}); }

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return FreeWord(rank_, std::move(out), Trusted{});
}

void WordBuilder::push(int letter) {
  if (!stack_.empty() && stack_.back() == -letter) {
    stack_.pop_back();
  } else {
    stack_.push_back(letter);
  }
}

void WordBuilder::append(const FreeWord& w) {
  for (int l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const FreeWord& w) {
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
}

FreeWord WordBuilder::build() && { return FreeWord(rank_, std::move(stack_), FreeWord::Trusted{}); }

FreeWord free_mul(const FreeWord& u, const FreeWord& v) {
  require_same_rank(u, v);
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

FreeWord free_inv(const FreeWord& u) { return u.inverse(); }

FreeWord conjugate(const FreeWord& u, const FreeWord& g) {
  require_same_rank(u, g);
  WordBuilder b(u.rank());
  b.append(g);
  b.append(u);
  b.append_inverse(g);
  return std::move(b).build();
}

std::pair<FreeWord, FreeWord> cyclic_reduction(const FreeWord& u) {
  const auto& ls = u.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<int> prefix(ls.begin(), ls.begin() + static_cast<long>(lo));
  std::vector<int> core(ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi));
  return {FreeWord(u.rank(), std::move(prefix)), FreeWord(u.rank(), std::move(core))};
}

Braid::Braid(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("braid strand count must be positive");
}

Braid::Braid(int strands, std::vector<int> letters) : Braid(strands) {
  for (int l : letters) check_letter(l, strands - 1, "braid");
  letters_ = std::move(letters);
}

Braid Braid::generator(int strands, int index, int exponent) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("braid exponent must be +-1");
  return Braid(strands, {exponent * index});
}

Braid Braid::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  Braid b(strands_);
  b.letters_ = std::move(out);
  return b;
}

Braid Braid::pow(int exponent) const {
  Braid base = exponent < 0 ? inverse() : *this;
  Braid out(strands_);
  for (int i = 0; i < std::abs(exponent); ++i) out = out * base;
  return out;
}

Braid operator*(const Braid& a, const Braid& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("strand mismatch: " + std::to_string(a.strands()) + " vs " +
                                std::to_string(b.strands()));
  }
  std::vector<int> out = a.letters();
  std::size_t j = 0;
  const auto& bl = b.letters();
  while (!out.empty() && j < bl.size() && out.back() == -bl[j]) {
    out.pop_back();
    ++j;
  }
  out.insert(out.end(), bl.begin() + static_cast<long>(j), bl.end());
  return Braid(a.strands(), std::move(out));
}

FreeWord GeneratorConjugate::word() const {
  WordBuilder b(conjugator.rank());
  b.append(conjugator);
  b.push(core);
  b.append_inverse(conjugator);
  return std::move(b).build();
}

std::optional<GeneratorConjugate> is_generator_conjugate(const FreeWord& u) {
  auto [prefix, core] = cyclic_reduction(u);
  if (core.size() != 1 || core.letters()[0] < 0) return std::nullopt;
  return GeneratorConjugate{core.letters()[0], std::move(prefix)};
}

std::vector<FreeWord> artin_images(const Braid& b) {
  const int r = b.strands();
  std::vector<FreeWord> img;
  img.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) img.push_back(FreeWord::generator(r, i));

  // Extend the prefix P by one letter g: images of P*g are images of P
  // substituted into g's images of the generators.
  for (int letter : b.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    FreeWord xi = img[i];
    FreeWord xj = img[i + 1];
    WordBuilder w(r);
    if (letter > 0) {
      w.append(xi);
      w.append(xj);
      w.append_inverse(xi);
      img[i] = std::move(w).build();
      img[i + 1] = std::move(xi);
    } else {
      w.append_inverse(xj);
      w.append(xi);
      w.append(xj);
      img[i + 1] = std::move(w).build();
      img[i] = std::move(xj);
    }
  }
  return img;
}

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& u) {
  if (static_cast<int>(images.size()) != u.rank()) {
    throw std::invalid_argument("rank mismatch: braid on " + std::to_string(images.size()) +
                                " strands acting on rank " + std::to_string(u.rank()));
  }
  WordBuilder b(u.rank());
  for (int l : u.letters()) {
    const auto& w = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

FreeWord artin_apply(const Braid& b, const FreeWord& u) {
  if (b.strands() != u.rank()) {
    throw std::invalid_argument("rank mismatch: braid on " + std::to_string(b.strands()) +
                                " strands acting on rank " + std::to_string(u.rank()));
  }
  return substitute(artin_images(b), u);
}

bool braid_eq(const Braid& b1, const Braid& b2) {
  if (b1.strands() != b2.strands()) return false;
  return artin_images(b1) == artin_images(b2);
}

Braid half_twist(const Arc& a) {
  return a.carrier * Braid::generator(a.strands(), a.base) * a.carrier.inverse();
}

std::pair<GeneratorConjugate, GeneratorConjugate> supporting_pair(const Arc& a) {
  const int r = a.strands();
  if (a.base < 1 || a.base >= r) throw std::invalid_argument("arc base index out of range");
  auto img = artin_images(a.carrier);
  const FreeWord first = img[static_cast<std::size_t>(a.base - 1)];
  const FreeWord second =
      conjugate(img[static_cast<std::size_t>(a.base)], img[static_cast<std::size_t>(a.base - 1)]);
  auto g1 = is_generator_conjugate(first);
  auto g2 = is_generator_conjugate(second);
  if (!g1 || !g2) throw std::logic_error("supporting pair left the set of generator conjugates");
  return {std::move(*g1), std::move(*g2)};
}

Braid full_twist(int strands, int first, int last) {
  if (first < 1 || last > strands || first > last) {
    throw std::invalid_argument("full twist range out of bounds");
  }
  std::vector<int> cycle;
  for (int i = first; i < last; ++i) cycle.push_back(i);
  std::vector<int> letters;
  for (int k = 0; k <= last - first; ++k) letters.insert(letters.end(), cycle.begin(), cycle.end());
  return Braid(strands, std::move(letters));
}

namespace {

std::string letters_to_string(const std::vector<int>& ls, char pos, char neg) {
  std::string out;
  for (int l : ls) {
    if (!out.empty()) out += ' ';
    out += l > 0 ? pos : neg;
    out += std::to_string(std::abs(l));
  }
  return out;
}

std::vector<int> parse_letters(std::string_view text, char pos, char neg) {
  std::vector<int> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != pos && tok[0] != neg)) {
      throw std::invalid_argument("bad token '" + tok + "'");
    }
    int idx = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw std::invalid_argument("bad token '" + tok + "'");
      idx = idx * 10 + (tok[i] - '0');
      if (idx > 1'000'000) throw std::invalid_argument("index too large in '" + tok + "'");
    }
    out.push_back(tok[0] == pos ? idx : -idx);
  }
  return out;
}

}  // namespace

std::string to_string(const FreeWord& w) { return letters_to_string(w.letters(), 'x', 'X'); }
std::string to_string(const Braid& b) { return letters_to_string(b.letters(), 's', 'S'); }

FreeWord parse_free_word(std::string_view text, int rank) {
  return FreeWord(rank, parse_letters(text, 'x', 'X'));
}

Braid parse_braid(std::string_view text, int strands) {
  return Braid(strands, parse_letters(text, 's', 'S'));
}

}  // namespace lpm

#pragma once

#include <random>
#include <vector>

#include "lpm/fiber.hpp"
#include "lpm/pencil.hpp"
#include "lpm/wordcore.hpp"

namespace testing {

inline lpm::FreeWord random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sign(0, 1);
  std::vector<int> ls;
  const int L = len(rng);
  for (int i = 0; i < L; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return lpm::FreeWord(rank, ls);
}

inline lpm::Braid random_braid(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, strands - 1), sign(0, 1);
  std::vector<int> ls;
  const int L = len(rng);
  for (int i = 0; i < L; ++i) ls.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return lpm::Braid(strands, ls);
}

inline lpm::Cycle torus_cycle(long p, long q) { return lpm::Cycle::homology(lpm::FiberModel::torus(), {p, q}); }

inline lpm::Pencil torus_pencil(std::initializer_list<std::pair<long, long>> cs) {
  std::vector<lpm::Cycle> v;
  for (auto [p, q] : cs) v.push_back(torus_cycle(p, q));
  return lpm::Pencil(lpm::FiberModel::torus(), v);
}

// (a, b, a, b) with a = (1,0), b = (0,1).
inline lpm::Pencil abab() { return torus_pencil({{1, 0}, {0, 1}, {1, 0}, {0, 1}}); }
inline lpm::Pencil ab() { return torus_pencil({{1, 0}, {0, 1}}); }

inline lpm::Cycle random_primitive_torus(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  while (true) {
    long p = d(rng), q = d(rng);
    long a = std::abs(p), b = std::abs(q);
    while (b) {
      long t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) return torus_cycle(p, q);
  }
}

}  // namespace testing

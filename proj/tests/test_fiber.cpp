#include <doctest.h>

#include "helpers.hpp"
#include "lpm/fiber.hpp"

using namespace lpm;
using testing::torus_cycle;

namespace {

const FiberModel T = FiberModel::torus();

IntMatrix M2(long a, long b, long c, long d) { return IntMatrix(2, {a, b, c, d}); }

// v + <v,c> c computed coordinate-wise.
std::vector<Integer> transvect(const std::vector<Integer>& v, const std::vector<Integer>& c) {
  Integer p = 0;
  for (std::size_t i = 0; i < v.size(); i += 2) p += v[i] * c[i + 1] - v[i + 1] * c[i];
  std::vector<Integer> out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += p * c[i];
  return out;
}

FiberElement random_torus_element(std::mt19937_64& rng) {
  FiberElement g = FiberElement::identity(T);
  for (int i = 0; i < 4; ++i) {
    FiberElement t = dehn_twist(testing::random_primitive_torus(rng));
    g = g * (rng() % 2 ? t : t.inverse());
  }
  return g;
}

}  // namespace

TEST_CASE("torus Dehn twist examples") {
  const Cycle a = torus_cycle(1, 0);
  const FiberElement t = dehn_twist(a);
  const auto e1 = transvect({1, 0}, {1, 0});
  const auto e2 = transvect({0, 1}, {1, 0});
  CHECK(t.as_matrix() == IntMatrix(2, {e1[0], e2[0], e1[1], e2[1]}));
  CHECK(t.as_matrix() == M2(1, -1, 0, 1));
  CHECK(cycle_eq(act(t, a), a));
  CHECK(t.apply({0, 1}) == std::vector<Integer>{-1, 1});
}

TEST_CASE("act examples and functoriality") {
  const Cycle a = torus_cycle(1, 0);
  CHECK(act(FiberElement::identity(T), a) == a);
  CHECK(act(dehn_twist(torus_cycle(0, 1)), a) == torus_cycle(1, 1));
  CHECK(transvect({1, 0}, {0, 1}) == std::vector<Integer>{1, 1});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const FiberElement g = random_torus_element(rng), h = random_torus_element(rng);
    const Cycle c = testing::random_primitive_torus(rng);
    CHECK(act(g * h, c) == act(g, act(h, c)));
  }
  CHECK_THROWS_AS(act(FiberElement::identity(FiberModel::symplectic_homology(2)), a), std::invalid_argument);
}

TEST_CASE("intersection_number examples") {
  auto i1 = intersection_number(torus_cycle(1, 0), torus_cycle(0, 1));
  CHECK(i1.value == 1);
  CHECK(i1.exactness == Exactness::Exact);
  auto i2 = intersection_number(torus_cycle(1, 0), torus_cycle(1, 0));
  CHECK(i2.value == 0);
  CHECK(i2.exactness == Exactness::Exact);
  const FiberModel S = FiberModel::symplectic_homology(2);
  auto i3 = intersection_number(Cycle::homology(S, {1, 0, 0, 0}), Cycle::homology(S, {0, 0, 1, 0}));
  CHECK(i3.value == 0);
  CHECK(i3.exactness == Exactness::LowerBound);
  auto i4 = intersection_number(torus_cycle(2, 1), torus_cycle(-1, 3));
  CHECK(i4.value == 7);
}

TEST_CASE("disc intersection conventions") {
  const FiberModel D = FiberModel::punctured_disc(4);
  auto std_curve = [&](int i, int j) { return Cycle::standard_curve(D, i, j); };
  auto disjoint = intersection_number(std_curve(1, 2), std_curve(3, 4));
  CHECK(disjoint.value == 0);
  CHECK(disjoint.exactness == Exactness::Exact);
  auto nested = intersection_number(std_curve(1, 3), std_curve(2, 3));
  CHECK(nested.value == 0);
  CHECK(nested.exactness == Exactness::Exact);
  auto overlap = intersection_number(std_curve(1, 2), std_curve(2, 3));
  CHECK(overlap.value == 2);
  CHECK(overlap.exactness == Exactness::LowerBound);
  auto other = intersection_number(std_curve(1, 2), Cycle::disc_curve(D, parse_free_word("x1 x3", 4)));
  CHECK(other.exactness == Exactness::LowerBound);
}

TEST_CASE("cycle_eq examples") {
  CHECK(cycle_eq(torus_cycle(1, 0), torus_cycle(-1, 0)));
  CHECK_FALSE(cycle_eq(torus_cycle(1, 0), torus_cycle(0, 1)));
  const FiberModel D = FiberModel::punctured_disc(3);
  CHECK(cycle_eq(Cycle::disc_curve(D, parse_free_word("x1 x2", 3)), Cycle::disc_curve(D, parse_free_word("x2 x1", 3))));
  CHECK(cycle_eq(Cycle::disc_curve(D, parse_free_word("x1 x2", 3)), Cycle::disc_curve(D, parse_free_word("X2 X1", 3))));
  CHECK(cycle_eq(Cycle::disc_curve(D, parse_free_word("x3 x1 x2 X3", 3)), Cycle::disc_curve(D, parse_free_word("x1 x2", 3))));
}

TEST_CASE("cycle validation") {
  CHECK_THROWS_AS(torus_cycle(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(torus_cycle(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Cycle::homology(T, {1}), std::invalid_argument);
  CHECK(torus_cycle(-3, 2).coords() == std::vector<Integer>{3, -2});
  const FiberModel D = FiberModel::punctured_disc(3);
  CHECK_THROWS_AS(Cycle::disc_curve(D, parse_free_word("x1 X1", 3)), std::invalid_argument);
  CHECK_THROWS_AS(Cycle::disc_curve(D, parse_free_word("x1", 2)), std::invalid_argument);
  CHECK_THROWS_AS(FiberModel::punctured_disc(1), std::invalid_argument);
  CHECK_THROWS_AS(FiberModel::symplectic_homology(0), std::invalid_argument);
  CHECK_THROWS_AS(FiberElement::matrix(T, M2(1, 1, 1, 1)), std::invalid_argument);
}

TEST_CASE("canonical cyclic words are rotation and inversion invariant") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const FreeWord w = testing::random_word(rng, 4, 10);
    const FreeWord c = canonical_cyclic_word(w);
    const FreeWord g = testing::random_word(rng, 4, 5);
    CHECK(canonical_cyclic_word(conjugate(w, g)) == c);
    CHECK(canonical_cyclic_word(w.inverse()) == c);
    CHECK(canonical_cyclic_word(c) == c);
  }
}

TEST_CASE("standard curves are recognised") {
  const FiberModel D = FiberModel::punctured_disc(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j) {
      const auto r = Cycle::standard_curve(D, i, j).standard_range();
      REQUIRE(r);
      CHECK(r->first == i);
      CHECK(r->second == j);
    }
  CHECK_FALSE(Cycle::disc_curve(D, parse_free_word("x1 x3", 5)).standard_range());
}

TEST_CASE("base_half_twist examples") {
  const FiberModel D = FiberModel::punctured_disc(3);
  const PunctureArc d{1, Braid(3)};
  const FiberElement h = base_half_twist(D, d);
  CHECK(h.as_braid() == Braid::generator(3, 1));
  CHECK(braid_eq((h * h).as_braid(), full_twist(3, 1, 2)));
  CHECK(elem_eq(h * h, dehn_twist(Cycle::standard_curve(D, 1, 2))));
  CHECK_THROWS_AS(base_half_twist(T, d), std::invalid_argument);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Cycle c = act(FiberElement::braid(D, testing::random_braid(rng, 3, 5)), Cycle::standard_curve(D, 2, 3));
    const PunctureArc e{1 + static_cast<int>(rng() % 2), testing::random_braid(rng, 3, 3)};
    const FiberElement he = base_half_twist(D, e);
    const Cycle enclosing = act(FiberElement::braid(D, e.carrier), Cycle::standard_curve(D, e.base, e.base + 1));
    CHECK(cycle_eq(act(he, act(he, c)), act(dehn_twist(enclosing), c)));
  }
}

TEST_CASE("Dehn twists are conjugation equivariant") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const FiberElement g = random_torus_element(rng);
    const Cycle c = testing::random_primitive_torus(rng);
    CHECK(elem_eq(dehn_twist(act(g, c)), g * dehn_twist(c) * g.inverse()));
  }
  const FiberModel S = FiberModel::symplectic_homology(2);
  std::uniform_int_distribution<long> d(-3, 3);
  auto random_sp_cycle = [&] {
    while (true) {
      std::vector<Integer> v{d(rng), d(rng), d(rng), d(rng)};
      Integer g = 0;
      for (auto& x : v) g = boost::multiprecision::gcd(g, x);
      if (g == 1) return Cycle::homology(S, v);
    }
  };
  for (int t = 0; t < 100; ++t) {
    FiberElement g = FiberElement::identity(S);
    for (int i = 0; i < 3; ++i) g = g * dehn_twist(random_sp_cycle());
    CHECK(is_symplectic(g.as_matrix()));
    const Cycle c = random_sp_cycle();
    CHECK(elem_eq(dehn_twist(act(g, c)), g * dehn_twist(c) * g.inverse()));
    CHECK(elem_eq(g * g.inverse(), FiberElement::identity(S)));
  }
  const FiberModel D = FiberModel::punctured_disc(4);
  for (int t = 0; t < 100; ++t) {
    const FiberElement g = FiberElement::braid(D, testing::random_braid(rng, 4, 6));
    const Cycle c = Cycle::standard_curve(D, 1 + static_cast<int>(rng() % 3), 4);
    CHECK(elem_eq(dehn_twist(act(g, c)), g * dehn_twist(c) * g.inverse()));
  }
}

TEST_CASE("Dehn twists fix their curve") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Cycle c = testing::random_primitive_torus(rng);
    CHECK(act(dehn_twist(c), c) == c);
  }
  const FiberModel S = FiberModel::symplectic_homology(3);
  const Cycle s = Cycle::homology(S, {1, 2, 0, -1, 3, 1});
  CHECK(act(dehn_twist(s), s) == s);
  CHECK(is_symplectic(dehn_twist(s).as_matrix()));
  const FiberModel D = FiberModel::punctured_disc(4);
  for (int t = 0; t < 50; ++t) {
    const Cycle c = act(FiberElement::braid(D, testing::random_braid(rng, 4, 6)), Cycle::standard_curve(D, 2, 3));
    CHECK(act(dehn_twist(c), c) == c);
  }
}

TEST_CASE("torus braid and commutation relations for small vectors") {
  std::vector<Cycle> cs;
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      if (boost::multiprecision::gcd(Integer(p), Integer(q)) == 1) cs.push_back(torus_cycle(p, q));
  for (const auto& a : cs)
    for (const auto& b : cs) {
      const auto in = intersection_number(a, b);
      const FiberElement ta = dehn_twist(a), tb = dehn_twist(b);
      if (in.value == 1) CHECK(elem_eq(ta * tb * ta, tb * ta * tb));
      if (in.value == 0) CHECK(elem_eq(ta * tb, tb * ta));
    }
}

TEST_CASE("lantern relation in the three-punctured disc") {
  const FiberModel D = FiberModel::punctured_disc(3);
  const FiberElement A12 = dehn_twist(Cycle::standard_curve(D, 1, 2));
  const FiberElement A23 = dehn_twist(Cycle::standard_curve(D, 2, 3));
  const FiberElement A13 = dehn_twist(Cycle::disc_curve(D, parse_free_word("x1 x2 x3 X2", 3)));
  CHECK(elem_eq(A12 * A13 * A23, FiberElement::braid(D, full_twist(3, 1, 3))));
  CHECK_FALSE(elem_eq(A12 * A23, FiberElement::braid(D, full_twist(3, 1, 3))));
}

TEST_CASE("witness search recovers short pushforwards") {
  const FiberModel D = FiberModel::punctured_disc(4);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const Braid b = testing::random_braid(rng, 4, 3);
    const Cycle pushed = act(FiberElement::braid(D, b), Cycle::standard_curve(D, 2, 3));
    const Cycle bare = Cycle::disc_curve(D, pushed.word());
    CHECK(elem_eq(dehn_twist(bare), FiberElement::braid(D, b * full_twist(4, 2, 3) * b.inverse())));
  }
  CHECK_THROWS_AS(dehn_twist(Cycle::disc_curve(D, parse_free_word("x1 x1", 4))), std::domain_error);
}

TEST_CASE("matrix entries grow beyond 64 bits without overflow") {
  const FiberElement t = dehn_twist(torus_cycle(1, 0)) * dehn_twist(torus_cycle(0, 1)).inverse();
  FiberElement g = FiberElement::identity(T);
  for (int i = 0; i < 60; ++i) g = g * t;
  CHECK(abs(g.as_matrix()(0, 0)) > Integer("18446744073709551616"));
  CHECK(is_symplectic(g.as_matrix()));
  CHECK(elem_eq(g * g.inverse(), FiberElement::identity(T)));
}

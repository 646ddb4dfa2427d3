#include <doctest.h>

#include <random>

#include "orientseq/ring_sequence.hpp"
#include "oracles.hpp"

using namespace orientseq;

namespace {
RingSequence seq(int q, std::vector<int> terms) { return RingSequence::from_ints(q, terms); }
WindowTuple tuple(int q, std::vector<int> entries) {
  WindowTuple t;
  t.q = q;
  for (int e : entries) t.entries.push_back(static_cast<Symbol>(e));
  return t;
}
}  // namespace

TEST_CASE("ring sequence validation") {
  CHECK_THROWS_AS(RingSequence(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(RingSequence(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(RingSequence::from_ints(3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(RingSequence::from_ints(3, {-1}), std::invalid_argument);
  CHECK(seq(3, {0, 1, 2}).period() == 3);
}

TEST_CASE("window with wraparound") {
  const RingSequence s = seq(5, {0, 1, 2, 3, 4, 0, 2, 4, 1, 3});
  CHECK(window(s, 8, 3) == tuple(5, {1, 3, 0}));
  CHECK(window(s, 0, 1) == tuple(5, {0}));
  CHECK(window(seq(3, {0, 1, 2}), 2, 2) == tuple(3, {2, 0}));
  CHECK(window(s, -1, 2) == tuple(5, {3, 0}));  // negative indices reduce mod m
  CHECK_THROWS_AS(window(s, 0, 0), std::invalid_argument);
}

TEST_CASE("reverse") {
  CHECK(reverse(tuple(9, {0, 1, 2})) == tuple(9, {2, 1, 0}));
  CHECK(reverse(tuple(9, {7, 7})) == tuple(9, {7, 7}));
  CHECK(reverse(tuple(9, {5, 1, 8, 3, 6})) == tuple(9, {6, 3, 8, 1, 5}));
}

TEST_CASE("negate") {
  CHECK(negate(seq(9, {0, 1, 2, 3, 4, 0, 2, 4, 1, 3})) == seq(9, {0, 8, 7, 6, 5, 0, 7, 5, 8, 6}));
  CHECK(negate(tuple(7, {0, 0, 0})) == tuple(7, {0, 0, 0}));
  CHECK(negate(seq(10, {5})) == seq(10, {5}));  // self-negative element for even q
}

TEST_CASE("reverse and negate are commuting involutions") {
  // exhaustive over all tuples with q <= 6, n <= 4
  for (int q = 2; q <= 6; ++q) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> digits(static_cast<std::size_t>(n), 0);
      while (true) {
        WindowTuple t = tuple(q, digits);
        CHECK(reverse(reverse(t)) == t);
        CHECK(negate(negate(t)) == t);
        CHECK(negate(reverse(t)) == reverse(negate(t)));
        int pos = n - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == q)
          digits[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
      }
    }
  }
}

TEST_CASE("translate") {
  CHECK(translate(seq(3, {0, 1, 2}), 0) == seq(3, {0, 1, 2}));
  CHECK(translate(seq(3, {0, 1, 2}), 1) == seq(3, {1, 2, 0}));
  CHECK(translate(seq(5, {0, 2, 4}), 3) == seq(5, {3, 0, 2}));
  CHECK(translate(seq(5, {0, 2, 4}), Residue(3, 5)) == seq(5, {3, 0, 2}));
  CHECK_THROWS_AS(translate(seq(5, {0}), Residue(1, 7)), std::invalid_argument);
}

TEST_CASE("translate preserves period and the difference multiset") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 9);
    const RingSequence s = oracles::random_sequence(rng, q, 1 + rng() % 40);
    const int lambda = static_cast<int>(rng() % static_cast<unsigned>(q));
    const RingSequence t = translate(s, lambda);
    REQUIRE(t.period() == s.period());
    for (std::size_t i = 0; i < s.period(); ++i) {
      const int ds = reduce_mod(static_cast<int>(s.at(static_cast<std::int64_t>(i) + 1)) - s[i], q);
      const int dt = reduce_mod(static_cast<int>(t.at(static_cast<std::int64_t>(i) + 1)) - t[i], q);
      CHECK(ds == dt);
    }
  }
}

TEST_CASE("weight and weight_mod") {
  const RingSequence sprime = seq(9, {0, 1, 2, 3, 4, 0, 2, 4, 1, 3});
  CHECK(weight(sprime) == 20);
  CHECK(weight_mod(sprime) == 2);
  CHECK(weight(seq(4, {0, 0, 0})) == 0);
  CHECK(weight_mod(seq(4, {0, 0, 0})) == 0);
}

TEST_CASE("weight of a ring plus its negative vanishes") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 14);
    const RingSequence s = oracles::random_sequence(rng, q, 1 + rng() % 30);
    CHECK((weight_mod(s) + weight_mod(negate(s))) % q == 0);
  }
}

TEST_CASE("embed_E") {
  CHECK(embed_E(seq(5, {0, 1, 2, 3, 4}), 9) == seq(9, {0, 1, 2, 3, 4}));
  CHECK(embed_E(seq(5, {4, 4}), 11) == seq(11, {4, 4}));
  CHECK(embed_E(seq(5, {0, 1}), 6) == seq(6, {0, 1}));
  CHECK_THROWS_AS(embed_E(seq(5, {0}), 5), std::invalid_argument);
  CHECK_THROWS_AS(embed_E(seq(5, {0}), 4), std::invalid_argument);
}

TEST_CASE("map_M bands") {
  CHECK(map_M(seq(12, {0, 11, 8, 0, 10}), 5) == seq(5, {0, 1, 4, 0, 2}));
  CHECK(map_M(seq(12, {6}), 5) == seq(5, {0}));
  CHECK_THROWS_AS(map_M(seq(8, {0}), 5), std::invalid_argument);  // q' < 2q-1

  // M(-y) = M(y) on every residue of Z_12 at q = 5
  for (int y = 0; y < 12; ++y) {
    const RingSequence a = map_M(seq(12, {y}), 5);
    const RingSequence b = map_M(negate(seq(12, {y})), 5);
    CHECK(a == b);
  }
}

TEST_CASE("map_M inverts embed_E, also through negation") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 9);
    const int q_prime = 2 * q - 1 + static_cast<int>(rng() % 10);
    const RingSequence s = oracles::random_sequence(rng, q, 1 + rng() % 25);
    const RingSequence e = embed_E(s, q_prime);
    CHECK(map_M(e, q) == s);
    CHECK(map_M(negate(e), q) == s);
  }
}

TEST_CASE("rotation, canonical form and least period") {
  const RingSequence s = seq(4, {2, 0, 1, 3});
  CHECK(s.rotated(1) == seq(4, {0, 1, 3, 2}));
  CHECK(s.rotated(4) == s);
  CHECK(s.canonical() == seq(4, {0, 1, 3, 2}));

  CHECK(seq(3, {1, 2, 1, 2}).least_period() == 2);
  CHECK(seq(3, {1, 2, 0, 1}).least_period() == 4);
  CHECK(seq(3, {2, 2, 2}).least_period() == 1);

  std::mt19937 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int q = 2 + static_cast<int>(rng() % 5);
    const RingSequence r = oracles::random_sequence(rng, q, 1 + rng() % 24);
    CHECK(r.canonical() == oracles::naive_canonical(r));
    CHECK(r.canonical().canonical() == r.canonical());
  }
}

TEST_CASE("concat and erase_run") {
  CHECK(concat(seq(5, {0, 1}), seq(5, {2})) == seq(5, {0, 1, 2}));
  CHECK_THROWS_AS(concat(seq(5, {0}), seq(6, {0})), std::invalid_argument);
  CHECK(erase_run(seq(5, {0, 1, 2, 3, 4}), 1, 3) == seq(5, {0, 4}));
  CHECK_THROWS_AS(erase_run(seq(5, {0, 1}), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(erase_run(seq(5, {0, 1}), 1, 2), std::invalid_argument);
}

TEST_CASE("residue arithmetic") {
  CHECK(reduce_mod(-1, 5) == 4);
  CHECK(reduce_mod(12, 5) == 2);
  CHECK((Residue(2, 5) + Residue(4, 5)).value == 1);
  CHECK((Residue(2, 5) - Residue(4, 5)).value == 3);
  CHECK((-Residue(0, 5)).value == 0);
  CHECK((-Residue(2, 5)).value == 3);
  CHECK_THROWS_AS(Residue(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(Residue(2, 5) + Residue(2, 7), std::invalid_argument);
}

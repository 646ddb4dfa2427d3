#include <doctest.h>

#include "orientseq/bounds.hpp"

using namespace orientseq;

TEST_CASE("closed-form bound values") {
  CHECK(sos_bound(5, 2) == 8);
  CHECK(sos_bound(11, 2) == 50);
  CHECK(sos_bound(2, 3) == 2);
  CHECK(sos_bound(2, 2) == 1);
  CHECK(sos_bound(31, 2) == 450);
  CHECK_THROWS_AS(sos_bound(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sos_bound(5, 1), std::invalid_argument);
}

TEST_CASE("oracle breakdown for q=5, n=2") {
  BoundBreakdown b = sos_bound_oracle(5, 2);
  CHECK(b.count_fixed_both == 1);
  CHECK(b.count_negself == 0);
  CHECK(b.count_palindromic == 4);
  CHECK(b.count_antipalindromic == 4);
  CHECK(b.count_free == 16);
  CHECK(b.total() == 25);
  CHECK(b.bound == 8);
}

TEST_CASE("oracle breakdown for q=2, n=2") {
  BoundBreakdown b = sos_bound_oracle(2, 2);
  CHECK(b.count_fixed_both == 2);
  CHECK(b.count_negself == 2);
  CHECK(b.bound == 1);
}

TEST_CASE("oracle guard") {
  CHECK_THROWS_AS(sos_bound_oracle(10, 8, 1000), error);
  CHECK_NOTHROW(sos_bound_oracle(10, 3, 1000));
}

TEST_CASE("per-class counts match the proof's closed forms") {
  auto p = [](std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
  };
  for (int q = 2; q <= 7; ++q) {
    for (int n = 2; n <= 6; ++n) {
      BoundBreakdown b = sos_bound_oracle(q, n);
      CAPTURE(q);
      CAPTURE(n);
      const std::uint64_t Q = static_cast<std::uint64_t>(q);
      CHECK(b.total() == p(Q, n));
      if (q % 2 != 0 && n % 2 != 0) {
        CHECK(b.count_fixed_both == 1);
        CHECK(b.count_negself == 0);
        CHECK(b.count_palindromic == p(Q, (n + 1) / 2) - 1);
        CHECK(b.count_antipalindromic == p(Q, (n - 1) / 2) - 1);
      } else if (q % 2 != 0) {
        CHECK(b.count_fixed_both == 1);
        CHECK(b.count_negself == 0);
        CHECK(b.count_palindromic == p(Q, n / 2) - 1);
        CHECK(b.count_antipalindromic == p(Q, n / 2) - 1);
      } else if (n % 2 != 0) {
        CHECK(b.count_fixed_both == p(2, (n + 1) / 2));
        CHECK(b.count_negself == p(2, n) - p(2, (n + 1) / 2));
        CHECK(b.count_palindromic == p(Q, (n + 1) / 2) - p(2, (n + 1) / 2));
        CHECK(b.count_antipalindromic == 2 * p(Q, (n - 1) / 2) - p(2, (n + 1) / 2));
      } else {
        CHECK(b.count_fixed_both == p(2, n / 2));
        CHECK(b.count_negself == p(2, n) - p(2, n / 2));
        CHECK(b.count_palindromic == p(Q, n / 2) - p(2, n / 2));
        CHECK(b.count_antipalindromic == p(Q, n / 2) - p(2, n / 2));
      }
    }
  }
}

TEST_CASE("closed form equals the enumeration oracle") {
  for (int q = 2; q <= 8; ++q)
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      CHECK(sos_bound(q, n) == sos_bound_oracle(q, n).bound);
    }
}

TEST_CASE("os2_max_period") {
  CHECK(os2_max_period(5) == 10);
  CHECK(os2_max_period(6) == 12);
  CHECK(os2_max_period(3) == 3);
  CHECK_THROWS_AS(os2_max_period(2), std::invalid_argument);
}

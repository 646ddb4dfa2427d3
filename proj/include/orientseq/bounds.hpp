#pragma once

#include <cstdint>

#include "orientseq/ring_sequence.hpp"

namespace orientseq {

/// Closed-form upper bound on the period of a special orientable sequence
/// over Z_q with window length n; one of four expressions selected by the
/// parities of q and n. Requires q > 1, n > 1.
std::uint64_t sos_bound(int q, int n);

/// Per-tuple classification of all q^n windows by the relations among
/// s, s^R, -s, -s^R. The five counts partition the tuple space and the bound
/// is (count_negself + count_free) / 2.
struct BoundBreakdown {
  int q = 0;
  int n = 0;
  std::uint64_t count_fixed_both = 0;      // s = s^R = -s = -s^R
  std::uint64_t count_negself = 0;         // s = -s, s != s^R
  std::uint64_t count_palindromic = 0;     // s = s^R, s != -s
  std::uint64_t count_antipalindromic = 0; // s = -s^R, s != s^R
  std::uint64_t count_free = 0;            // all four distinct
  std::uint64_t bound = 0;

  std::uint64_t total() const {
    return count_fixed_both + count_negself + count_palindromic + count_antipalindromic +
           count_free;
  }
};

inline constexpr std::uint64_t kDefaultTupleGuard = 10'000'000;

/// Enumerates all q^n tuples and classifies each one. Guarded: throws when
/// q^n exceeds max_tuples (override via the guard parameter or, in the CLI,
/// the ORIENTSEQ_MAX_TUPLES environment variable).
BoundBreakdown sos_bound_oracle(int q, int n, std::uint64_t max_tuples = kDefaultTupleGuard);

/// Maximal period of an orientable sequence of order 2 over Z_q:
/// q(q-1)/2 for odd q, q(q-2)/2 for even q. Requires q >= 3.
std::uint64_t os2_max_period(int q);

}  // namespace orientseq

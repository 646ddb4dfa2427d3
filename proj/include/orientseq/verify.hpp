#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orientseq/ring_sequence.hpp"

namespace orientseq {

enum class ViolationKind { duplicate_window, reverse_match, negative_reverse_match };

const char* to_string(ViolationKind k);

/// Witness for a failed uniqueness check: the window at i equals the window
/// at j (directly, reversed, or negated-reversed). Always the
/// lexicographically first such (i, j); self-comparisons (i == j) included.
struct Violation {
  ViolationKind kind = ViolationKind::duplicate_window;
  std::size_t i = 0;
  std::size_t j = 0;
  WindowTuple tuple;
};

struct CheckResult {
  bool ok = false;
  std::optional<Violation> violation;
  explicit operator bool() const noexcept { return ok; }
};

/// True iff all period-many n-windows are pairwise distinct. n >= 2.
CheckResult check_window(const RingSequence& s, int n);

/// True iff check_window holds and no window equals the reverse of any
/// window (palindromic windows fail against themselves).
CheckResult check_orientable(const RingSequence& s, int n);

/// As check_orientable with the negated reverse.
CheckResult check_negative_orientable(const RingSequence& s, int n);

/// orientable and negative orientable.
bool check_special(const RingSequence& s, int n);

/// Longest cyclic run of the zero residue is at most n-2; for n = 2 this
/// means zero-free. An all-zero ring is never good.
bool check_good(const RingSequence& s, int n);

/// Helper behind check_good; returns the period when every term is zero.
std::size_t longest_zero_run(const RingSequence& s);

/// The three disjointness flags of the s-disjoint definition, checked between
/// two rings over the same modulus.
struct DisjointResult {
  bool tuple_disjoint = false;
  bool o_disjoint = false;
  bool n_disjoint = false;
  bool s_disjoint() const noexcept { return tuple_disjoint && o_disjoint && n_disjoint; }
};

DisjointResult check_disjoint(const RingSequence& s, const RingSequence& t, int n);

/// Aggregated verdicts for one ring at one window length, with the first
/// witness for each failing uniqueness check.
struct PropertyReport {
  int q = 0;
  int n = 0;
  std::size_t period = 0;
  std::uint64_t weight = 0;
  int weight_mod = 0;
  bool is_window = false;
  bool is_orientable = false;
  bool is_negative_orientable = false;
  bool is_special = false;
  bool is_good = false;
  std::vector<Violation> violations;
};

PropertyReport report(const RingSequence& s, int n);

/// Deterministic single-line JSON rendering (ordered keys).
std::string to_json(const PropertyReport& r);

}  // namespace orientseq

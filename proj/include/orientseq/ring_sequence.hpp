#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orientseq {

/// Raw storage for one residue. Moduli up to 2^16 are supported, so every
/// residue value fits a 16-bit integer.
using Symbol = std::uint16_t;

inline constexpr int kMinModulus = 2;
inline constexpr int kMaxModulus = 1 << 16;
inline constexpr std::size_t kMaxPeriod = std::size_t{1} << 28;

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced an output that violates its own contract.
/// Every pipeline re-verifies the properties it promises, so
/// seeing this exception means a bug, never a silently wrong sequence.
class certification_error : public error {
 public:
  using error::error;
};

/// Malformed sequence file; carries 1-based line/column of the offending byte.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reduces an arbitrary integer into [0, q).
int reduce_mod(long long value, int q);

/// An element of Z_q. All arithmetic stays inside one modulus; mixing moduli
/// throws.
struct Residue {
  int value = 0;
  int modulus = kMinModulus;

  Residue() = default;
  Residue(int v, int q);

  /// Residue of an arbitrary integer.
  static Residue reduce(long long v, int q) { return Residue(reduce_mod(v, q), q); }

  Residue operator-() const { return Residue(reduce_mod(-value, modulus), modulus); }
  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend bool operator==(Residue a, Residue b) = default;
};

/// A finite cyclic word over Z_q. The stored length is the period of the
/// corresponding periodic sequence; it is not reduced to the least period
/// (use least_period() for that). Indexing is cyclic, equality positional.
class RingSequence {
 public:
  RingSequence(int q, std::vector<Symbol> terms);

  /// Convenience constructor; every value must already lie in [0, q).
  static RingSequence from_ints(int q, const std::vector<int>& terms);

  int q() const noexcept { return q_; }
  std::size_t period() const noexcept { return terms_.size(); }
  const std::vector<Symbol>& terms() const noexcept { return terms_; }

  /// Cyclic access: any integer index is reduced mod the period.
  Symbol at(std::int64_t i) const noexcept;
  /// Raw access, i < period().
  Symbol operator[](std::size_t i) const noexcept { return terms_[i]; }

  bool operator==(const RingSequence&) const = default;

  /// Ring rotated left by `offset`: result[i] = this[(offset + i) mod m].
  RingSequence rotated(std::size_t offset) const;

  /// Lexicographically least rotation (Booth's algorithm); use this for
  /// rotation-invariant comparisons.
  RingSequence canonical() const;

  /// Smallest divisor d of the period such that rotating by d fixes the ring.
  std::size_t least_period() const;

  std::string to_string() const;

 private:
  int q_;
  std::vector<Symbol> terms_;
};

/// An n-tuple of residues; the object of every uniqueness check.
struct WindowTuple {
  int q = kMinModulus;
  std::vector<Symbol> entries;

  bool operator==(const WindowTuple&) const = default;
  std::string to_string() const;
};

/// The window (s_i, ..., s_{i+n-1}) with cyclic wraparound; n >= 1, any i.
WindowTuple window(const RingSequence& s, std::int64_t i, int n);

/// (u_0,...,u_{n-1}) -> (u_{n-1},...,u_0). An involution.
WindowTuple reverse(WindowTuple t);

/// Entry-wise x -> (q - x) mod q. An involution; commutes with reverse.
WindowTuple negate(WindowTuple t);
RingSequence negate(const RingSequence& s);

/// Adds lambda to every term mod q. Preserves period and the multiset of
/// consecutive differences.
RingSequence translate(const RingSequence& s, int lambda);
RingSequence translate(const RingSequence& s, Residue lambda);

/// Integer sum of one period's terms, and that sum mod q.
std::uint64_t weight(const RingSequence& s);
int weight_mod(const RingSequence& s);

/// E_{q,q'}: re-reads each residue of Z_q as the residue of Z_{q'} with the
/// same integer representative. Requires q' > q.
RingSequence embed_E(const RingSequence& s, int q_prime);

/// M_{q,q'}: Z_{q'} -> Z_q by bands: y for y <= q-1, 0 for the middle band,
/// q'-y for the top band. Requires q' >= 2q-1 so the bands do not overlap.
/// Satisfies M(-y) = M(y), hence M(E(x)) = M(-E(x)) = x.
RingSequence map_M(const RingSequence& s, int q);
Symbol map_M_symbol(Symbol y, int q, int q_prime);

/// Ring concatenation; both inputs must share a modulus.
RingSequence concat(const RingSequence& a, const RingSequence& b);

/// Removes `count` consecutive terms starting at `start` (no wraparound).
RingSequence erase_run(const RingSequence& s, std::size_t start, std::size_t count);

}  // namespace orientseq

#include "orientseq/bounds.hpp"

#include <stdexcept>
#include <vector>

namespace orientseq {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw error("integer overflow in power computation");
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t sos_bound(int q, int n) {
  if (q <= 1) throw std::invalid_argument("sos_bound requires q > 1");
  if (n <= 1) throw std::invalid_argument("sos_bound requires n > 1");
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  const bool q_odd = q % 2 != 0;
  const bool n_odd = n % 2 != 0;
  if (q_odd && n_odd) {
    // (q^n - q^{(n+1)/2} - q^{(n-1)/2} + 1) / 2
    return (ipow(Q, n) - ipow(Q, (n + 1) / 2) - ipow(Q, (n - 1) / 2) + 1) / 2;
  }
  if (q_odd && !n_odd) {
    // (q^n - 2q^{n/2} + 1) / 2
    return (ipow(Q, n) - 2 * ipow(Q, n / 2) + 1) / 2;
  }
  if (!q_odd && n_odd) {
    // (q^n - q^{(n+1)/2} - 2q^{(n-1)/2} + 2^{(n+3)/2} - 2^{(n+1)/2}) / 2
    return (ipow(Q, n) - ipow(Q, (n + 1) / 2) - 2 * ipow(Q, (n - 1) / 2) + ipow(2, (n + 3) / 2) -
            ipow(2, (n + 1) / 2)) /
           2;
  }
  // q and n both even: (q^n - 2q^{n/2} + 2^{(n+2)/2} - 2^{n/2}) / 2
  return (ipow(Q, n) - 2 * ipow(Q, n / 2) + ipow(2, (n + 2) / 2) - ipow(2, n / 2)) / 2;
}

BoundBreakdown sos_bound_oracle(int q, int n, std::uint64_t max_tuples) {
  if (q <= 1) throw std::invalid_argument("sos_bound_oracle requires q > 1");
  if (n <= 1) throw std::invalid_argument("sos_bound_oracle requires n > 1");
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), n);
  if (total > max_tuples)
    throw error("sos_bound_oracle: q^n exceeds the enumeration guard of " +
                std::to_string(max_tuples) + " tuples");

  BoundBreakdown b;
  b.q = q;
  b.n = n;

  std::vector<int> s(static_cast<std::size_t>(n), 0);
  const auto nn = static_cast<std::size_t>(n);
  for (std::uint64_t count = 0; count < total; ++count) {
    bool eq_reverse = true;   // s == s^R
    bool eq_negself = true;   // s == -s
    bool eq_negrev = true;    // s == -s^R
    for (std::size_t i = 0; i < nn; ++i) {
      const int a = s[i];
      const int r = s[nn - 1 - i];
      if (a != r) eq_reverse = false;
      if (a != (q - a) % q) eq_negself = false;
      if (a != (q - r) % q) eq_negrev = false;
    }
    if (eq_reverse && eq_negself)
      ++b.count_fixed_both;
    else if (eq_negself)
      ++b.count_negself;
    else if (eq_reverse)
      ++b.count_palindromic;
    else if (eq_negrev)
      ++b.count_antipalindromic;
    else
      ++b.count_free;

    // next tuple (odometer)
    for (std::size_t i = nn; i-- > 0;) {
      if (++s[i] < q) break;
      s[i] = 0;
    }
  }
  b.bound = (b.count_negself + b.count_free) / 2;
  return b;
}

std::uint64_t os2_max_period(int q) {
  if (q < 3) throw std::invalid_argument("os2_max_period requires q >= 3");
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  return q % 2 != 0 ? Q * (Q - 1) / 2 : Q * (Q - 2) / 2;
}

}  // namespace orientseq

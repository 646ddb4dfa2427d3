#include "orientseq/lempel.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "orientseq/constructions.hpp"
#include "orientseq/verify.hpp"
#include "window_key.hpp"

namespace orientseq {

namespace {

void certify(bool condition, const std::string& what) {
  if (!condition) throw certification_error(what);
}

int mod_inverse(int a, int q) {
  // extended Euclid; a must be a unit mod q
  int old_r = a % q, r = q;
  int old_s = 1, s = 0;
  while (r != 0) {
    int quot = old_r / r;
    int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("beta is not a unit mod q");
  return reduce_mod(old_s, q);
}

}  // namespace

RingSequence d_beta(const RingSequence& s, int beta) {
  const int q = s.q();
  const int b = reduce_mod(beta, q);
  const std::size_t m = s.period();
  std::vector<Symbol> t(m);
  for (std::size_t j = 0; j < m; ++j) {
    const long long diff = static_cast<long long>(s.at(static_cast<std::int64_t>(j) + 1)) -
                           static_cast<long long>(s[j]);
    t[j] = static_cast<Symbol>(reduce_mod(b * diff, q));
  }
  return RingSequence(q, std::move(t));
}

RingSequence d_inverse(const RingSequence& s, int start, int beta) {
  const int q = s.q();
  const int binv = mod_inverse(reduce_mod(beta, q), q);
  const std::size_t m = s.period();
  const int step_weight = reduce_mod(static_cast<long long>(binv) * weight_mod(s), q);
  const std::size_t passes = static_cast<std::size_t>(q / std::gcd(step_weight, q));
  std::vector<Symbol> t;
  t.reserve(passes * m);
  int cur = reduce_mod(start, q);
  for (std::size_t j = 0; j < passes * m; ++j) {
    t.push_back(static_cast<Symbol>(cur));
    cur = reduce_mod(cur + static_cast<long long>(binv) * s[j % m], q);
  }
  certify(cur == reduce_mod(start, q), "d_inverse: lift did not close");
  return RingSequence(q, std::move(t));
}

namespace {

using detail::Key;
using detail::KeyHash;

Key pack(const std::vector<Symbol>& w) {
  Key k = 0;
  for (Symbol e : w) k = (k << 16) | e;
  return k;
}

Key pack_reversed(const std::vector<Symbol>& w) {
  Key k = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) k = (k << 16) | *it;
  return k;
}

Key pack_negated_reversed(const std::vector<Symbol>& w, int q) {
  Key k = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    k = (k << 16) | static_cast<Symbol>(*it == 0 ? 0 : q - *it);
  return k;
}

RingSequence insert_symbol(const RingSequence& t, std::size_t pos, Symbol a) {
  std::vector<Symbol> out;
  out.reserve(t.period() + 1);
  out.insert(out.end(), t.terms().begin(), t.terms().begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(a);
  out.insert(out.end(), t.terms().begin() + static_cast<std::ptrdiff_t>(pos), t.terms().end());
  return RingSequence(t.q(), std::move(out));
}

bool full_pass(const RingSequence& candidate, int n) {
  return check_special(candidate, n) && check_good(candidate, n);
}

// Incremental screen for inserting `a` before ring index i. Exact: accepts a
// position iff the full certification suite accepts the resulting ring.
class InsertionScreen {
 public:
  InsertionScreen(const RingSequence& t, Symbol a, int n)
      : t_(t), terms_(t.terms()), m_(t.period()), q_(t.q()), a_(a), n_(static_cast<std::size_t>(n)) {
    windows_.reserve(m_ * 2);
    for (std::size_t i = 0; i < m_; ++i) windows_.insert(forward_key(i));
    scan_zero_runs();
  }

  bool zero_runs_stay_short(std::size_t i) const {
    const std::size_t limit = n_ - 2;
    // Zero runs touching the insertion gap, capped: caps beyond the limit
    // only ever make the answer "no", which is what an over-long run needs.
    const std::size_t cap = n_ + 1;
    std::size_t left = 0;
    while (left < cap && terms_[(i + m_ - 1 - left) % m_] == 0) ++left;
    std::size_t right = 0;
    while (right < cap && terms_[(i + right) % m_] == 0) ++right;

    if (a_ == 0) return bad_runs_ == 0 && left + 1 + right <= limit;
    if (left > 0 && right > 0) {
      // splits one run into two
      const bool affected_bad = left + right > limit;
      return bad_runs_ == (affected_bad ? 1u : 0u) && left <= limit && right <= limit;
    }
    return bad_runs_ == 0;
  }

  bool windows_stay_special(std::size_t i) const {
    // Windows of T spanning the gap disappear; n windows containing the new
    // symbol appear. Everything else is untouched, so only the new windows
    // need checking against W \ removed and against each other.
    std::vector<Key> removed;
    removed.reserve(n_ - 1);
    for (std::size_t d = 1; d < n_; ++d) removed.push_back(forward_key((i + m_ - d) % m_));

    std::vector<Symbol> local(2 * n_ - 1);
    for (std::size_t k = 0; k < n_ - 1; ++k) local[k] = terms_[(i + m_ - (n_ - 1) + k) % m_];
    local[n_ - 1] = a_;
    for (std::size_t k = 0; k < n_ - 1; ++k) local[n_ + k] = terms_[(i + k) % m_];

    std::vector<Key> fresh;
    fresh.reserve(n_);
    std::vector<Symbol> w(n_);
    auto in_survivors = [&](Key k) {
      return windows_.count(k) != 0 && std::find(removed.begin(), removed.end(), k) == removed.end();
    };
    for (std::size_t o = 0; o < n_; ++o) {
      std::copy(local.begin() + static_cast<std::ptrdiff_t>(o),
                local.begin() + static_cast<std::ptrdiff_t>(o + n_), w.begin());
      const Key fk = pack(w);
      if (in_survivors(fk)) return false;
      if (std::find(fresh.begin(), fresh.end(), fk) != fresh.end()) return false;
      fresh.push_back(fk);
    }
    for (std::size_t o = 0; o < n_; ++o) {
      std::copy(local.begin() + static_cast<std::ptrdiff_t>(o),
                local.begin() + static_cast<std::ptrdiff_t>(o + n_), w.begin());
      const Key rk = pack_reversed(w);
      const Key nk = pack_negated_reversed(w, q_);
      if (in_survivors(rk) || in_survivors(nk)) return false;
      if (std::find(fresh.begin(), fresh.end(), rk) != fresh.end()) return false;
      if (std::find(fresh.begin(), fresh.end(), nk) != fresh.end()) return false;
    }
    return true;
  }

 private:
  Key forward_key(std::size_t i) const {
    Key k = 0;
    for (std::size_t j = 0; j < n_; ++j) k = (k << 16) | terms_[(i + j) % m_];
    return k;
  }

  void scan_zero_runs() {
    std::size_t anchor = m_;
    for (std::size_t i = 0; i < m_; ++i)
      if (terms_[i] != 0) {
        anchor = i;
        break;
      }
    if (anchor == m_) return;  // all-zero never reaches the screen (not special)
    std::size_t run = 0;
    for (std::size_t k = 1; k <= m_; ++k) {
      if (terms_[(anchor + k) % m_] == 0) {
        ++run;
      } else {
        if (run > n_ - 2) ++bad_runs_;
        run = 0;
      }
    }
  }

  const RingSequence& t_;
  const std::vector<Symbol>& terms_;
  std::size_t m_;
  int q_;
  Symbol a_;
  std::size_t n_;
  std::unordered_set<Key, KeyHash> windows_;
  std::size_t bad_runs_ = 0;
};

}  // namespace

RingSequence extend_Ea(const RingSequence& t, int a_in, int n) {
  if (n < 2) throw std::invalid_argument("extend_Ea requires n >= 2");
  if (!check_special(t, n)) throw std::invalid_argument("extend_Ea: input is not special");
  const std::size_t m = t.period();
  const Symbol a = static_cast<Symbol>(reduce_mod(a_in, t.q()));

  // Candidate order: one representative insertion per maximal run of the
  // symbol a (every position inside or adjacent to a run yields the same
  // ring), then the remaining positions, all in ring order.
  std::vector<std::size_t> candidates;
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (t[i] != a || t[(i + m - 1) % m] == a) continue;  // i starts a maximal run
    candidates.push_back(i);
    std::size_t len = 0;
    while (len < m && t[(i + len) % m] == a) ++len;
    for (std::size_t d = 0; d <= len && d < m; ++d) seen[(i + d) % m] = true;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!seen[i]) candidates.push_back(i);

  if (m < 2 * static_cast<std::size_t>(n) + 2) {
    for (std::size_t i : candidates) {
      RingSequence candidate = insert_symbol(t, i, a);
      if (full_pass(candidate, n)) return candidate;
    }
    throw error("extend_Ea: no insertion position passes certification");
  }

  InsertionScreen screen(t, a, n);
  for (std::size_t i : candidates) {
    if (!screen.zero_runs_stay_short(i)) continue;
    if (!screen.windows_stay_special(i)) continue;
    RingSequence candidate = insert_symbol(t, i, a);
    certify(full_pass(candidate, n), "extend_Ea: screen and full certification disagree");
    certify(candidate.period() == m + 1, "extend_Ea: period is not m+1");
    return candidate;
  }
  throw error("extend_Ea: no insertion position passes certification");
}

RingSequence tower(const RingSequence& s_start, int n_start, int target_n) {
  if (n_start < 2) throw std::invalid_argument("tower requires n_start >= 2");
  if (target_n < n_start) throw std::invalid_argument("tower requires target_n >= n_start");
  const int q = s_start.q();
  if (!check_special(s_start, n_start)) throw std::invalid_argument("tower: starter is not special");
  if (!check_good(s_start, n_start)) throw std::invalid_argument("tower: starter is not good");
  if (std::gcd(weight_mod(s_start), q) != 1)
    throw std::invalid_argument("tower: starter weight is not coprime to q");

  RingSequence level = s_start;
  for (int order = n_start; order < target_n; ++order) {
    RingSequence lift = d_inverse(level, 0);
    certify(lift.period() == static_cast<std::size_t>(q) * level.period(),
            "tower: lift period is not q*m");
    certify(check_special(lift, order + 1), "tower: lift is not special");
    const int a = reduce_mod(1 - weight_mod(lift), q);
    level = extend_Ea(lift, a, order + 1);
    certify(level.period() == lift.period() + 1, "tower: level period is not q*m + 1");
    certify(weight_mod(level) == 1, "tower: level weight is not 1");
  }
  return level;
}

std::uint64_t sos3_period(int q_prime) {
  if (q_prime < 11) throw std::invalid_argument("sos3_period requires q' >= 11");
  const std::uint64_t Q = static_cast<std::uint64_t>(q_prime);
  switch (q_prime % 4) {
    case 0: return (Q * Q * Q - 6 * Q * Q + 2 * Q) / 2;
    case 1: return (Q * Q * Q - 6 * Q * Q - Q) / 2;
    case 2: return (Q * Q * Q - 8 * Q * Q + 6 * Q) / 2;
    default: return (Q * Q * Q - 4 * Q * Q - 3 * Q) / 2;
  }
}

RingSequence sos3(int q_prime) {
  if (q_prime < 11) throw std::invalid_argument("sos3 requires q' >= 11");
  const int q = q_prime % 2 != 0 ? (q_prime - 1) / 2 : (q_prime - 2) / 2;
  RingSequence ustar = make_U_star(q, q_prime);
  RingSequence lift = d_inverse(ustar, 0);
  certify(lift.period() == static_cast<std::size_t>(q_prime) * ustar.period(),
          "sos3: lift period is not q'*m");
  certify(lift.period() == sos3_period(q_prime), "sos3: period does not match the closed form");
  certify(check_special(lift, 3), "sos3: lift is not special of order 3");
  return lift;
}

std::uint64_t sos_general_period(int q_prime, int n) {
  if (q_prime < 12) throw std::invalid_argument("sos_general_period requires q' >= 12");
  if (n < 2) throw std::invalid_argument("sos_general_period requires n >= 2");
  const int q = q_prime % 2 == 0 ? (q_prime - 2) / 2 : (q_prime - 3) / 2;
  const std::uint64_t m2 =
      q % 2 != 0 ? 2ull * q * (q - 1) - 3 : 2ull * q * (q - 2) - 3;
  std::uint64_t power = 1;  // q'^{n-2}
  for (int i = 0; i < n - 2; ++i) power *= static_cast<std::uint64_t>(q_prime);
  return power * m2 + (power - 1) / static_cast<std::uint64_t>(q_prime - 1);
}

RingSequence sos_general(int q_prime, int n) {
  if (q_prime < 12) throw std::invalid_argument("sos_general requires q' >= 12");
  if (n < 2) throw std::invalid_argument("sos_general requires n >= 2");
  const int q = q_prime % 2 == 0 ? (q_prime - 2) / 2 : (q_prime - 3) / 2;
  RingSequence base = make_U_starstar(q, q_prime);
  RingSequence out = tower(base, 2, n);
  certify(out.period() == sos_general_period(q_prime, n),
          "sos_general: period does not match the closed form");
  certify(check_good(out, n), "sos_general: output is not good");
  return out;
}

}  // namespace orientseq

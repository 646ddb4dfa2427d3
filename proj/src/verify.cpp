#include "orientseq/verify.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <json.hpp>

#include "window_key.hpp"

namespace orientseq {

namespace {

using detail::Key;
using detail::KeyHash;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_order(int n) {
  if (n < 2) throw std::invalid_argument("window length n must be at least 2");
  if (n > detail::kMaxHashedWindow)
    throw std::invalid_argument("window length above 8 is not supported");
}

inline Key pack_forward(const std::vector<Symbol>& t, std::size_t m, std::size_t i, int n) {
  Key k = 0;
  for (int j = 0; j < n; ++j) k = (k << 16) | t[(i + static_cast<std::size_t>(j)) % m];
  return k;
}

inline Key pack_reverse(const std::vector<Symbol>& t, std::size_t m, std::size_t i, int n) {
  Key k = 0;
  for (int j = n - 1; j >= 0; --j) k = (k << 16) | t[(i + static_cast<std::size_t>(j)) % m];
  return k;
}

inline Key pack_negated_reverse(const std::vector<Symbol>& t, std::size_t m, std::size_t i, int n,
                                int q) {
  Key k = 0;
  for (int j = n - 1; j >= 0; --j) {
    Symbol e = t[(i + static_cast<std::size_t>(j)) % m];
    k = (k << 16) | static_cast<Symbol>(e == 0 ? 0 : q - e);
  }
  return k;
}

struct Occurrence {
  std::size_t first = kNone;
  std::size_t second = kNone;
};

using WindowMap = std::unordered_map<Key, Occurrence, KeyHash>;

WindowMap build_window_map(const RingSequence& s, int n) {
  const auto& t = s.terms();
  const std::size_t m = t.size();
  WindowMap map;
  map.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) {
    auto& occ = map[pack_forward(t, m, i, n)];
    if (occ.first == kNone)
      occ.first = i;
    else if (occ.second == kNone)
      occ.second = i;
  }
  return map;
}

struct Analysis {
  std::optional<Violation> duplicate;
  std::optional<Violation> reverse_hit;
  std::optional<Violation> negrev_hit;
};

Analysis analyze(const RingSequence& s, int n) {
  require_order(n);
  const auto& t = s.terms();
  const std::size_t m = t.size();
  const WindowMap map = build_window_map(s, n);

  Analysis a;

  // Duplicate windows: lexicographically first pair = the group minimising
  // (first occurrence, second occurrence).
  std::pair<std::size_t, std::size_t> best{kNone, kNone};
  for (const auto& [key, occ] : map) {
    (void)key;
    if (occ.second == kNone) continue;
    if (std::pair{occ.first, occ.second} < best) best = {occ.first, occ.second};
  }
  if (best.first != kNone)
    a.duplicate = Violation{ViolationKind::duplicate_window, best.first, best.second,
                            window(s, static_cast<std::int64_t>(best.first), n)};

  // Reverse / negated-reverse matches: scanning i in ring order and taking the
  // smallest matching j yields the lexicographically first pair.
  for (std::size_t i = 0; i < m; ++i) {
    auto it = map.find(pack_reverse(t, m, i, n));
    if (it != map.end()) {
      a.reverse_hit = Violation{ViolationKind::reverse_match, i, it->second.first,
                                window(s, static_cast<std::int64_t>(i), n)};
      break;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto it = map.find(pack_negated_reverse(t, m, i, n, s.q()));
    if (it != map.end()) {
      a.negrev_hit = Violation{ViolationKind::negative_reverse_match, i, it->second.first,
                               window(s, static_cast<std::int64_t>(i), n)};
      break;
    }
  }
  return a;
}

}  // namespace

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::duplicate_window: return "duplicate_window";
    case ViolationKind::reverse_match: return "reverse_match";
    case ViolationKind::negative_reverse_match: return "negative_reverse_match";
  }
  return "?";
}

CheckResult check_window(const RingSequence& s, int n) {
  require_order(n);
  const WindowMap map = build_window_map(s, n);
  std::pair<std::size_t, std::size_t> best{kNone, kNone};
  for (const auto& [key, occ] : map) {
    (void)key;
    if (occ.second == kNone) continue;
    if (std::pair{occ.first, occ.second} < best) best = {occ.first, occ.second};
  }
  if (best.first == kNone) return CheckResult{true, std::nullopt};
  return CheckResult{false, Violation{ViolationKind::duplicate_window, best.first, best.second,
                                      window(s, static_cast<std::int64_t>(best.first), n)}};
}

CheckResult check_orientable(const RingSequence& s, int n) {
  Analysis a = analyze(s, n);
  if (a.duplicate) return CheckResult{false, a.duplicate};
  if (a.reverse_hit) return CheckResult{false, a.reverse_hit};
  return CheckResult{true, std::nullopt};
}

CheckResult check_negative_orientable(const RingSequence& s, int n) {
  Analysis a = analyze(s, n);
  if (a.duplicate) return CheckResult{false, a.duplicate};
  if (a.negrev_hit) return CheckResult{false, a.negrev_hit};
  return CheckResult{true, std::nullopt};
}

bool check_special(const RingSequence& s, int n) {
  Analysis a = analyze(s, n);
  return !a.duplicate && !a.reverse_hit && !a.negrev_hit;
}

std::size_t longest_zero_run(const RingSequence& s) {
  const auto& t = s.terms();
  const std::size_t m = t.size();
  std::size_t start = kNone;
  for (std::size_t i = 0; i < m; ++i) {
    if (t[i] != 0) {
      start = i;
      break;
    }
  }
  if (start == kNone) return m;  // all-zero ring
  std::size_t best = 0, run = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (t[(start + k) % m] == 0) {
      ++run;
      best = std::max(best, run);
    } else {
      run = 0;
    }
  }
  return best;
}

bool check_good(const RingSequence& s, int n) {
  if (n < 2) throw std::invalid_argument("window length n must be at least 2");
  const auto& t = s.terms();
  bool all_zero = std::all_of(t.begin(), t.end(), [](Symbol e) { return e == 0; });
  if (all_zero) return false;  // the periodic extension has unbounded zero runs
  return longest_zero_run(s) <= static_cast<std::size_t>(n - 2);
}

DisjointResult check_disjoint(const RingSequence& s, const RingSequence& t, int n) {
  require_order(n);
  if (s.q() != t.q()) throw std::invalid_argument("check_disjoint: modulus mismatch");
  const WindowMap tmap = build_window_map(t, n);
  const auto& st = s.terms();
  const std::size_t m = st.size();
  DisjointResult r{true, true, true};
  for (std::size_t i = 0; i < m && r.tuple_disjoint; ++i)
    if (tmap.count(pack_forward(st, m, i, n))) r.tuple_disjoint = false;
  // s_n(i) = t_n(j)^R  <=>  reverse(s_n(i)) is a window of t.
  for (std::size_t i = 0; i < m && r.o_disjoint; ++i)
    if (tmap.count(pack_reverse(st, m, i, n))) r.o_disjoint = false;
  // s_n(i) = -t_n(j)^R  <=>  reverse(negate(s_n(i))) is a window of t.
  for (std::size_t i = 0; i < m && r.n_disjoint; ++i)
    if (tmap.count(pack_negated_reverse(st, m, i, n, s.q()))) r.n_disjoint = false;
  return r;
}

PropertyReport report(const RingSequence& s, int n) {
  Analysis a = analyze(s, n);
  PropertyReport r;
  r.q = s.q();
  r.n = n;
  r.period = s.period();
  r.weight = weight(s);
  r.weight_mod = weight_mod(s);
  r.is_window = !a.duplicate;
  r.is_orientable = r.is_window && !a.reverse_hit;
  r.is_negative_orientable = r.is_window && !a.negrev_hit;
  r.is_special = r.is_orientable && r.is_negative_orientable;
  r.is_good = check_good(s, n);
  if (a.duplicate) r.violations.push_back(*a.duplicate);
  if (a.reverse_hit) r.violations.push_back(*a.reverse_hit);
  if (a.negrev_hit) r.violations.push_back(*a.negrev_hit);
  return r;
}

std::string to_json(const PropertyReport& r) {
  nlohmann::ordered_json doc;
  doc["q"] = r.q;
  doc["n"] = r.n;
  doc["period"] = r.period;
  doc["weight"] = r.weight;
  doc["weight_mod"] = r.weight_mod;
  doc["is_window"] = r.is_window;
  doc["is_orientable"] = r.is_orientable;
  doc["is_negative_orientable"] = r.is_negative_orientable;
  doc["is_special"] = r.is_special;
  doc["is_good"] = r.is_good;
  auto violations = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json item;
    item["kind"] = to_string(v.kind);
    item["i"] = v.i;
    item["j"] = v.j;
    auto tuple = nlohmann::ordered_json::array();
    for (Symbol e : v.tuple.entries) tuple.push_back(static_cast<int>(e));
    item["tuple"] = std::move(tuple);
    violations.push_back(std::move(item));
  }
  doc["violations"] = std::move(violations);
  return doc.dump();
}

}  // namespace orientseq

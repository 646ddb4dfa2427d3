#include "orientseq/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "orientseq/bounds.hpp"
#include "orientseq/euler_os2.hpp"
#include "orientseq/verify.hpp"

namespace orientseq {

namespace {

void certify(bool condition, const std::string& what) {
  if (!condition) throw certification_error(what);
}

void require_orientable_input(const RingSequence& s, int n, const char* who) {
  auto r = check_orientable(s, n);
  if (!r.ok) throw std::invalid_argument(std::string(who) + ": input is not an orientable sequence");
}

void certify_special(const RingSequence& s, int n, const std::string& who) {
  PropertyReport r = report(s, n);
  certify(r.is_special, who + ": output failed the special-orientability certification");
}

}  // namespace

const char* to_string(Variant v) {
  switch (v) {
    case Variant::embed: return "embed";
    case Variant::s2: return "s2";
    case Variant::t: return "t";
    case Variant::t2: return "t2";
    case Variant::u: return "u";
    case Variant::u_star: return "ustar";
    case Variant::u_prime: return "uprime";
    case Variant::u_starstar: return "ustarstar";
  }
  return "?";
}

std::optional<Variant> variant_from_string(const std::string& name) {
  for (Variant v : {Variant::embed, Variant::s2, Variant::t, Variant::t2, Variant::u,
                    Variant::u_star, Variant::u_prime, Variant::u_starstar})
    if (name == to_string(v)) return v;
  return std::nullopt;
}

XYZ choose_xyz(int q, int q_prime) {
  if (q == 5 && q_prime == 12) return {0, 1, 4};
  if (q == 6 && q_prime == 14) return {0, 1, 2};
  if (q >= 5 && q_prime == 2 * q + 1) return {2, q - 2, q - 1};
  if (q >= 7 && q_prime == 2 * q + 2) return {4, q - 2, q - 1};
  throw std::invalid_argument("choose_xyz: undefined (q, q') combination");
}

RingSequence embed_qprime(const RingSequence& s, int n, int q_prime) {
  require_orientable_input(s, n, "embed_qprime");
  RingSequence out = embed_E(s, q_prime);
  if (q_prime >= 2 * s.q() - 1) certify_special(out, n, "embed_qprime");
  return out;
}

RingSequence make_S2(const RingSequence& s, int n, int q_prime) {
  const int q = s.q();
  if (!(q_prime >= 2 * q - 1 && 2 * q - 1 > 2))
    throw std::invalid_argument("make_S2 requires q' >= 2q-1 > 2");
  require_orientable_input(s, n, "make_S2");
  RingSequence sp = embed_E(s, q_prime);
  RingSequence out = concat(sp, negate(sp));
  certify(out.period() == 2 * s.period(), "make_S2: period is not 2m");
  certify(weight_mod(out) == 0, "make_S2: weight is not 0 mod q'");
  certify_special(out, n, "make_S2");
  return out;
}

RingSequence make_T(const RingSequence& s, int n, int q_prime) {
  const int q = s.q();
  if (!(q_prime >= 2 * q && 2 * q > 3)) throw std::invalid_argument("make_T requires q' >= 2q > 3");
  require_orientable_input(s, n, "make_T");
  const std::size_t m = s.period();
  std::vector<Symbol> t(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int base = s[i] == 0 ? q : static_cast<int>(s[i]);
    const bool positive = (i + m - 1) % 2 == 0;  // sign of (-1)^{i+m-1}
    t[i] = static_cast<Symbol>(positive ? base : q_prime - base);
  }
  RingSequence out(q_prime, std::move(t));
  certify(longest_zero_run(out) == 0, "make_T: output contains a zero term");
  certify_special(out, n, "make_T");
  return out;
}

RingSequence make_T2(const RingSequence& s, int n, int q_prime) {
  RingSequence t = make_T(s, n, q_prime);
  RingSequence out = concat(t, negate(t));
  certify(out.period() == 2 * s.period(), "make_T2: period is not 2m");
  certify(weight_mod(out) == 0, "make_T2: weight is not 0 mod q'");
  certify(longest_zero_run(out) == 0, "make_T2: output contains a zero term");
  certify_special(out, n, "make_T2");
  return out;
}

RingSequence make_U(const RingSequence& s, int n, int q_prime) {
  const int q = s.q();
  if (!(q_prime >= 2 * q + 1 && 2 * q + 1 > 4))
    throw std::invalid_argument("make_U requires q' >= 2q+1 > 4");
  if (s[0] != 0) throw std::invalid_argument("make_U requires a starter with s_0 = 0");
  RingSequence s2 = make_S2(s, n, q_prime);
  RingSequence t2 = make_T2(s, n, q_prime);
  RingSequence out = concat(s2, t2);
  certify(out.period() == 4 * s.period(), "make_U: period is not 4m");
  certify(weight_mod(out) == 0, "make_U: weight is not 0 mod q'");
  certify_special(out, n, "make_U");
  return out;
}

namespace {

// Starters for the truncated pipelines must expose the anchor cycle at a
// fixed ring position; injected starters are validated against that form.
RingSequence anchored_starter(int q, XYZ a, bool lead_zero,
                              const std::optional<RingSequence>& injected) {
  if (!injected) return os2_maximal(q, a.x, a.y, a.z, lead_zero);
  const RingSequence& s = *injected;
  if (s.q() != q) throw std::invalid_argument("starter modulus does not match q");
  if (s.period() != os2_max_period(q))
    throw std::invalid_argument("starter does not have the maximal order-2 period");
  require_orientable_input(s, 2, "anchored starter");
  const std::vector<int> want = lead_zero ? std::vector<int>{0, a.x, a.y, a.z, a.x}
                                          : std::vector<int>{a.x, a.y, a.z, a.x};
  for (std::size_t i = 0; i < want.size(); ++i)
    if (static_cast<int>(s[i]) != want[i])
      throw std::invalid_argument("starter ring does not begin with the anchor cycle");
  return s;
}

}  // namespace

RingSequence make_U_star(int q, int q_prime, const std::optional<RingSequence>& starter) {
  if (q <= 4) throw std::invalid_argument("make_U_star requires q > 4");
  const XYZ a = choose_xyz(q, q_prime);
  const bool lead_zero = a.x != 0;
  RingSequence s = anchored_starter(q, a, lead_zero, starter);
  RingSequence u = make_U(s, 2, q_prime);

  // Ring alignment: [x,y,z,x,...] loses indices 0..2, [0,x,y,z,x,...] loses
  // 1..3; either way no new 2-tuple is created.
  RingSequence out = erase_run(u, lead_zero ? 1 : 0, 3);

  const std::uint64_t expect_period =
      q % 2 != 0 ? 2ull * q * (q - 1) - 3 : 2ull * q * (q - 2) - 3;
  certify(out.period() == expect_period, "make_U_star: period mismatch");
  const int expect_weight = reduce_mod(q_prime - a.sum(), q_prime);
  certify(weight_mod(out) == expect_weight, "make_U_star: weight mismatch");
  certify(std::gcd(weight_mod(out), q_prime) == 1, "make_U_star: weight not coprime to q'");
  certify_special(out, 2, "make_U_star");
  return out;
}

RingSequence goodify(const RingSequence& u, int n, int base_q, bool force_first_two) {
  const int q_prime = u.q();
  if (base_q < 2) throw std::invalid_argument("goodify: base modulus out of range");
  if (q_prime < 2 * base_q + 2) throw std::invalid_argument("goodify requires q' >= 2q+2");

  const Symbol rep_low = static_cast<Symbol>(base_q + 1);
  const Symbol rep_high = static_cast<Symbol>(q_prime - base_q - 1);
  for (Symbol e : u.terms())
    if (e == rep_low || e == rep_high)
      throw std::invalid_argument("goodify: input already contains q+1 or q'-q-1");

  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < u.period(); ++i)
    if (u[i] == 0) zeros.push_back(i);
  if (zeros.size() % 2 != 0) throw std::invalid_argument("goodify: odd number of zeros");
  if (force_first_two && zeros.size() < 2)
    throw std::invalid_argument("goodify: fewer than two zeros to pin");

  // Ring-order assignment: optionally pin the first two zeros to q+1, then
  // alternate starting with q'-q-1, then flip assignments from the end until
  // the two replacement values are used exactly half/half.
  const std::size_t count = zeros.size();
  std::vector<Symbol> repl(count);
  std::size_t start = 0;
  if (force_first_two) {
    repl[0] = repl[1] = rep_low;
    start = 2;
  }
  for (std::size_t k = start; k < count; ++k)
    repl[k] = (k - start) % 2 == 0 ? rep_high : rep_low;
  if (rep_low != rep_high) {
    const std::size_t half = count / 2;
    auto count_low = [&] { return static_cast<std::size_t>(std::count(repl.begin(), repl.end(), rep_low)); };
    for (std::size_t k = count; count_low() > half && k-- > 0;)
      if (repl[k] == rep_low) repl[k] = rep_high;
    for (std::size_t k = count; count_low() < half && k-- > 0;)
      if (repl[k] == rep_high) repl[k] = rep_low;
  }

  std::vector<Symbol> terms(u.terms());
  for (std::size_t k = 0; k < count; ++k) terms[zeros[k]] = repl[k];
  RingSequence out(q_prime, std::move(terms));

  certify(out.period() == u.period(), "goodify: period changed");
  certify(weight_mod(out) == 0, "goodify: weight is not 0 mod q'");
  certify(check_good(out, n), "goodify: output is not good");
  certify_special(out, n, "goodify");
  return out;
}

RingSequence make_U_starstar(int q, int q_prime, const std::optional<RingSequence>& starter) {
  if (q <= 4) throw std::invalid_argument("make_U_starstar requires q > 4");
  if (q_prime != 2 * q + 2 && q_prime != 2 * q + 3)
    throw std::invalid_argument("make_U_starstar requires q' = 2q+2 or q' = 2q+3");

  const XYZ a{0, 1, q - 1};
  RingSequence s = anchored_starter(q, a, /*lead_zero=*/false, starter);
  RingSequence u = make_U(s, 2, q_prime);
  RingSequence good = goodify(u, 2, q, /*force_first_two=*/true);

  // goodify pinned the first two zeros (ring indices 0 and 3) to q+1, so the
  // ring now reads [q+1, 1, q-1, q+1, ...]; drop the first three terms.
  const Symbol pinned = static_cast<Symbol>(q + 1);
  certify(good[0] == pinned && good[1] == 1 && good[2] == static_cast<Symbol>(q - 1) &&
              good[3] == pinned,
          "make_U_starstar: goodified ring lost the anchor form");
  RingSequence out = erase_run(good, 0, 3);

  const std::uint64_t expect_period =
      q % 2 != 0 ? 2ull * q * (q - 1) - 3 : 2ull * q * (q - 2) - 3;
  certify(out.period() == expect_period, "make_U_starstar: period mismatch");
  const int expect_weight = reduce_mod(q_prime - (2 * q + 1), q_prime);
  certify(weight_mod(out) == expect_weight, "make_U_starstar: weight mismatch");
  certify(std::gcd(weight_mod(out), q_prime) == 1, "make_U_starstar: weight not coprime to q'");
  certify(check_good(out, 2), "make_U_starstar: output is not good");
  certify_special(out, 2, "make_U_starstar");
  return out;
}

RingSequence increment_embed(const RingSequence& s) {
  const int q_prime = s.q() + 1;
  if (q_prime > kMaxModulus) throw std::invalid_argument("increment_embed: modulus out of range");
  std::vector<Symbol> terms(s.terms());
  for (Symbol& e : terms) e = static_cast<Symbol>(e + 1);
  return RingSequence(q_prime, std::move(terms));
}

RingSequence join_negative(const RingSequence& s, int n) {
  if (!check_special(s, n)) throw std::invalid_argument("join_negative: input is not special");
  RingSequence neg = negate(s);
  if (!check_disjoint(s, neg, n).tuple_disjoint)
    throw std::invalid_argument("join_negative: some n-tuple of S has its negative in S");

  // Find the lexicographically first (i, j) with the (n-1)-tuple of S at i
  // equal to the (n-1)-tuple of -S at j, then read each ring from its index.
  const int v = n - 1;
  const std::size_t m = s.period();
  std::unordered_map<std::string, std::size_t> neg_vertices;
  for (std::size_t j = m; j-- > 0;) {
    WindowTuple t = window(neg, static_cast<std::int64_t>(j), v);
    neg_vertices[t.to_string()] = j;  // descending loop keeps the minimal j
  }
  for (std::size_t i = 0; i < m; ++i) {
    WindowTuple t = window(s, static_cast<std::int64_t>(i), v);
    auto it = neg_vertices.find(t.to_string());
    if (it == neg_vertices.end()) continue;
    RingSequence out = concat(s.rotated(i), neg.rotated(it->second));
    certify(out.period() == 2 * m, "join_negative: period is not 2m");
    certify(weight_mod(out) == 0, "join_negative: weight is not 0 mod q");
    certify_special(out, n, "join_negative");
    return out;
  }
  throw std::invalid_argument("join_negative: S and -S share no (n-1)-tuple");
}

RingSequence run_construction(const ConstructionParams& params,
                              const std::optional<RingSequence>& starter,
                              ConstructionParams* used) {
  ConstructionParams p = params;
  RingSequence out = [&]() -> RingSequence {
    switch (p.variant) {
      case Variant::u_star: {
        const XYZ a = choose_xyz(p.q, p.q_prime);
        p.x = a.x; p.y = a.y; p.z = a.z;
        return make_U_star(p.q, p.q_prime, starter);
      }
      case Variant::u_starstar: {
        p.x = 0; p.y = 1; p.z = p.q - 1;
        return make_U_starstar(p.q, p.q_prime, starter);
      }
      default: break;
    }
    RingSequence s = starter ? *starter : os2_maximal(p.q, 1, 2, 3, /*lead_zero=*/true);
    if (s.q() != p.q) throw std::invalid_argument("starter modulus does not match q");
    switch (p.variant) {
      case Variant::embed: return embed_qprime(s, p.n, p.q_prime);
      case Variant::s2: return make_S2(s, p.n, p.q_prime);
      case Variant::t: return make_T(s, p.n, p.q_prime);
      case Variant::t2: return make_T2(s, p.n, p.q_prime);
      case Variant::u: return make_U(s, p.n, p.q_prime);
      case Variant::u_prime: return goodify(make_U(s, p.n, p.q_prime), p.n, p.q, false);
      default: throw std::invalid_argument("run_construction: unknown variant");
    }
  }();
  if (used) *used = p;
  return out;
}

}  // namespace orientseq

#pragma once

#include <optional>

#include "orientseq/ring_sequence.hpp"

namespace orientseq {

/// Which pipeline a ConstructionParams selects.
enum class Variant { embed, s2, t, t2, u, u_star, u_prime, u_starstar };

const char* to_string(Variant v);
std::optional<Variant> variant_from_string(const std::string& name);

/// Parameter block for one construction run; the modulus constraints differ
/// per variant and are validated by the pipeline entry points.
struct ConstructionParams {
  int q = 0;        // starter modulus
  int q_prime = 0;  // target modulus
  int n = 2;        // window length
  int x = 0, y = 0, z = 0;
  Variant variant = Variant::embed;
};

/// Anchor symbols for the truncated pipelines: (2, q-2, q-1) for q' = 2q+1,
/// (4, q-2, q-1) for q' = 2q+2 and q >= 7, plus the two tabulated special
/// cases (5,12) -> (0,1,4) and (6,14) -> (0,1,2). x+y+z is always coprime
/// to q'. Throws on any other (q, q') combination.
struct XYZ {
  int x = 0, y = 0, z = 0;
  int sum() const noexcept { return x + y + z; }
};
XYZ choose_xyz(int q, int q_prime);

/// S' : re-reads an OS_q(n) over Z_{q'}. With q' >= 2q-1 the result is a
/// certified SOS_{q'}(n); smaller q' > q is accepted but carries no claim.
RingSequence embed_qprime(const RingSequence& s, int n, int q_prime);

/// S'' = S' || (-S'); period 2m, weight 0, certified special. q' >= 2q-1 > 2.
RingSequence make_S2(const RingSequence& s, int n, int q_prime);

/// T : t_i = (-1)^{i+m-1} s'_i, with zero terms sent to (-1)^{i+m-1} q.
/// Zero-free, period m, certified special. q' >= 2q > 3.
RingSequence make_T(const RingSequence& s, int n, int q_prime);

/// T' = T || (-T); period 2m, weight 0, zero-free, certified special.
RingSequence make_T2(const RingSequence& s, int n, int q_prime);

/// U = S'' || T'; requires s_0 = 0 and q' >= 2q+1 > 4. Period 4m, weight 0,
/// certified special.
RingSequence make_U(const RingSequence& s, int n, int q_prime);

/// U* : builds U on a maximal-period starter anchored at choose_xyz(q, q')
/// and deletes the [x,y,z] anchor cycle. Period 2q(q-1)-3 (q odd) or
/// 2q(q-2)-3 (q even); weight q'-(x+y+z), coprime to q'. A starter may be
/// injected for bit-exact reproduction; it must carry the anchored ring form.
RingSequence make_U_star(int q, int q_prime,
                         const std::optional<RingSequence>& starter = std::nullopt);

/// U' : replaces the zeros of a make_U output half with q+1 and half with
/// q'-q-1 (ring order; with force_first_two the first two zeros get q+1).
/// Requires q' >= 2q+2, an even zero count, and that U avoids both
/// replacement values. Good, special, weight 0, same period.
RingSequence goodify(const RingSequence& u, int n, int base_q, bool force_first_two);

/// U** : anchors x=0, y=1, z=q-1, goodifies with force_first_two and drops
/// the first three terms. Good, special, period as U*, weight q'-(2q+1).
/// q > 4 and q' in {2q+2, 2q+3}.
RingSequence make_U_starstar(int q, int q_prime,
                             const std::optional<RingSequence>& starter = std::nullopt);

/// Adds one to every term as an integer, re-read over Z_{q+1}. Output is
/// zero-free; specialness is preserved and checker-certified.
RingSequence increment_embed(const RingSequence& s);

/// Splices S and -S at a shared (n-1)-tuple into one ring of period 2m.
/// Requires S special, no n-tuple of S with its negative also in S, and a
/// shared (n-1)-tuple; result certified special.
RingSequence join_negative(const RingSequence& s, int n);

/// Dispatches one pipeline run. The truncated variants derive their anchors
/// from choose_xyz and may take an injected starter; the plain variants use
/// the given starter or, when absent, a generated maximal-period order-2
/// starter with s_0 = 0. Returns the params actually used (anchors filled in)
/// through `used` when non-null.
RingSequence run_construction(const ConstructionParams& params,
                              const std::optional<RingSequence>& starter = std::nullopt,
                              ConstructionParams* used = nullptr);

}  // namespace orientseq

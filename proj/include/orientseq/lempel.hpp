#pragma once

#include <cstdint>

#include "orientseq/ring_sequence.hpp"

namespace orientseq {

/// Lempel morphism D_beta: t_j = beta (s_{j+1} - s_j) mod q, cyclically.
/// The output ring keeps the input length; its least period divides it.
RingSequence d_beta(const RingSequence& s, int beta);

/// Integrating lift: t_0 = start, t_{j+1} = t_j + beta^{-1} s_j. beta must be
/// a unit mod q. The returned ring closes after (q / gcd(w_q(S), q)) passes,
/// so a weight coprime to q yields the full period q*m; otherwise the result
/// is one of several shorter cycles (callers that care should warn).
RingSequence d_inverse(const RingSequence& s, int start = 0, int beta = 1);

/// Inserts exactly one symbol `a` into a special sequence of order n so the
/// result stays special (and good) with period m+1. Candidate positions are
/// scanned in ring order, positions extending a maximal run of `a` first;
/// the first position passing the full certification suite wins. Throws when
/// no position passes.
RingSequence extend_Ea(const RingSequence& t, int a, int n);

/// Iterates S_{i+1} = extend_Ea(d_inverse(S_i, 0), 1 - w(d_inverse(S_i, 0)))
/// from a good special starter with weight coprime to q, certifying every
/// level. Periods obey m_{i+1} = q m_i + 1.
RingSequence tower(const RingSequence& s_start, int n_start, int target_n);

/// Special orientable sequence of order 3 over Z_{q'}: one lift of the
/// weight-adjusted order-2 sequence. q' >= 11.
RingSequence sos3(int q_prime);

/// Good special orientable sequence of arbitrary order n >= 2 over Z_{q'}
/// via the tower over the good weight-adjusted order-2 sequence. q' >= 12.
RingSequence sos_general(int q_prime, int n);

/// Expected sos3 period, one of four expressions by q' mod 4.
std::uint64_t sos3_period(int q_prime);

/// Expected sos_general period: q'^{n-2} m_2 + (q'^{n-2}-1)/(q'-1) with m_2
/// the good order-2 period for the base alphabet.
std::uint64_t sos_general_period(int q_prime, int n);

}  // namespace orientseq

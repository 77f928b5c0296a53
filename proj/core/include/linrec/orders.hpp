#pragma once

#include <array>
#include <utility>

#include "recurrence.hpp"
#include "ring.hpp"

namespace linrec {

// Lucas parameters: f_{k+2} = P f_{k+1} - Q f_k. U has initials (0, 1),
// V has initials (2, P).
struct LucasParams {
  Elem P, Q;

  // Same recurrence in the general convention: coefficients (P, -Q).
  RecurrenceSpec u_spec(const Ring& ring) const;
};

// Horadam parameters: the Lucas recurrence with initials (A, B).
struct HoradamParams {
  Elem A, B, P, Q;

  RecurrenceSpec w_spec(const Ring& ring) const;
};

struct UPair {
  Elem u, u_next;  // (U_N, U_{N+1})
};

struct WPair {
  Elem w, w_next;  // (W_N, W_{N+1})
};

// Chain state at index N; the V-based doubling keeps all four plus Q^N.
struct UVState {
  Elem u, u_next, v, v_next;
};

// (U_N, U_{N+1}) by the doubling ladder on the index bits. Each iteration
// costs exactly one big product and two big squarings; N = 0 returns (0, 1)
// without entering the ladder.
UPair lucas_u_pair(const LucasParams& pq, const mpz_class& N, const Ring& ring,
                   OpCount* ops = nullptr);

// Same ladder for Q = a*a, caller supplies a. The difference of squares
// U_{k+1}^2 - Q U_k^2 = (U_{k+1} - a U_k)(U_{k+1} + a U_k) replaces both
// squarings, leaving exactly two big products per iteration.
UPair lucas_u_pair_sqrtq(const Elem& P, const Elem& a, const mpz_class& N,
                         const Ring& ring, OpCount* ops = nullptr);

// V_N = 2 U_{N+1} - P U_N on top of lucas_u_pair; the tail is cheap.
Elem lucas_v(const LucasParams& pq, const mpz_class& N, const Ring& ring,
             OpCount* ops = nullptr);

// (W_N, W_{N+1}) for initials (A, B): one lucas_u_pair plus the cheap
// combinations W_N = (B - A P) U_N + A U_{N+1}, W_{N+1} = B U_{N+1} - A Q U_N.
WPair horadam_pair(const HoradamParams& abpq, const mpz_class& N, const Ring& ring,
                   OpCount* ops = nullptr);

// U and V advanced together through the V-based identities
//   U_{2k} = U_k V_k               V_{2k}   = V_k^2 - 2 Q^k
//   U_{2k+1} = U_{k+1} V_k - Q^k   V_{2k+1} = V_{k+1} V_k - P Q^k
// with Q^k maintained by one big squaring per iteration (three big products
// and two big squarings in total, for either bit value).
UVState lucas_uv_state(const LucasParams& pq, const mpz_class& N, const Ring& ring,
                       OpCount* ops = nullptr);
std::pair<Elem, Elem> lucas_uv_chain(const LucasParams& pq, const mpz_class& N,
                                     const Ring& ring, OpCount* ops = nullptr);

// Basis window (X_N, X_{N+1}, X_{N+2}) for f_{k+3} = p f_{k+2} + q f_{k+1} +
// r f_k, initials (0, 0, 1). Three big squarings and three big products per
// ladder iteration.
std::array<Elem, 3> order3_window(const std::array<Elem, 3>& coeffs,
                                  const mpz_class& N, const Ring& ring,
                                  OpCount* ops = nullptr);

// (X_N, Y_N, Z_N): the companion basis built from X by the cheap forward
// differences Y_k = X_{k+1} - p X_k, Z_k = X_{k+2} - p X_{k+1} - q X_k.
std::array<Elem, 3> order3_basis(const std::array<Elem, 3>& coeffs,
                                 const mpz_class& N, const Ring& ring,
                                 OpCount* ops = nullptr);

// W_N for order-3 initials (a_0, a_1, a_2): cheap combination of the window.
Elem order3_term(const std::array<Elem, 3>& initials,
                 const std::array<Elem, 3>& coeffs, const mpz_class& N,
                 const Ring& ring, OpCount* ops = nullptr);

// Basis window (X_N .. X_{N+3}) for order 4, initials (0, 0, 0, 1). Six big
// products and four big squarings per ladder iteration.
std::array<Elem, 4> order4_window(const std::array<Elem, 4>& coeffs,
                                  const mpz_class& N, const Ring& ring,
                                  OpCount* ops = nullptr);

Elem order4_term(const std::array<Elem, 4>& initials,
                 const std::array<Elem, 4>& coeffs, const mpz_class& N,
                 const Ring& ring, OpCount* ops = nullptr);

}  // namespace linrec

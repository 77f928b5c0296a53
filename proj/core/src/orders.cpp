#include "linrec/orders.hpp"

#include <stdexcept>
#include <vector>

namespace linrec {

namespace {

OpCount& counter(OpCount* ops, OpCount& local) { return ops ? *ops : local; }

}  // namespace

RecurrenceSpec LucasParams::u_spec(const Ring& ring) const {
  return basis_spec({P, -Q}, ring);
}

RecurrenceSpec HoradamParams::w_spec(const Ring& ring) const {
  return make_spec({P, -Q}, {A, B}, ring);
}

UPair lucas_u_pair(const LucasParams& pq, const mpz_class& N, const Ring& ring,
                   OpCount* ops) {
  if (N < 0) throw std::invalid_argument("lucas_u_pair: index must be >= 0");
  if (N == 0) return {ring.canon(0), ring.canon(1)};
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const Elem P = ring.canon(pq.P), Q = ring.canon(pq.Q);
  // (u1, u2) = (U_k, U_{k+1}), starting at k = 1.
  Elem u1 = ring.canon(1), u2 = P;
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;) {
    if (mpz_tstbit(N.get_mpz_t(), j)) {
      Elem odd = c.sub(c.sq(u2), c.cmul(Q, c.sq(u1)));  // U_{2k+1}
      u2 = c.mul(u2, c.sub(c.cmul(P, u2), c.twice(c.cmul(Q, u1))));  // U_{2k+2}
      u1 = std::move(odd);
    } else {
      Elem even = c.mul(u1, c.sub(c.twice(u2), c.cmul(P, u1)));  // U_{2k}
      u2 = c.sub(c.sq(u2), c.cmul(Q, c.sq(u1)));                 // U_{2k+1}
      u1 = std::move(even);
    }
  }
  return {std::move(u1), std::move(u2)};
}

UPair lucas_u_pair_sqrtq(const Elem& P_in, const Elem& a, const mpz_class& N,
                         const Ring& ring, OpCount* ops) {
  if (N < 0) throw std::invalid_argument("lucas_u_pair_sqrtq: index must be >= 0");
  if (N == 0) return {ring.canon(0), ring.canon(1)};
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const Elem P = ring.canon(P_in);
  const Elem Q = c.cmul(a, a);
  Elem u1 = ring.canon(1), u2 = P;
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;) {
    // U_{2k+1} = (U_{k+1} - a U_k)(U_{k+1} + a U_k); one product, no squaring.
    Elem t = c.cmul(a, u1);
    Elem odd = c.mul(c.sub(u2, t), c.add(u2, t));
    if (mpz_tstbit(N.get_mpz_t(), j)) {
      u2 = c.mul(u2, c.sub(c.cmul(P, u2), c.twice(c.cmul(Q, u1))));
      u1 = std::move(odd);
    } else {
      u1 = c.mul(u1, c.sub(c.twice(u2), c.cmul(P, u1)));
      u2 = std::move(odd);
    }
  }
  return {std::move(u1), std::move(u2)};
}

Elem lucas_v(const LucasParams& pq, const mpz_class& N, const Ring& ring,
             OpCount* ops) {
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  UPair up = lucas_u_pair(pq, N, ring, &o);
  return c.sub(c.twice(up.u_next), c.cmul(pq.P, up.u));
}

WPair horadam_pair(const HoradamParams& abpq, const mpz_class& N, const Ring& ring,
                   OpCount* ops) {
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  UPair up = lucas_u_pair({abpq.P, abpq.Q}, N, ring, &o);
  Elem d = c.sub(abpq.B, c.cmul(abpq.A, abpq.P));
  Elem w = c.add(c.cmul(d, up.u), c.cmul(abpq.A, up.u_next));
  Elem aq = c.cmul(abpq.A, abpq.Q);
  Elem w_next = c.sub(c.cmul(abpq.B, up.u_next), c.cmul(aq, up.u));
  return {std::move(w), std::move(w_next)};
}

UVState lucas_uv_state(const LucasParams& pq, const mpz_class& N, const Ring& ring,
                       OpCount* ops) {
  if (N < 0) throw std::invalid_argument("lucas_uv_state: index must be >= 0");
  const Elem P = ring.canon(pq.P), Q = ring.canon(pq.Q);
  if (N == 0) return {ring.canon(0), ring.canon(1), ring.canon(2), P};
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  // State at k = 1; V_2 = P^2 - 2Q and Q^1 = Q cost nothing big.
  Elem u = ring.canon(1), u1 = P;
  Elem v = P, v1 = c.sub(c.cmul(P, P), c.twice(Q));
  Elem qk = Q;
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;) {
    Elem u_odd = c.sub(c.mul(u1, v), qk);            // U_{2k+1}
    Elem v_odd = c.sub(c.mul(v1, v), c.cmul(P, qk));  // V_{2k+1}
    if (mpz_tstbit(N.get_mpz_t(), j)) {
      Elem qk1 = c.cmul(Q, qk);
      u1 = c.mul(u1, v1);                      // U_{2k+2}
      v1 = c.sub(c.sq(v1), c.twice(qk1));      // V_{2k+2}
      u = std::move(u_odd);
      v = std::move(v_odd);
      qk = c.cmul(Q, c.sq(qk));                // Q^{2k+1}
    } else {
      u1 = std::move(u_odd);
      v1 = std::move(v_odd);
      Elem u_even = c.mul(u, v);               // U_{2k}
      v = c.sub(c.sq(v), c.twice(qk));         // V_{2k}
      u = std::move(u_even);
      qk = c.sq(qk);                           // Q^{2k}
    }
  }
  return {std::move(u), std::move(u1), std::move(v), std::move(v1)};
}

std::pair<Elem, Elem> lucas_uv_chain(const LucasParams& pq, const mpz_class& N,
                                     const Ring& ring, OpCount* ops) {
  UVState s = lucas_uv_state(pq, N, ring, ops);
  return {std::move(s.u), std::move(s.v)};
}

std::array<Elem, 3> order3_window(const std::array<Elem, 3>& coeffs,
                                  const mpz_class& N, const Ring& ring,
                                  OpCount* ops) {
  if (N < 0) throw std::invalid_argument("order3_window: index must be >= 0");
  const Elem p = ring.canon(coeffs[0]), q = ring.canon(coeffs[1]),
             r = ring.canon(coeffs[2]);
  if (N == 0) return {ring.canon(0), ring.canon(0), ring.canon(1)};
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  // (x1, x2, x3) = (X_k, X_{k+1}, X_{k+2}), starting at k = 1.
  Elem x1 = ring.canon(0), x2 = ring.canon(1), x3 = p;
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;) {
    Elem n1, n2, n3;
    if (mpz_tstbit(N.get_mpz_t(), j)) {
      n1 = c.add(c.cmul(r, c.sq(x1)),
                 c.mul(x2, c.sub(c.twice(x3), c.cmul(p, x2))));
      n2 = c.add(c.sq(x3),
                 c.mul(x2, c.add(c.cmul(q, x2), c.twice(c.cmul(r, x1)))));
      n3 = c.add(c.cmul(r, c.sq(x2)),
                 c.mul(x3, c.add(c.cmul(p, x3),
                                 c.add(c.twice(c.cmul(q, x2)),
                                       c.twice(c.cmul(r, x1))))));
    } else {
      n1 = c.add(c.sq(x2),
                 c.mul(x1, c.sub(c.sub(c.twice(x3), c.twice(c.cmul(p, x2))),
                                 c.cmul(q, x1))));
      n2 = c.add(c.cmul(r, c.sq(x1)),
                 c.mul(x2, c.sub(c.twice(x3), c.cmul(p, x2))));
      n3 = c.add(c.sq(x3),
                 c.mul(x2, c.add(c.cmul(q, x2), c.twice(c.cmul(r, x1)))));
    }
    x1 = std::move(n1);
    x2 = std::move(n2);
    x3 = std::move(n3);
  }
  return {std::move(x1), std::move(x2), std::move(x3)};
}

std::array<Elem, 3> order3_basis(const std::array<Elem, 3>& coeffs,
                                 const mpz_class& N, const Ring& ring,
                                 OpCount* ops) {
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  std::array<Elem, 3> w = order3_window(coeffs, N, ring, &o);
  Elem y = c.sub(w[1], c.cmul(coeffs[0], w[0]));
  Elem z = c.sub(c.sub(w[2], c.cmul(coeffs[0], w[1])), c.cmul(coeffs[1], w[0]));
  return {std::move(w[0]), std::move(y), std::move(z)};
}

Elem order3_term(const std::array<Elem, 3>& initials,
                 const std::array<Elem, 3>& coeffs, const mpz_class& N,
                 const Ring& ring, OpCount* ops) {
  OpCount local;
  OpCount& o = counter(ops, local);
  std::array<Elem, 3> xs = order3_window(coeffs, N, ring, &o);
  RecurrenceSpec spec = make_spec({coeffs[0], coeffs[1], coeffs[2]},
                                  {initials[0], initials[1], initials[2]}, ring);
  Window w{N, {std::move(xs[0]), std::move(xs[1]), std::move(xs[2])}};
  return combine_forward(spec, w, ring, &o);
}

std::array<Elem, 4> order4_window(const std::array<Elem, 4>& coeffs,
                                  const mpz_class& N, const Ring& ring,
                                  OpCount* ops) {
  if (N < 0) throw std::invalid_argument("order4_window: index must be >= 0");
  const Elem p0 = ring.canon(coeffs[0]), p1 = ring.canon(coeffs[1]),
             p2 = ring.canon(coeffs[2]), p3 = ring.canon(coeffs[3]);
  if (N == 0) return {ring.canon(0), ring.canon(0), ring.canon(0), ring.canon(1)};
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  // (x1 .. x4) = (X_k .. X_{k+3}), starting at k = 1.
  Elem x1 = ring.canon(0), x2 = ring.canon(0), x3 = ring.canon(1), x4 = p0;
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;) {
    // Shared sub-terms of the four formulas; all assembly here is cheap.
    Elem tail3 = c.add(c.twice(c.cmul(p2, x2)), c.twice(c.cmul(p3, x1)));
    Elem n_odd = c.add(c.add(c.sq(x3),
                             c.mul(x2, c.sub(c.sub(c.twice(x4),
                                                   c.twice(c.cmul(p0, x3))),
                                             c.cmul(p1, x2)))),
                       c.cmul(p3, c.sq(x1)));            // X_{2k+1}
    Elem n_even = c.add(c.mul(x3, c.sub(c.twice(x4), c.cmul(p0, x3))),
                        c.mul(x2, c.add(c.cmul(p2, x2),
                                        c.twice(c.cmul(p3, x1)))));  // X_{2k+2}
    Elem n_odd3 = c.add(c.add(c.sq(x4),
                              c.mul(x3, c.add(c.cmul(p1, x3), tail3))),
                        c.cmul(p3, c.sq(x2)));           // X_{2k+3}
    Elem n1, n2, n3, n4;
    if (mpz_tstbit(N.get_mpz_t(), j)) {
      n4 = c.add(c.mul(x4, c.add(c.cmul(p0, x4),
                                 c.add(c.twice(c.cmul(p1, x3)), tail3))),
                 c.mul(x3, c.add(c.cmul(p2, x3),
                                 c.twice(c.cmul(p3, x2)))));  // X_{2k+4}
      n1 = std::move(n_odd);
      n2 = std::move(n_even);
      n3 = std::move(n_odd3);
    } else {
      n1 = c.add(c.mul(x2, c.sub(c.twice(x3), c.cmul(p0, x2))),
                 c.mul(x1, c.sub(c.sub(c.sub(c.twice(x4),
                                             c.twice(c.cmul(p0, x3))),
                                       c.twice(c.cmul(p1, x2))),
                                 c.cmul(p2, x1))));      // X_{2k}
      n2 = std::move(n_odd);
      n3 = std::move(n_even);
      n4 = std::move(n_odd3);
    }
    x1 = std::move(n1);
    x2 = std::move(n2);
    x3 = std::move(n3);
    x4 = std::move(n4);
  }
  return {std::move(x1), std::move(x2), std::move(x3), std::move(x4)};
}

Elem order4_term(const std::array<Elem, 4>& initials,
                 const std::array<Elem, 4>& coeffs, const mpz_class& N,
                 const Ring& ring, OpCount* ops) {
  OpCount local;
  OpCount& o = counter(ops, local);
  std::array<Elem, 4> xs = order4_window(coeffs, N, ring, &o);
  RecurrenceSpec spec =
      make_spec({coeffs[0], coeffs[1], coeffs[2], coeffs[3]},
                {initials[0], initials[1], initials[2], initials[3]}, ring);
  Window w{N, {std::move(xs[0]), std::move(xs[1]), std::move(xs[2]), std::move(xs[3])}};
  return combine_forward(spec, w, ring, &o);
}

}  // namespace linrec

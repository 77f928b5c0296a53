#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ring.hpp"

namespace linrec {

// Order-n linear recurrence
//
//   f_{k+n} = c_0 f_{k+n-1} + c_1 f_{k+n-2} + ... + c_{n-1} f_k
//
// together with its initial terms f_0 .. f_{n-1}. Coefficients are stored
// highest-lag-first (c_0 multiplies the most recent term). Both vectors are
// canonicalized for the ring the spec was built with and have equal length
// n >= 1.
struct RecurrenceSpec {
  std::vector<Elem> coeffs;    // c_0 .. c_{n-1}
  std::vector<Elem> initials;  // f_0 .. f_{n-1}

  std::size_t order() const { return coeffs.size(); }
};

// Validates lengths (equal, >= 1) and canonicalizes all entries.
RecurrenceSpec make_spec(std::vector<Elem> coeffs, std::vector<Elem> initials,
                         const Ring& ring);

// The basis sequence of a coefficient vector: same recurrence, initials
// (0, ..., 0, 1). Every sequence with these coefficients is a fixed linear
// combination of shifts of this one, which is what the fast backends exploit.
RecurrenceSpec basis_spec(std::vector<Elem> coeffs, const Ring& ring);

// n consecutive terms of a sequence: values[i] = f_{base+i}, values.size()
// equal to the order of the spec it belongs to.
struct Window {
  mpz_class base;
  std::vector<Elem> values;
};

// Window at base+1: drop f_base, append f_{base+n}. Cheap operations only.
Window slide_window(const RecurrenceSpec& spec, Window w, const Ring& ring,
                    OpCount* ops = nullptr);

// Next term after a run of at least n consecutive values (ascending). Cheap
// operations only.
Elem recurrence_next(const RecurrenceSpec& spec, const std::vector<Elem>& hist,
                     const Ring& ring, OpCount* ops = nullptr);

// f_0 .. f_N by direct iteration. This is the reference every fast path is
// tested against; each step costs n cheap products and n-1 cheap additions.
std::vector<Elem> iterate_terms(const RecurrenceSpec& spec, std::uint64_t N,
                                const Ring& ring, OpCount* ops = nullptr);

// f_N .. f_{N+count-1} by the same direct iteration, keeping only a rolling
// n-term state. count >= 1.
std::vector<Elem> iterate_slice(const RecurrenceSpec& spec, std::uint64_t N,
                                std::size_t count, const Ring& ring,
                                OpCount* ops = nullptr);

// Dense n x n matrix over the ring, row-major.
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<Elem> a;

  static SquareMatrix zero(std::size_t n);
  static SquareMatrix identity(std::size_t n);

  Elem& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Multiplication-by-x matrix in the monomial basis mod the characteristic
// polynomial: ones on the subdiagonal, last column c_{n-1} .. c_0 top to
// bottom. Column j is the image of x^j.
SquareMatrix companion_matrix(const RecurrenceSpec& spec, const Ring& ring);

// Window-step matrix: first row c_0 .. c_{n-1}, ones on the subdiagonal.
// Maps the descending window (f_{k+n-1}, ..., f_k)^T to the one at k+1.
SquareMatrix step_matrix(const RecurrenceSpec& spec, const Ring& ring);

// Matrix helpers for the oracle paths. Every product is counted cheap: these
// are correctness references, not performance paths.
SquareMatrix mat_mul(const SquareMatrix& x, const SquareMatrix& y,
                     const Ring& ring, OpCount* ops = nullptr);
SquareMatrix mat_pow(const SquareMatrix& m, const mpz_class& e, const Ring& ring,
                     OpCount* ops = nullptr);
std::vector<Elem> mat_vec_mul(const SquareMatrix& m, const std::vector<Elem>& v,
                              const Ring& ring, OpCount* ops = nullptr);

// Basis-sequence window at base N via companion-matrix powering. Ignores
// spec.initials. Second oracle, independent of the doubling formulas.
Window companion_power_window(const RecurrenceSpec& spec, const mpz_class& N,
                              const Ring& ring, OpCount* ops = nullptr);

// Coefficients d_0 .. d_{n-1} with f_k = sum_j d_j X_{k+j} for every k >= 0,
// where X is the basis sequence:
//
//   d_j = a_{n-1-j} - sum_{i=0}^{n-j-2} a_{n-j-2-i} c_i.
//
// Products of initials with coefficients only, so all cheap.
std::vector<Elem> combine_coefficients(const RecurrenceSpec& spec, const Ring& ring,
                                       OpCount* ops = nullptr);

// f at index w.base from the basis window at the same base, using the d_j
// above. Cheap products only.
Elem combine_forward(const RecurrenceSpec& spec, const Window& w, const Ring& ring,
                     OpCount* ops = nullptr);

// f at index w.base + n - 1 from the basis window ending there, i.e. using
// only basis terms at or below the target index:
//
//   f_k = a_{n-1} X_k + sum_{j=1}^{n-1} c_j sum_{i=0}^{j-1} a_{n-2-i} X_{k-j+i}.
//
// The window form makes the k >= n-1 domain structural: a window based at 0
// already ends at index n-1.
Elem combine_backward(const RecurrenceSpec& spec, const Window& w, const Ring& ring,
                      OpCount* ops = nullptr);

// Degenerate order-1 path: f_N = a_0 * c_0^N by binary powering.
Elem order1_term(const RecurrenceSpec& spec, const mpz_class& N, const Ring& ring,
                 OpCount* ops = nullptr);

// Bit length of N >= 1 (position of the leading bit plus one).
std::size_t bit_length(const mpz_class& N);

}  // namespace linrec

#pragma once

#include <cstddef>
#include <vector>

#include "recurrence.hpp"
#include "ring.hpp"

namespace linrec {

// Polynomial over the ring, coefficients ascending by power; coeffs[i] is the
// x^i coefficient. Trailing zeros are permitted and ignored by comparisons.
struct DensePolynomial {
  std::vector<Elem> coeffs;

  // Degree of the nonzero part; -1 for the zero polynomial.
  std::ptrdiff_t degree() const;
};

bool poly_equal(const DensePolynomial& a, const DensePolynomial& b, const Ring& ring);

// Monic characteristic polynomial of the recurrence,
// x^n - c_0 x^{n-1} - ... - c_{n-1}, with canonicalized coefficients.
DensePolynomial char_poly(const RecurrenceSpec& spec, const Ring& ring);

// f1 * f2 reduced mod the monic g. Schoolbook product: one big product per
// coefficient pair; folding the upper half back down multiplies only by
// coefficients of g, so the reduction is cheap. Inputs must already be
// reduced (degree below deg g).
DensePolynomial poly_mul_mod(const DensePolynomial& f1, const DensePolynomial& f2,
                             const DensePolynomial& g, const Ring& ring,
                             OpCount* ops = nullptr);

// f^2 mod g through the symmetric product: d(d+1)/2 big operations for a
// d+1-coefficient input (the diagonal as squarings, each cross pair once).
DensePolynomial poly_square_mod(const DensePolynomial& f, const DensePolynomial& g,
                                const Ring& ring, OpCount* ops = nullptr);

// x^N mod g by binary exponentiation, squaring via poly_square_mod and
// folding in the x factor as a cheap shift-and-reduce. N below deg g is a
// plain monomial and costs nothing.
DensePolynomial x_pow_mod(const mpz_class& N, const DensePolynomial& g,
                          const Ring& ring, OpCount* ops = nullptr);

// f_N by Fiduccia's method: with x^N = sum r_i x^i mod the characteristic
// polynomial, f_N = sum r_i a_i. The final combination is cheap.
Elem fiduccia_term(const RecurrenceSpec& spec, const mpz_class& N, const Ring& ring,
                   OpCount* ops = nullptr);

// f_N .. f_{N+count-1}: one exponentiation, then cheap shift-and-reduce steps.
std::vector<Elem> fiduccia_terms(const RecurrenceSpec& spec, const mpz_class& N,
                                 std::size_t count, const Ring& ring,
                                 OpCount* ops = nullptr);

}  // namespace linrec

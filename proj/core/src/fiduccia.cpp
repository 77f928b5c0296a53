#include "linrec/fiduccia.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace linrec {

namespace {

OpCount& counter(OpCount* ops, OpCount& local) { return ops ? *ops : local; }

// x^n == sum rule[i] x^i for the monic g of nominal degree n.
std::vector<Elem> reduction_rule(const DensePolynomial& g, const Ring& ring) {
  const std::size_t n = g.coeffs.size() - 1;
  std::vector<Elem> rule(n);
  for (std::size_t i = 0; i < n; ++i) rule[i] = ring.canon(-g.coeffs[i]);
  return rule;
}

// Fold coefficients at and above the nominal degree of g back down. Products
// involve coefficients of g only, so the whole fold is cheap.
void fold_down(std::vector<Elem>& prod, const std::vector<Elem>& rule, Ctx c) {
  const std::size_t n = rule.size();
  for (std::size_t d = prod.size(); d-- > n;) {
    for (std::size_t i = 0; i < n; ++i)
      prod[d - n + i] = c.add(prod[d - n + i], c.cmul(rule[i], prod[d]));
    prod[d] = 0;
  }
  prod.resize(std::max<std::size_t>(n, 1));
}

// r * x mod g, in place. Cheap: a shift plus one fold level.
void shift_reduce(std::vector<Elem>& r, const std::vector<Elem>& rule, Ctx c) {
  const std::size_t n = rule.size();
  Elem top = std::move(r.back());
  for (std::size_t i = n; i-- > 1;) r[i] = std::move(r[i - 1]);
  r[0] = 0;
  for (std::size_t i = 0; i < n; ++i) r[i] = c.add(r[i], c.cmul(rule[i], top));
}

void check_reduced(const DensePolynomial& f, std::size_t n, const char* who) {
  if (f.coeffs.empty() || f.coeffs.size() > n)
    throw std::invalid_argument(std::string(who) + ": operand not reduced mod g");
}

}  // namespace

std::ptrdiff_t DensePolynomial::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

bool poly_equal(const DensePolynomial& a, const DensePolynomial& b, const Ring& ring) {
  const std::size_t len = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Elem x = i < a.coeffs.size() ? ring.canon(a.coeffs[i]) : Elem(0);
    const Elem y = i < b.coeffs.size() ? ring.canon(b.coeffs[i]) : Elem(0);
    if (x != y) return false;
  }
  return true;
}

DensePolynomial char_poly(const RecurrenceSpec& spec, const Ring& ring) {
  const std::size_t n = spec.order();
  DensePolynomial g;
  g.coeffs.resize(n + 1);
  g.coeffs[n] = ring.canon(1);
  for (std::size_t i = 0; i < n; ++i)
    g.coeffs[n - 1 - i] = ring.canon(-spec.coeffs[i]);
  return g;
}

DensePolynomial poly_mul_mod(const DensePolynomial& f1, const DensePolynomial& f2,
                             const DensePolynomial& g, const Ring& ring,
                             OpCount* ops) {
  if (g.coeffs.size() < 2) throw std::invalid_argument("poly_mul_mod: modulus is constant");
  const std::size_t n = g.coeffs.size() - 1;
  check_reduced(f1, n, "poly_mul_mod");
  check_reduced(f2, n, "poly_mul_mod");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const std::size_t s1 = f1.coeffs.size(), s2 = f2.coeffs.size();
  std::vector<Elem> prod(s1 + s2 - 1, Elem(0));
  for (std::size_t i = 0; i < s1; ++i)
    for (std::size_t j = 0; j < s2; ++j)
      prod[i + j] = c.add(prod[i + j], c.mul(f1.coeffs[i], f2.coeffs[j]));
  fold_down(prod, reduction_rule(g, ring), c);
  return DensePolynomial{std::move(prod)};
}

DensePolynomial poly_square_mod(const DensePolynomial& f, const DensePolynomial& g,
                                const Ring& ring, OpCount* ops) {
  if (g.coeffs.size() < 2) throw std::invalid_argument("poly_square_mod: modulus is constant");
  const std::size_t n = g.coeffs.size() - 1;
  check_reduced(f, n, "poly_square_mod");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const std::size_t s = f.coeffs.size();
  std::vector<Elem> prod(2 * s - 1, Elem(0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      prod[i + j] = c.add(prod[i + j], c.twice(c.mul(f.coeffs[i], f.coeffs[j])));
  for (std::size_t i = 0; i < s; ++i)
    prod[2 * i] = c.add(prod[2 * i], c.sq(f.coeffs[i]));
  fold_down(prod, reduction_rule(g, ring), c);
  return DensePolynomial{std::move(prod)};
}

DensePolynomial x_pow_mod(const mpz_class& N, const DensePolynomial& g,
                          const Ring& ring, OpCount* ops) {
  if (N < 0) throw std::invalid_argument("x_pow_mod: exponent must be >= 0");
  if (g.coeffs.size() < 2) throw std::invalid_argument("x_pow_mod: modulus is constant");
  const std::size_t n = g.coeffs.size() - 1;
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  DensePolynomial r;
  r.coeffs.assign(n, Elem(0));
  if (N < static_cast<unsigned long>(n)) {
    r.coeffs[static_cast<std::size_t>(N.get_ui())] = ring.canon(1);
    return r;
  }
  const std::vector<Elem> rule = reduction_rule(g, ring);
  // x itself, reduced; for n = 1 that is already the constant rule[0].
  if (n == 1)
    r.coeffs[0] = rule[0];
  else
    r.coeffs[1] = ring.canon(1);
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;) {
    r = poly_square_mod(r, g, ring, &o);
    if (mpz_tstbit(N.get_mpz_t(), j)) shift_reduce(r.coeffs, rule, c);
  }
  return r;
}

Elem fiduccia_term(const RecurrenceSpec& spec, const mpz_class& N, const Ring& ring,
                   OpCount* ops) {
  if (N < 0) throw std::invalid_argument("fiduccia_term: index must be >= 0");
  const std::size_t n = spec.order();
  if (N < static_cast<unsigned long>(n))
    return ring.canon(spec.initials[static_cast<std::size_t>(N.get_ui())]);
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  DensePolynomial r = x_pow_mod(N, char_poly(spec, ring), ring, &o);
  Elem acc = c.cmul(r.coeffs[0], spec.initials[0]);
  for (std::size_t i = 1; i < n; ++i)
    acc = c.add(acc, c.cmul(r.coeffs[i], spec.initials[i]));
  return acc;
}

std::vector<Elem> fiduccia_terms(const RecurrenceSpec& spec, const mpz_class& N,
                                 std::size_t count, const Ring& ring, OpCount* ops) {
  if (count == 0) throw std::invalid_argument("fiduccia_terms: count must be >= 1");
  const std::size_t n = spec.order();
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  const DensePolynomial g = char_poly(spec, ring);
  const std::vector<Elem> rule = reduction_rule(g, ring);
  DensePolynomial r = x_pow_mod(N, g, ring, &o);
  std::vector<Elem> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    if (t > 0) shift_reduce(r.coeffs, rule, c);
    Elem acc = c.cmul(r.coeffs[0], spec.initials[0]);
    for (std::size_t i = 1; i < n; ++i)
      acc = c.add(acc, c.cmul(r.coeffs[i], spec.initials[i]));
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace linrec

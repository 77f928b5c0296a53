#include "linrec/recurrence.hpp"

#include <stdexcept>
#include <utility>

namespace linrec {

namespace {

OpCount& counter(OpCount* ops, OpCount& local) { return ops ? *ops : local; }

// f_{base+len} from the last n values of a scratch history (ascending).
Elem next_term(const RecurrenceSpec& spec, const std::vector<Elem>& hist, Ctx c) {
  const std::size_t n = spec.order();
  const std::size_t len = hist.size();
  Elem acc = c.cmul(spec.coeffs[0], hist[len - 1]);
  for (std::size_t i = 1; i < n; ++i)
    acc = c.add(acc, c.cmul(spec.coeffs[i], hist[len - 1 - i]));
  return acc;
}

}  // namespace

Elem recurrence_next(const RecurrenceSpec& spec, const std::vector<Elem>& hist,
                     const Ring& ring, OpCount* ops) {
  if (hist.size() < spec.order())
    throw std::invalid_argument("recurrence_next: history shorter than the order");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  return next_term(spec, hist, c);
}

RecurrenceSpec make_spec(std::vector<Elem> coeffs, std::vector<Elem> initials,
                         const Ring& ring) {
  if (coeffs.empty()) throw std::invalid_argument("make_spec: order must be >= 1");
  if (coeffs.size() != initials.size())
    throw std::invalid_argument("make_spec: need as many initial terms as coefficients");
  for (Elem& c : coeffs) c = ring.canon(std::move(c));
  for (Elem& a : initials) a = ring.canon(std::move(a));
  return RecurrenceSpec{std::move(coeffs), std::move(initials)};
}

RecurrenceSpec basis_spec(std::vector<Elem> coeffs, const Ring& ring) {
  std::vector<Elem> init(coeffs.size(), Elem(0));
  init.back() = 1;
  return make_spec(std::move(coeffs), std::move(init), ring);
}

Window slide_window(const RecurrenceSpec& spec, Window w, const Ring& ring,
                    OpCount* ops) {
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  Elem next = next_term(spec, w.values, c);
  w.values.erase(w.values.begin());
  w.values.push_back(std::move(next));
  w.base += 1;
  return w;
}

std::vector<Elem> iterate_terms(const RecurrenceSpec& spec, std::uint64_t N,
                                const Ring& ring, OpCount* ops) {
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const std::size_t n = spec.order();
  std::vector<Elem> out;
  out.reserve(std::max<std::uint64_t>(N + 1, n));
  for (std::size_t i = 0; i < n; ++i) out.push_back(spec.initials[i]);
  for (std::uint64_t k = n; k <= N; ++k) out.push_back(next_term(spec, out, c));
  out.resize(N + 1);
  return out;
}

std::vector<Elem> iterate_slice(const RecurrenceSpec& spec, std::uint64_t N,
                                std::size_t count, const Ring& ring, OpCount* ops) {
  if (count == 0) throw std::invalid_argument("iterate_slice: count must be >= 1");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const std::size_t n = spec.order();
  std::vector<Elem> hist = spec.initials;
  // Keep at most max(n, count) trailing terms; enough to slice the result.
  const std::size_t keep = std::max(n, count);
  for (std::uint64_t k = n; k <= N + count - 1; ++k) {
    hist.push_back(next_term(spec, hist, c));
    if (hist.size() > keep + n) hist.erase(hist.begin(), hist.begin() + n);
  }
  // hist now ends at index max(N + count - 1, n - 1).
  const std::uint64_t last = std::max<std::uint64_t>(N + count - 1, n - 1);
  std::vector<Elem> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint64_t idx = N + t;
    out.push_back(hist[hist.size() - 1 - (last - idx)]);
  }
  return out;
}

SquareMatrix SquareMatrix::zero(std::size_t n) {
  SquareMatrix m;
  m.n = n;
  m.a.assign(n * n, Elem(0));
  return m;
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SquareMatrix companion_matrix(const RecurrenceSpec& spec, const Ring& ring) {
  const std::size_t n = spec.order();
  SquareMatrix m = SquareMatrix::zero(n);
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = ring.canon(spec.coeffs[n - 1 - i]);
  return m;
}

SquareMatrix step_matrix(const RecurrenceSpec& spec, const Ring& ring) {
  const std::size_t n = spec.order();
  SquareMatrix m = SquareMatrix::zero(n);
  for (std::size_t j = 0; j < n; ++j) m.at(0, j) = ring.canon(spec.coeffs[j]);
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  return m;
}

SquareMatrix mat_mul(const SquareMatrix& x, const SquareMatrix& y, const Ring& ring,
                     OpCount* ops) {
  if (x.n != y.n) throw std::invalid_argument("mat_mul: size mismatch");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  SquareMatrix r = SquareMatrix::zero(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) {
      Elem acc = c.cmul(x.at(i, 0), y.at(0, j));
      for (std::size_t k = 1; k < x.n; ++k)
        acc = c.add(acc, c.cmul(x.at(i, k), y.at(k, j)));
      r.at(i, j) = std::move(acc);
    }
  return r;
}

SquareMatrix mat_pow(const SquareMatrix& m, const mpz_class& e, const Ring& ring,
                     OpCount* ops) {
  if (e < 0) throw std::invalid_argument("mat_pow: exponent must be >= 0");
  SquareMatrix r = SquareMatrix::identity(m.n);
  for (std::size_t i = 0; i < m.n * m.n; ++i) r.a[i] = ring.canon(std::move(r.a[i]));
  if (e == 0) return r;
  const std::size_t bits = bit_length(e);
  for (std::size_t j = bits; j-- > 0;) {
    if (j != bits - 1) r = mat_mul(r, r, ring, ops);
    if (mpz_tstbit(e.get_mpz_t(), j)) {
      if (j == bits - 1)
        r = m;  // leading bit
      else
        r = mat_mul(r, m, ring, ops);
    }
  }
  // Entries of m itself may not be canonical if the caller built it by hand.
  for (std::size_t i = 0; i < r.n * r.n; ++i) r.a[i] = ring.canon(std::move(r.a[i]));
  return r;
}

std::vector<Elem> mat_vec_mul(const SquareMatrix& m, const std::vector<Elem>& v,
                              const Ring& ring, OpCount* ops) {
  if (m.n != v.size()) throw std::invalid_argument("mat_vec_mul: size mismatch");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  std::vector<Elem> r(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    Elem acc = c.cmul(m.at(i, 0), v[0]);
    for (std::size_t k = 1; k < m.n; ++k) acc = c.add(acc, c.cmul(m.at(i, k), v[k]));
    r[i] = std::move(acc);
  }
  return r;
}

Window companion_power_window(const RecurrenceSpec& spec, const mpz_class& N,
                              const Ring& ring, OpCount* ops) {
  const std::size_t n = spec.order();
  // Row vector of the ascending window advances by right-multiplication with
  // the companion matrix; starting from the basis initials e_{n-1} the window
  // at N is the last row of C^N.
  SquareMatrix p = mat_pow(companion_matrix(spec, ring), N, ring, ops);
  Window w;
  w.base = N;
  w.values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) w.values.push_back(p.at(n - 1, j));
  return w;
}

std::vector<Elem> combine_coefficients(const RecurrenceSpec& spec, const Ring& ring,
                                       OpCount* ops) {
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const std::size_t n = spec.order();
  const auto& a = spec.initials;
  const auto& p = spec.coeffs;
  std::vector<Elem> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem acc = ring.canon(a[n - 1 - j]);
    for (std::size_t i = 0; i + j + 2 <= n; ++i)
      acc = c.sub(acc, c.cmul(a[n - j - 2 - i], p[i]));
    d[j] = std::move(acc);
  }
  return d;
}

Elem combine_forward(const RecurrenceSpec& spec, const Window& w, const Ring& ring,
                     OpCount* ops) {
  const std::size_t n = spec.order();
  if (w.values.size() != n)
    throw std::invalid_argument("combine_forward: window size mismatch");
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  std::vector<Elem> d = combine_coefficients(spec, ring, &o);
  Elem acc = c.cmul(d[0], w.values[0]);
  for (std::size_t j = 1; j < n; ++j) acc = c.add(acc, c.cmul(d[j], w.values[j]));
  return acc;
}

Elem combine_backward(const RecurrenceSpec& spec, const Window& w, const Ring& ring,
                      OpCount* ops) {
  const std::size_t n = spec.order();
  if (w.values.size() != n)
    throw std::invalid_argument("combine_backward: window size mismatch");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const auto& a = spec.initials;
  const auto& p = spec.coeffs;
  // Target index k = w.base + n - 1; w.values[n-1] is X_k and w.values[n-1-j]
  // is X_{k-j}.
  Elem acc = c.cmul(a[n - 1], w.values[n - 1]);
  for (std::size_t j = 1; j < n; ++j) {
    Elem inner = c.cmul(a[n - 2], w.values[n - 1 - j]);
    for (std::size_t i = 1; i < j; ++i)
      inner = c.add(inner, c.cmul(a[n - 2 - i], w.values[n - 1 - j + i]));
    acc = c.add(acc, c.cmul(p[j], inner));
  }
  return acc;
}

Elem order1_term(const RecurrenceSpec& spec, const mpz_class& N, const Ring& ring,
                 OpCount* ops) {
  if (spec.order() != 1) throw std::invalid_argument("order1_term: order must be 1");
  if (N < 0) throw std::invalid_argument("order1_term: index must be >= 0");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  if (N == 0) return ring.canon(spec.initials[0]);
  Elem acc = ring.canon(spec.coeffs[0]);
  const std::size_t bits = bit_length(N);
  for (std::size_t j = bits - 1; j-- > 0;) {
    acc = c.sq(acc);
    if (mpz_tstbit(N.get_mpz_t(), j)) acc = c.cmul(spec.coeffs[0], acc);
  }
  return c.cmul(spec.initials[0], acc);
}

std::size_t bit_length(const mpz_class& N) {
  if (N <= 0) throw std::invalid_argument("bit_length: need N >= 1");
  return mpz_sizeinbase(N.get_mpz_t(), 2);
}

}  // namespace linrec

#include "linrec/general.hpp"

#include <stdexcept>
#include <utility>

namespace linrec {

namespace {

OpCount& counter(OpCount* ops, OpCount& local) { return ops ? *ops : local; }

// Floor / ceil of v = n/2 - 1 for n >= 2.
std::size_t floor_v(std::size_t n) { return (n - 2) / 2; }
std::size_t ceil_v(std::size_t n) { return (n - 1) / 2; }

// X_{2b} from W[i] = X_{b+i}, i in [0, n). One big squaring when n is odd,
// plus one big product per summand; everything else cheap.
Elem eval_even(const RecurrenceSpec& spec, const Elem* W, Ctx c) {
  const std::size_t n = spec.order();
  const auto& p = spec.coeffs;
  const bool odd_order = (n & 1) != 0;
  const std::size_t fl = floor_v(n), cl = ceil_v(n);
  Elem acc;
  bool have = false;
  if (odd_order) {
    acc = c.sq(W[(n - 1) / 2]);
    have = true;
  }
  for (std::size_t i = 0; i <= fl; ++i) {
    Elem bracket = c.twice(W[cl + 1 + i]);
    bracket = c.sub(bracket, c.cmul(p[2 * i + (odd_order ? 1 : 0)], W[fl - i]));
    const std::ptrdiff_t hi = 2 * static_cast<std::ptrdiff_t>(i) - 1 + (odd_order ? 1 : 0);
    if (hi >= 0) {
      Elem s = c.cmul(p[0], W[cl + i]);
      for (std::ptrdiff_t j = 1; j <= hi; ++j)
        s = c.add(s, c.cmul(p[j], W[cl + i - j]));
      bracket = c.sub(bracket, c.twice(s));
    }
    Elem term = c.mul(W[fl - i], bracket);
    acc = have ? c.add(acc, term) : std::move(term);
    have = true;
  }
  return acc;
}

// X_{2b+1} from the same window. Two big squarings for even n, one for odd
// n, plus one big product per summand.
Elem eval_odd(const RecurrenceSpec& spec, const Elem* W, Ctx c) {
  const std::size_t n = spec.order();
  const auto& p = spec.coeffs;
  const bool odd_order = (n & 1) != 0;
  const std::size_t fl = floor_v(n), cl = ceil_v(n);
  Elem acc = c.cmul(p[n - 1], c.sq(W[0]));
  if (!odd_order) acc = c.add(acc, c.sq(W[n / 2]));
  for (std::size_t i = 0; i < cl; ++i) {
    Elem bracket = c.twice(W[fl + 2 + i]);
    bracket = c.sub(bracket, c.cmul(p[2 * i + (odd_order ? 0 : 1)], W[cl - i]));
    const std::ptrdiff_t hi = 2 * static_cast<std::ptrdiff_t>(i) - (odd_order ? 1 : 0);
    if (hi >= 0) {
      Elem s = c.cmul(p[0], W[fl + 1 + i]);
      for (std::ptrdiff_t j = 1; j <= hi; ++j)
        s = c.add(s, c.cmul(p[j], W[fl + 1 + i - j]));
      bracket = c.sub(bracket, c.twice(s));
    }
    acc = c.add(acc, c.mul(W[cl - i], bracket));
  }
  return acc;
}

}  // namespace

StepPlan make_step_plan(std::size_t order, int bit) {
  if (order < 2) throw std::invalid_argument("make_step_plan: order must be >= 2");
  if (bit != 0 && bit != 1) throw std::invalid_argument("make_step_plan: bit must be 0 or 1");
  StepPlan plan;
  plan.order = order;
  plan.bit = bit;
  plan.entries.reserve(order);
  for (std::size_t t = 0; t < order; ++t) {
    const std::size_t offset = static_cast<std::size_t>(bit) + t;
    plan.entries.push_back({offset, offset / 2, (offset & 1) != 0});
  }
  return plan;
}

Window double_step(const RecurrenceSpec& spec, const Window& w, int bit,
                   const Ring& ring, OpCount* ops) {
  const std::size_t n = spec.order();
  if (n < 2) throw std::invalid_argument("double_step: order must be >= 2");
  if (w.values.size() != n) throw std::invalid_argument("double_step: window size mismatch");
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  const StepPlan plan = make_step_plan(n, bit);
  // Shifted evaluations read up to X_{k+shift+n-1}; extend the window that
  // far with the recurrence (cheap).
  std::vector<Elem> ext = w.values;
  const std::size_t max_shift = plan.entries.back().shift;
  ext.reserve(n + max_shift);
  for (std::size_t t = 0; t < max_shift; ++t)
    ext.push_back(recurrence_next(spec, ext, ring, &o));
  Window out;
  out.base = 2 * w.base + bit;
  out.values.reserve(n);
  for (const StepEntry& entry : plan.entries) {
    const Elem* W = ext.data() + entry.shift;
    out.values.push_back(entry.odd ? eval_odd(spec, W, c) : eval_even(spec, W, c));
  }
  return out;
}

Window basis_window(const RecurrenceSpec& spec, const mpz_class& N,
                    const Ring& ring, OpCount* ops) {
  const std::size_t n = spec.order();
  if (n < 2) throw std::invalid_argument("basis_window: order must be >= 2");
  if (N < 0) throw std::invalid_argument("basis_window: index must be >= 0");
  OpCount local;
  OpCount& o = counter(ops, local);
  if (N < static_cast<unsigned long>(n)) {
    // Directly below the initial terms; extend them cheaply and slice.
    std::vector<Elem> hist(n, ring.canon(0));
    hist.back() = ring.canon(1);
    const std::size_t base = static_cast<std::size_t>(N.get_ui());
    while (hist.size() < base + n) hist.push_back(recurrence_next(spec, hist, ring, &o));
    Window w;
    w.base = N;
    w.values.assign(hist.begin() + base, hist.begin() + base + n);
    return w;
  }
  // Ladder from the window at 1: (X_1 .. X_n) = (0, ..., 0, 1, c_0).
  Window w;
  w.base = 1;
  w.values.assign(n, ring.canon(0));
  w.values[n - 2] = ring.canon(1);
  w.values[n - 1] = ring.canon(spec.coeffs[0]);
  const std::size_t m = bit_length(N);
  for (std::size_t j = m - 1; j-- > 0;)
    w = double_step(spec, w, mpz_tstbit(N.get_mpz_t(), j) ? 1 : 0, ring, &o);
  return w;
}

Elem nth_term(const RecurrenceSpec& spec, const mpz_class& N, const Ring& ring,
              OpCount* ops) {
  const std::size_t n = spec.order();
  if (n < 2) throw std::invalid_argument("nth_term: order must be >= 2");
  if (N < 0) throw std::invalid_argument("nth_term: index must be >= 0");
  if (N < static_cast<unsigned long>(n))
    return ring.canon(spec.initials[static_cast<std::size_t>(N.get_ui())]);
  Window w = basis_window(spec, N, ring, ops);
  return combine_forward(spec, w, ring, ops);
}

std::vector<Elem> nth_terms(const RecurrenceSpec& spec, const mpz_class& N,
                            std::size_t count, const Ring& ring, OpCount* ops) {
  const std::size_t n = spec.order();
  if (n < 2) throw std::invalid_argument("nth_terms: order must be >= 2");
  if (count == 0) throw std::invalid_argument("nth_terms: count must be >= 1");
  OpCount local;
  OpCount& o = counter(ops, local);
  Ctx c{ring, o};
  Window w = basis_window(spec, N, ring, &o);
  const std::vector<Elem> d = combine_coefficients(spec, ring, &o);
  std::vector<Elem> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    if (t > 0) w = slide_window(spec, std::move(w), ring, &o);
    Elem acc = c.cmul(d[0], w.values[0]);
    for (std::size_t j = 1; j < n; ++j) acc = c.add(acc, c.cmul(d[j], w.values[j]));
    out.push_back(std::move(acc));
  }
  return out;
}

SquareMatrix power_matrix(const RecurrenceSpec& spec, const Window& w,
                          const Ring& ring, OpCount* ops) {
  const std::size_t n = spec.order();
  if (w.values.size() != n)
    throw std::invalid_argument("power_matrix: window size mismatch");
  OpCount local;
  Ctx c{ring, counter(ops, local)};
  const auto& p = spec.coeffs;
  const auto& W = w.values;
  SquareMatrix r = SquareMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i >= j) {
        const std::size_t d = i - j;
        Elem acc = ring.canon(W[n - 1 - d]);
        for (std::size_t l = 0; l < j; ++l)
          acc = c.sub(acc, c.cmul(p[l], W[n - 2 - l - d]));
        r.at(i, j) = std::move(acc);
      } else {
        const std::size_t d = j - i;
        Elem acc = c.cmul(p[j], W[n - 2 - j + d]);
        for (std::size_t l = j + 1; l < n; ++l)
          acc = c.add(acc, c.cmul(p[l], W[n - 2 - l + d]));
        r.at(i, j) = std::move(acc);
      }
    }
  }
  return r;
}

}  // namespace linrec

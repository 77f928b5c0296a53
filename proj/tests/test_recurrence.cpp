#include <doctest.h>
#include <linrec/recurrence.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

#include "support.hpp"

using namespace linrec;

TEST_SUITE("recurrence") {

TEST_CASE("make_spec validates and canonicalizes") {
  Ring z = Ring::integers();
  CHECK_THROWS_AS(make_spec({}, {}, z), std::invalid_argument);
  CHECK_THROWS_AS(make_spec({1, 1}, {0}, z), std::invalid_argument);
  CHECK_THROWS_AS(make_spec({1}, {0, 1}, z), std::invalid_argument);

  Ring m = Ring::modulo(7);
  RecurrenceSpec s = make_spec({-1, 8}, {9, -2}, m);
  CHECK(s.order() == 2);
  CHECK(s.coeffs == std::vector<Elem>{6, 1});
  CHECK(s.initials == std::vector<Elem>{2, 5});
}

TEST_CASE("basis_spec pins the last initial") {
  Ring z = Ring::integers();
  RecurrenceSpec b = basis_spec({1, 2, 3}, z);
  CHECK(b.coeffs == std::vector<Elem>{1, 2, 3});
  CHECK(b.initials == std::vector<Elem>{0, 0, 1});
  CHECK(basis_spec({5}, z).initials == std::vector<Elem>{1});
}

TEST_CASE("iterate_terms walks fibonacci") {
  Ring z = Ring::integers();
  RecurrenceSpec fib = make_spec({1, 1}, {0, 1}, z);
  auto t = iterate_terms(fib, 10, z);
  REQUIRE(t.size() == 11);
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[2] == 1);
  CHECK(t[10] == 55);

  CHECK(iterate_terms(fib, 100, z)[100] == Elem("354224848179261915075"));

  Ring m = Ring::modulo(1000);
  CHECK(iterate_terms(make_spec({1, 1}, {0, 1}, m), 100, m)[100] == 75);
}

TEST_CASE("iterate_terms below the order truncates the initials") {
  Ring z = Ring::integers();
  RecurrenceSpec s = make_spec({1, 2, 3}, {4, 5, 6}, z);
  CHECK(iterate_terms(s, 1, z) == std::vector<Elem>{4, 5});
  CHECK(iterate_terms(s, 0, z) == std::vector<Elem>{4});
}

TEST_CASE("iterate_terms counts n cheap products per step") {
  Ring z = Ring::integers();
  RecurrenceSpec s = basis_spec({1, 2, 3}, z);
  OpCount ops;
  iterate_terms(s, 12, z, &ops);
  CHECK(ops.big_total() == 0);
  // 10 steps, each 3 products and 2 additions
  CHECK(ops.cheap == 50);
}

TEST_CASE("iterate_slice matches iterate_terms") {
  testsup::Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Ring ring = rng.ring(trial % 2 == 1);
    std::size_t n = 1 + rng.below(6);
    RecurrenceSpec s = rng.spec(n, ring);
    std::uint64_t N = rng.below(300);
    std::size_t count = 1 + rng.below(8);
    auto all = iterate_terms(s, N + count - 1, ring);
    auto slc = iterate_slice(s, N, count, ring);
    REQUIRE(slc.size() == count);
    for (std::size_t i = 0; i < count; ++i) CHECK(slc[i] == all[N + i]);
  }
}

TEST_CASE("recurrence_next reads the tail of the history") {
  Ring z = Ring::integers();
  RecurrenceSpec fib = make_spec({1, 1}, {0, 1}, z);
  CHECK(recurrence_next(fib, {3, 5}, z) == 8);
  CHECK(recurrence_next(fib, {1, 1, 2, 3}, z) == 5);
}

TEST_CASE("slide_window advances the base") {
  Ring z = Ring::integers();
  RecurrenceSpec fib = make_spec({1, 1}, {0, 1}, z);
  Window w{5, {5, 8}};
  w = slide_window(fib, std::move(w), z);
  CHECK(w.base == 6);
  CHECK(w.values == std::vector<Elem>{8, 13});
}

TEST_CASE("companion and step matrices have the documented shape") {
  Ring z = Ring::integers();
  RecurrenceSpec s = make_spec({5, 6, 7}, {0, 0, 1}, z);

  SquareMatrix c = companion_matrix(s, z);
  CHECK(c.at(0, 0) == 0);
  CHECK(c.at(1, 0) == 1);
  CHECK(c.at(2, 1) == 1);
  CHECK(c.at(0, 2) == 7);
  CHECK(c.at(1, 2) == 6);
  CHECK(c.at(2, 2) == 5);

  SquareMatrix m = step_matrix(s, z);
  CHECK(m.at(0, 0) == 5);
  CHECK(m.at(0, 1) == 6);
  CHECK(m.at(0, 2) == 7);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(2, 1) == 1);
  CHECK(m.at(2, 2) == 0);
}

TEST_CASE("step matrix advances descending windows") {
  Ring z = Ring::integers();
  RecurrenceSpec fib = make_spec({1, 1}, {0, 1}, z);
  auto v = mat_vec_mul(step_matrix(fib, z), {8, 5}, z);
  CHECK(v == std::vector<Elem>{13, 8});
}

TEST_CASE("mat_pow matches repeated multiplication") {
  testsup::Rng rng(11);
  Ring m = rng.mod_ring();
  RecurrenceSpec s = rng.spec(4, m);
  SquareMatrix base = step_matrix(s, m);
  SquareMatrix acc = SquareMatrix::identity(4);
  for (unsigned long e = 0; e <= 9; ++e) {
    SquareMatrix p = mat_pow(base, e, m);
    for (std::size_t i = 0; i < 16; ++i) CHECK(p.a[i] == m.canon(acc.a[i]));
    acc = mat_mul(acc, base, m);
  }
}

TEST_CASE("companion_power_window is the basis window") {
  testsup::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Ring ring = rng.ring(trial % 2 == 1);
    std::size_t n = 2 + rng.below(4);
    RecurrenceSpec s = rng.spec(n, ring);
    std::uint64_t N = rng.below(200);
    Window w = companion_power_window(s, N, ring);
    CHECK(w.base == N);
    auto ref = iterate_terms(basis_spec(s.coeffs, ring), N + n - 1, ring);
    for (std::size_t i = 0; i < n; ++i) CHECK(w.values[i] == ref[N + i]);
  }
}

TEST_CASE("forward combination rebuilds a sequence from the basis") {
  Ring z = Ring::integers();
  // lucas numbers 2, 1, 3, 4, 7, 11, ... on the fibonacci basis
  RecurrenceSpec luc = make_spec({1, 1}, {2, 1}, z);
  CHECK(combine_coefficients(luc, z) == std::vector<Elem>{-1, 2});
  CHECK(combine_forward(luc, Window{5, {5, 8}}, z) == 11);
  CHECK(combine_forward(luc, Window{10, {55, 89}}, z) == 123);
}

TEST_CASE("forward and backward combinations agree with iteration") {
  testsup::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Ring ring = rng.ring(trial % 2 == 1);
    std::size_t n = 1 + rng.below(6);
    RecurrenceSpec s = rng.spec(n, ring);
    std::uint64_t k = rng.below(120);
    auto ref = iterate_terms(s, k + n, ring);
    auto bas = iterate_terms(basis_spec(s.coeffs, ring), k + n, ring);
    Window w{k, std::vector<Elem>(bas.begin() + static_cast<std::ptrdiff_t>(k),
                                  bas.begin() + static_cast<std::ptrdiff_t>(k + n))};
    OpCount ops;
    CHECK(combine_forward(s, w, ring, &ops) == ref[k]);
    CHECK(combine_backward(s, w, ring, &ops) == ref[k + n - 1]);
    CHECK(ops.big_total() == 0);
  }
}

TEST_CASE("order1 powering") {
  Ring z = Ring::integers();
  RecurrenceSpec s = make_spec({3}, {5}, z);
  CHECK(order1_term(s, 0, z) == 5);
  CHECK(order1_term(s, 7, z) == 10935);
  auto ref = iterate_terms(s, 20, z);
  for (std::uint64_t N = 0; N <= 20; ++N) CHECK(order1_term(s, N, z) == ref[N]);

  Ring m = Ring::modulo(1000003);
  RecurrenceSpec sm = make_spec({-3}, {5}, m);
  auto refm = iterate_terms(sm, 64, m);
  CHECK(order1_term(sm, 64, m) == refm[64]);
}

TEST_CASE("bit_length") {
  CHECK(bit_length(1) == 1);
  CHECK(bit_length(2) == 2);
  CHECK(bit_length(3) == 2);
  CHECK(bit_length(1024) == 11);
  CHECK(bit_length(Elem("340282366920938463463374607431768211456")) == 129);
}

}  // TEST_SUITE

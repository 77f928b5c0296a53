#include <doctest.h>
#include <linrec/fiduccia.hpp>

#include <cstdint>
#include <vector>

#include "support.hpp"

using namespace linrec;

TEST_SUITE("fiduccia") {

TEST_CASE("characteristic polynomial") {
  Ring z = Ring::integers();
  RecurrenceSpec fib = make_spec({1, 1}, {0, 1}, z);
  DensePolynomial g = char_poly(fib, z);
  CHECK(g.coeffs == std::vector<Elem>{-1, -1, 1});
  CHECK(g.degree() == 2);

  RecurrenceSpec s = make_spec({5, -7, 2}, {0, 0, 1}, z);
  CHECK(char_poly(s, z).coeffs == std::vector<Elem>{-2, 7, -5, 1});

  Ring m = Ring::modulo(5);
  RecurrenceSpec sm = make_spec({1, 1}, {0, 1}, m);
  CHECK(char_poly(sm, m).coeffs == std::vector<Elem>{4, 4, 1});
}

TEST_CASE("degree ignores stored zeros") {
  Ring z = Ring::integers();
  DensePolynomial p{{1, 2, 0, 0}};
  CHECK(p.degree() == 1);
  CHECK(DensePolynomial{{0, 0}}.degree() == -1);
  CHECK(DensePolynomial{}.degree() == -1);
  CHECK(poly_equal(p, DensePolynomial{{1, 2}}, z));
  CHECK_FALSE(poly_equal(p, DensePolynomial{{0, 0}}, z));
  Ring m = Ring::modulo(7);
  CHECK(poly_equal(DensePolynomial{{8, -6}}, DensePolynomial{{1, 1}}, m));
}

TEST_CASE("squaring mod the characteristic polynomial") {
  Ring z = Ring::integers();
  DensePolynomial g{{-1, -1, 1}};  // x^2 - x - 1
  DensePolynomial f{{3, -2}};      // -2x + 3
  OpCount ops;
  DensePolynomial sq = poly_square_mod(f, g, z, &ops);
  CHECK(sq.coeffs == std::vector<Elem>{13, -8});
  CHECK(ops.big_mul == 1);
  CHECK(ops.big_sq == 2);

  CHECK(poly_equal(poly_mul_mod(f, f, g, z), sq, z));
}

TEST_CASE("multiplication mod a cubic, reduced by hand") {
  Ring z = Ring::integers();
  DensePolynomial g{{-2, 7, -5, 1}};  // x^3 - 5x^2 + 7x - 2
  DensePolynomial a{{1, 2, 3}};
  DensePolynomial b{{4, 0, 5}};
  OpCount ops;
  DensePolynomial ab = poly_mul_mod(a, b, g, z, &ops);
  REQUIRE(ab.coeffs.size() == 3);
  CHECK(ab.coeffs == std::vector<Elem>{174, -557, 337});
  // one big product per coefficient pair
  CHECK(ops.big_mul == 9);
  CHECK(ops.big_sq == 0);
}

TEST_CASE("operands must be reduced") {
  Ring z = Ring::integers();
  DensePolynomial g{{-1, -1, 1}};
  DensePolynomial wide{{1, 2, 3}};
  CHECK_THROWS_AS(poly_square_mod(wide, g, z), std::invalid_argument);
  CHECK_THROWS_AS(poly_mul_mod(wide, wide, g, z), std::invalid_argument);
}

TEST_CASE("x_pow_mod tracks fibonacci pairs") {
  Ring z = Ring::integers();
  DensePolynomial g{{-1, -1, 1}};
  DensePolynomial r = x_pow_mod(10, g, z);
  CHECK(r.coeffs == std::vector<Elem>{34, 55});  // F_9 + F_10 x

  OpCount none;
  DensePolynomial low = x_pow_mod(1, g, z, &none);
  CHECK(low.coeffs == std::vector<Elem>{0, 1});
  CHECK(none == OpCount{});
}

TEST_CASE("exponentiation cost is structural") {
  Ring m = Ring::modulo(1000000007);
  DensePolynomial g{{-1, -1, 1}};
  OpCount ops;
  x_pow_mod(10, g, m, &ops);
  CHECK(ops.big_mul == 3);
  CHECK(ops.big_sq == 6);

  // order-n ladder: n(n-1)/2 products and n squarings per squaring step
  testsup::Rng rng(97);
  for (std::size_t n : {3ul, 5ul, 8ul}) {
    RecurrenceSpec s = basis_spec(rng.small_vec(n), m);
    std::uint64_t N = 1000003;
    OpCount o;
    x_pow_mod(N, char_poly(s, m), m, &o);
    std::size_t L = testsup::ladder_len(N);
    CHECK(o.big_mul == n * (n - 1) / 2 * L);
    CHECK(o.big_sq == n * L);
  }
}

TEST_CASE("term extraction on fibonacci") {
  Ring z = Ring::integers();
  RecurrenceSpec fib = make_spec({1, 1}, {0, 1}, z);
  CHECK(fiduccia_term(fib, 100, z) == Elem("354224848179261915075"));
  CHECK(fiduccia_term(fib, 0, z) == 0);
  CHECK(fiduccia_term(fib, 1, z) == 1);
}

TEST_CASE("terms against iteration, all orders and both rings") {
  testsup::Rng rng(101);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      Ring ring = rng.ring(trial % 2 == 1);
      RecurrenceSpec s = rng.spec(n, ring);
      std::uint64_t N = rng.below(900);
      std::size_t count = 1 + rng.below(4);
      auto ref = iterate_terms(s, N + count, ring);
      CHECK(fiduccia_term(s, N, ring) == ref[N]);
      auto slice = fiduccia_terms(s, N, count, ring);
      REQUIRE(slice.size() == count);
      for (std::size_t i = 0; i < count; ++i) CHECK(slice[i] == ref[N + i]);
    }
  }
}

TEST_CASE("order one reduces to plain powers") {
  Ring z = Ring::integers();
  RecurrenceSpec s = make_spec({3}, {5}, z);
  CHECK(fiduccia_term(s, 7, z) == 10935);
  auto ref = iterate_terms(s, 16, z);
  for (std::uint64_t N = 0; N <= 16; ++N) CHECK(fiduccia_term(s, N, z) == ref[N]);
}

}  // TEST_SUITE

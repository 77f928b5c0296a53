#include <doctest.h>
#include <linrec/ring.hpp>

#include <stdexcept>

using namespace linrec;

TEST_SUITE("ring") {

TEST_CASE("integers passes values through") {
  Ring z = Ring::integers();
  CHECK_FALSE(z.modular());
  CHECK(z.canon(Elem(-7)) == -7);
  CHECK_THROWS_AS(z.modulus(), std::logic_error);

  OpCount ops;
  CHECK(z.add(3, 4, ops) == 7);
  CHECK(z.sub(3, 4, ops) == -1);
  CHECK(z.neg(5, ops) == -5);
  CHECK(z.mul(6, 7, Cost::big, ops) == 42);
  CHECK(z.square(-9, ops) == 81);
}

TEST_CASE("modulo canonicalizes into [0, m)") {
  Ring m = Ring::modulo(10);
  CHECK(m.modular());
  CHECK(m.modulus() == 10);
  CHECK(m.canon(23) == 3);
  CHECK(m.canon(-1) == 9);
  CHECK(m.canon(-30) == 0);

  OpCount ops;
  CHECK(m.add(7, 8, ops) == 5);
  CHECK(m.sub(3, 4, ops) == 9);
  CHECK(m.neg(3, ops) == 7);
  CHECK(m.mul(6, 7, Cost::big, ops) == 2);
  CHECK(m.square(7, ops) == 9);
  CHECK(m.equal(13, 3));
  CHECK(m.equal(-1, 9));
  CHECK_FALSE(m.equal(1, 2));
}

TEST_CASE("modulus one is the zero ring") {
  Ring one = Ring::modulo(1);
  OpCount ops;
  CHECK(one.canon(12345) == 0);
  CHECK(one.mul(3, 4, Cost::big, ops) == 0);
  CHECK(one.add(3, 4, ops) == 0);
}

TEST_CASE("bad modulus is rejected") {
  CHECK_THROWS_AS(Ring::modulo(0), std::invalid_argument);
  CHECK_THROWS_AS(Ring::modulo(-3), std::invalid_argument);
}

TEST_CASE("rings compare by modulus") {
  CHECK(Ring::integers() == Ring::integers());
  CHECK(Ring::modulo(7) == Ring::modulo(7));
  CHECK_FALSE(Ring::modulo(7) == Ring::modulo(8));
  CHECK_FALSE(Ring::integers() == Ring::modulo(7));
}

TEST_CASE("tally separates products by role") {
  Ring z = Ring::integers();
  OpCount ops;
  z.mul(2, 3, Cost::big, ops);
  z.mul(2, 3, Cost::cheap, ops);
  z.square(5, ops);
  z.add(1, 1, ops);
  z.sub(1, 1, ops);
  z.neg(1, ops);
  CHECK(ops.big_mul == 1);
  CHECK(ops.big_sq == 1);
  CHECK(ops.cheap == 4);
  CHECK(ops.big_total() == 2);

  OpCount more = ops;
  more += ops;
  CHECK(more == OpCount{2, 2, 8});
  CHECK(ops == OpCount{1, 1, 4});
}

TEST_CASE("ctx helpers") {
  Ring m = Ring::modulo(97);
  OpCount ops;
  Ctx c{m, ops};
  CHECK(c.mul(10, 10) == 3);
  CHECK(c.sq(10) == 3);
  CHECK(c.cmul(3, 40) == 23);
  CHECK(c.twice(50) == 3);
  CHECK(c.add(96, 2) == 1);
  CHECK(c.sub(1, 2) == 96);
  CHECK(ops.big_mul == 1);
  CHECK(ops.big_sq == 1);
  CHECK(ops.cheap == 4);
}

}  // TEST_SUITE

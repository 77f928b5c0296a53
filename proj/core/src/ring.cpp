#include "linrec/ring.hpp"

#include <stdexcept>

namespace linrec {

Ring Ring::modulo(Elem m) {
  if (m < 1) throw std::invalid_argument("Ring::modulo: modulus must be >= 1");
  return Ring(std::optional<Elem>(std::move(m)));
}

const Elem& Ring::modulus() const {
  if (!mod_) throw std::logic_error("Ring::modulus: ring is not modular");
  return *mod_;
}

Elem Ring::canon(Elem v) const {
  if (mod_) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mod_->get_mpz_t());
  return v;
}

Elem Ring::add(const Elem& x, const Elem& y, OpCount& ops) const {
  ops.cheap += 1;
  return canon(x + y);
}

Elem Ring::sub(const Elem& x, const Elem& y, OpCount& ops) const {
  ops.cheap += 1;
  return canon(x - y);
}

Elem Ring::neg(const Elem& x, OpCount& ops) const {
  ops.cheap += 1;
  return canon(-x);
}

Elem Ring::mul(const Elem& x, const Elem& y, Cost cost, OpCount& ops) const {
  if (cost == Cost::big)
    ops.big_mul += 1;
  else
    ops.cheap += 1;
  return canon(x * y);
}

Elem Ring::square(const Elem& x, OpCount& ops) const {
  ops.big_sq += 1;
  return canon(x * x);
}

}  // namespace linrec

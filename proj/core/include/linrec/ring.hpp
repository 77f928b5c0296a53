#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>

namespace linrec {

// Sequence values and recurrence constants. Arbitrary precision throughout;
// in a residue ring every stored value is the canonical representative in
// [0, m).
using Elem = mpz_class;

// Cost class of a single product, chosen by the caller. A product of two
// sequence-derived values is big; a product involving a recurrence
// coefficient, an initial value, or a small constant is cheap. The class is
// decided by the role of the operands, not by their current magnitude, so
// counts are identical across rings.
enum class Cost { big, cheap };

// Operation tally for one computation. Squarings are tracked separately from
// general big products because the fast backends trade one for the other.
struct OpCount {
  std::uint64_t big_mul = 0;
  std::uint64_t big_sq = 0;
  std::uint64_t cheap = 0;

  std::uint64_t big_total() const { return big_mul + big_sq; }

  OpCount& operator+=(const OpCount& o) {
    big_mul += o.big_mul;
    big_sq += o.big_sq;
    cheap += o.cheap;
    return *this;
  }

  friend bool operator==(const OpCount&, const OpCount&) = default;
};

// Z or Z/mZ, m >= 1. Every operation canonicalizes its result, so values
// coming out of a modular ring always lie in [0, m). Mod(1) is the zero
// ring; a zero or negative modulus is rejected.
class Ring {
 public:
  static Ring integers() { return Ring(std::nullopt); }
  static Ring modulo(Elem m);

  bool modular() const { return mod_.has_value(); }
  const Elem& modulus() const;  // only valid when modular()

  // Canonical representative of v.
  Elem canon(Elem v) const;

  Elem add(const Elem& x, const Elem& y, OpCount& ops) const;
  Elem sub(const Elem& x, const Elem& y, OpCount& ops) const;
  Elem neg(const Elem& x, OpCount& ops) const;
  Elem mul(const Elem& x, const Elem& y, Cost cost, OpCount& ops) const;
  Elem square(const Elem& x, OpCount& ops) const;

  bool equal(const Elem& x, const Elem& y) const { return canon(x) == canon(y); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.mod_ == b.mod_; }

 private:
  explicit Ring(std::optional<Elem> m) : mod_(std::move(m)) {}

  std::optional<Elem> mod_;
};

// Call-site shorthand used by the formula-heavy engines. Bundles the ring
// with the tally so a doubling identity reads close to its algebraic form.
struct Ctx {
  const Ring& ring;
  OpCount& ops;

  Elem add(const Elem& x, const Elem& y) const { return ring.add(x, y, ops); }
  Elem sub(const Elem& x, const Elem& y) const { return ring.sub(x, y, ops); }
  Elem mul(const Elem& x, const Elem& y) const { return ring.mul(x, y, Cost::big, ops); }
  Elem sq(const Elem& x) const { return ring.square(x, ops); }
  // Product with a coefficient-like operand.
  Elem cmul(const Elem& c, const Elem& x) const { return ring.mul(c, x, Cost::cheap, ops); }
  Elem twice(const Elem& x) const { return ring.mul(2, x, Cost::cheap, ops); }
};

}  // namespace linrec

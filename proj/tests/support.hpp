#pragma once

#include <linrec/linrec.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace testsup {

using linrec::Elem;
using linrec::Ring;

// Deterministic source for the randomized cases. Draws use modulo reduction;
// the bias is irrelevant at these ranges.
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t below(std::uint64_t bound) { return gen() % bound; }

  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Elem small(long lo = -9, long hi = 9) { return Elem(range(lo, hi)); }

  std::vector<Elem> small_vec(std::size_t n, long lo = -9, long hi = 9) {
    std::vector<Elem> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(small(lo, hi));
    return v;
  }

  linrec::RecurrenceSpec spec(std::size_t n, const Ring& ring) {
    return linrec::make_spec(small_vec(n), small_vec(n), ring);
  }

  // Modulus in [2, 2^64 + 1]; skipping the zero ring keeps value checks
  // meaningful.
  Ring mod_ring() { return Ring::modulo(Elem(2) + Elem(static_cast<unsigned long>(gen()))); }

  Ring ring(bool modular) { return modular ? mod_ring() : Ring::integers(); }
};

// Ladder iterations for index N: bits below the leading one.
inline std::size_t ladder_len(std::uint64_t N) {
  std::size_t b = 0;
  while (N) {
    ++b;
    N >>= 1;
  }
  return b ? b - 1 : 0;
}

}  // namespace testsup

#pragma once

#include <cstddef>
#include <vector>

#include "recurrence.hpp"
#include "ring.hpp"

namespace linrec {

// Schedule of one doubling step for an order-n window. Entry t states that
// output X_{2k + offset} is the parity formula (even or odd) evaluated on the
// window shifted to base k + shift. Offsets cover bit .. bit+n-1 and every
// shift is at most n/2, so a step only ever needs the window plus a cheap
// recurrence extension of n/2 terms.
struct StepEntry {
  std::size_t offset;  // index of the output relative to 2k
  std::size_t shift;   // window shift the formula is evaluated at
  bool odd;            // odd-index formula vs even-index formula
};

struct StepPlan {
  std::size_t order = 0;
  int bit = 0;
  std::vector<StepEntry> entries;  // one per output, ascending offset
};

StepPlan make_step_plan(std::size_t order, int bit);

// Basis window at 2k+bit from the basis window at k, for any order n >= 2.
//
// The two base formulas split on the parity of the target index. With
// e = n mod 2 and v = n/2 - 1:
//
//   X_{2k}   = e X_{k+(n-1)/2}^2
//            + sum_{i=0}^{floor(v)} X_{k+floor(v)-i} (2 X_{k+ceil(v)+1+i}
//                - c_{2i+e} X_{k+floor(v)-i}
//                - 2 sum_{j=0}^{2i-1+e} c_j X_{k+ceil(v)+i-j})
//
//   X_{2k+1} = c_{n-1} X_k^2 + (1-e) X_{k+n/2}^2
//            + sum_{i=0}^{ceil(v)-1} X_{k+ceil(v)-i} (2 X_{k+floor(v)+2+i}
//                - c_{2i+1-e} X_{k+ceil(v)-i}
//                - 2 sum_{j=0}^{2i-e} c_j X_{k+floor(v)+1+i-j})
//
// Shifted outputs evaluate the same two formulas at window base k+shift; the
// bracketed factors stay intact, so each output costs (n+1)/2 big operations
// for odd n, and n/2 or n/2+1 for even n, i.e. n(n+1)/2 per step in total.
// For n = 2, 3, 4 the step reproduces the dedicated engines product for
// product and squaring for squaring.
Window double_step(const RecurrenceSpec& spec, const Window& w, int bit,
                   const Ring& ring, OpCount* ops = nullptr);

// Basis window at N by the binary ladder over double_step, scanning the bits
// of N below the leading one. N < n is answered directly from the initial
// terms with cheap operations; for N >= n the ladder performs exactly
// n(n+1)/2 * floor(log2 N) big operations. Ignores spec.initials.
Window basis_window(const RecurrenceSpec& spec, const mpz_class& N,
                    const Ring& ring, OpCount* ops = nullptr);

// f_N for the full spec: basis window at N plus the cheap forward
// combination. N below the order returns the stored initial term.
Elem nth_term(const RecurrenceSpec& spec, const mpz_class& N, const Ring& ring,
              OpCount* ops = nullptr);

// f_N .. f_{N+count-1}: one basis window, then cheap slides and combines.
std::vector<Elem> nth_terms(const RecurrenceSpec& spec, const mpz_class& N,
                            std::size_t count, const Ring& ring,
                            OpCount* ops = nullptr);

// The n x n matrix R with R (f_{k+n-1}, ..., f_k)^T = (f_{2k+n-1}, ..., f_{2k})^T
// for every sequence on these coefficients; equals the k-th power of the
// step matrix. Built from the basis window at k with cheap products only.
// One-based entry (i, j):
//
//   i >= j:  X_{k+n-1-(i-j)} - sum_{l=0}^{j-2} c_l X_{k+n-2-l-(i-j)}
//   i <  j:  sum_{l=j-1}^{n-1} c_l X_{k+n-2-l-(i-j)}
//
// Every index referenced lies inside the window, for any k >= 0.
SquareMatrix power_matrix(const RecurrenceSpec& spec, const Window& w,
                          const Ring& ring, OpCount* ops = nullptr);

}  // namespace linrec

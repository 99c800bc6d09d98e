#ifndef MINDSWAP_KEELER_TWO_HPP
#define MINDSWAP_KEELER_TWO_HPP

#include <vector>

#include "mindswap/plan.hpp"

namespace mindswap {

// Two-machine (transposition) solver using two outsiders x and y.
//
// Lists returned by taubar/taucar are in written order: the product is read
// left to right with the rightmost factor acting first. Plans are
// chronological.

/// [(x a2), (x a3), ..., (x ak)] for tau = (a1 ... ak) with a1 its leader.
std::vector<MachineMove> taubar(const Cycle& tau, const Element& x);

/// taubar(tau, x) followed by [(y a1), (y a2), (x a1)]. Its product times
/// tau is the transposition (x y).
std::vector<MachineMove> taucar(const Cycle& tau, const Element& x, const Element& y);

struct TwoMachinePlan {
  Plan moves;
  Element x = Element::outsider(1);
  Element y = Element::outsider(2);
};

/// Inverts an insider-only permutation with distinct outsider-containing
/// transpositions. Uses (x y) then the taucar of each cycle, last cycle
/// first; the leading (x y) is only needed for an odd number of cycles.
TwoMachinePlan solve_two_machine(const Permutation& sigma);

/// Σ (k_i + 2) + (j mod 2) over the j cycles of sigma.
std::size_t two_machine_move_count(const Permutation& sigma);

}  // namespace mindswap

#endif  // MINDSWAP_KEELER_TWO_HPP

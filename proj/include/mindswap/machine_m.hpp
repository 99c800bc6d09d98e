#ifndef MINDSWAP_MACHINE_M_HPP
#define MINDSWAP_MACHINE_M_HPP

#include <span>
#include <vector>

#include "mindswap/plan.hpp"

namespace mindswap {

// Solver for machines that cycle m >= 3 people, where no seat set may be used
// twice and every use includes an outsider. All returned move lists are
// chronological.

/// Outsiders needed: m - 2 for odd m, 3 (m/2 - 1) for even m.
std::size_t outsider_pool_size(int m);

/// Whether sigma lies in the group generated by m-cycles: the alternating
/// group for odd m, everything for even m.
bool membership_check(const Permutation& sigma, int m);

/// Two m-cycles inverting the 3-cycle (a1 a2 a3):
/// (a3 a2 x_{m-2} ... x1) then (a1 a3 x1 ... x_{m-2}).
std::vector<MachineMove> invert_three_cycle(const Cycle& tau, std::span<const Element> pool, int m);

/// Chains tau into overlapping 3-cycles (a1 a2 a3)(a3 a4 a5)... and inverts
/// each; k - 1 moves.
std::vector<MachineMove> invert_odd_cycle(const Cycle& tau, std::span<const Element> pool, int m);

/// Inverts two disjoint even cycles together under an odd machine: both odd
/// prefixes, then the pair of trailing transpositions via two 3-cycles.
std::vector<MachineMove> invert_even_pair_odd_m(const Cycle& tau_i, const Cycle& tau_j,
                                                std::span<const Element> pool, int m);

/// Three m-cycles whose product is the transposition tau = (a1 a2), built from
/// three pools w, y, z of m/2 - 1 outsiders each.
std::vector<MachineMove> invert_transposition_even_m(const Cycle& tau, std::span<const Element> w,
                                                     std::span<const Element> y,
                                                     std::span<const Element> z, int m);

/// Checks the even-m generator identities on elements {y, x, a1 .. a_{m-2}}
/// (given in that order): the two m-cycles
/// (y a1 x a2 ... a_{m-2})(y x a1 ... a_{m-2}) give the (m-1)-cycle
/// (y a2 a4 ... a_{m-2} a1 a3 ... a_{m-3}), and that times
/// (x y a_{m-3} ... a3 a1 a_{m-2} ... a4 a2) collapses to (x y).
bool generator_identity_check(int m, std::span<const Element> elements);

struct MPlan {
  int m = 3;
  Plan moves;
  std::vector<Element> outsider_pool;
};

MPlan solve_m_machine(const Permutation& sigma, int m);

}  // namespace mindswap

#endif  // MINDSWAP_MACHINE_M_HPP

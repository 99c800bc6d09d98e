#ifndef MINDSWAP_OPTIMAL_THREE_HPP
#define MINDSWAP_OPTIMAL_THREE_HPP

#include <span>
#include <vector>

#include "mindswap/plan.hpp"

namespace mindswap {

// Optimal 3-machine solver: one outsider x, exactly (n + r) / 2 uses where n
// counts moved insiders and r counts cycles. Move lists are chronological.

/// Number of insider seats across the plan. Every move must contain an
/// outsider; for 3-cycles with a single outsider this is 2 |moves|.
std::size_t insider_count(std::span<const MachineMove> moves);

/// Odd cycle (a1 ... ak): (a2 a1 x), then (ak a_{k-1} x), ..., (a3 a2 x).
/// (k + 1) / 2 moves.
std::vector<MachineMove> f_construction(const Cycle& tau, const Element& x);

/// Two disjoint even cycles (b1 ... b_{k1}) and (c1 ... c_{k2}):
/// (c_{k2} b_{k1} x), the b-chain (b_{l+1} b_l x) for even l descending,
/// (b1 b_{k1} x), the c-chain likewise, then (c1 c_{k2} x).
/// (k1 + k2 + 2) / 2 moves.
std::vector<MachineMove> g_construction(const Cycle& tau_v, const Cycle& tau_w, const Element& x);

struct ThreePlan {
  Plan moves;
  Element x = Element::outsider(1);
  std::size_t moved_insiders = 0;  // n
  std::size_t cycle_count = 0;     // r
};

ThreePlan solve_three_machine_optimal(const Permutation& sigma);

/// (n + r) / 2, the minimum number of 3-machine uses for any number of
/// outsiders d >= 1. Throws UnsolvableError for odd sigma.
std::size_t lower_bound(const Permutation& sigma);

}  // namespace mindswap

#endif  // MINDSWAP_OPTIMAL_THREE_HPP

#include "mindswap/optimal_three.hpp"

#include <set>

namespace mindswap {

std::size_t insider_count(std::span<const MachineMove> moves) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (!moves[i].has_outsider())
      throw std::invalid_argument("move " + std::to_string(i) + " has no outsider");
    total += moves[i].insider_count();
  }
  return total;
}

std::vector<MachineMove> f_construction(const Cycle& tau, const Element& x) {
  if (tau.length() % 2 == 0) throw std::invalid_argument("F needs an odd-length cycle");
  if (tau.contains(x)) throw std::invalid_argument("outsider lies inside the cycle");
  const auto a = tau.elements();
  const std::size_t k = a.size();
  std::vector<MachineMove> out{{a[1], a[0], x}};
  // Written (a3 a2 x)(a5 a4 x)...(ak a_{k-1} x); the rightmost acts first.
  for (std::size_t l = k - 1; l >= 2; l -= 2) out.push_back({a[l], a[l - 1], x});
  return out;
}

std::vector<MachineMove> g_construction(const Cycle& tau_v, const Cycle& tau_w, const Element& x) {
  if (tau_v.length() % 2 == 1 || tau_w.length() % 2 == 1)
    throw std::invalid_argument("G needs two even-length cycles");
  for (const auto& e : tau_w.elements())
    if (tau_v.contains(e)) throw std::invalid_argument("cycles overlap");
  if (tau_v.contains(x) || tau_w.contains(x)) throw std::invalid_argument("outsider lies inside a cycle");

  const auto b = tau_v.elements();
  const auto c = tau_w.elements();
  const std::size_t k1 = b.size(), k2 = c.size();
  std::vector<MachineMove> out{{c[k2 - 1], b[k1 - 1], x}};
  for (std::size_t l = k1 - 2; l >= 2; l -= 2) out.push_back({b[l], b[l - 1], x});
  out.push_back({b[0], b[k1 - 1], x});
  for (std::size_t l = k2 - 2; l >= 2; l -= 2) out.push_back({c[l], c[l - 1], x});
  out.push_back({c[0], c[k2 - 1], x});
  return out;
}

ThreePlan solve_three_machine_optimal(const Permutation& sigma) {
  if (sigma.touches_outsiders()) throw std::invalid_argument("target must only move insiders");
  if (sigma.parity() == Parity::Odd)
    throw UnsolvableError("odd permutation cannot be inverted with 3-cycles");
  ThreePlan plan;
  plan.moved_insiders = sigma.support().size();
  plan.cycle_count = sigma.cycles().size();

  std::vector<const Cycle*> even;
  for (const auto& c : sigma.cycles()) {
    if (c.length() % 2 == 0) {
      even.push_back(&c);
      continue;
    }
    const auto part = f_construction(c, plan.x);
    plan.moves.insert(plan.moves.end(), part.begin(), part.end());
  }
  for (std::size_t i = 0; i + 1 < even.size(); i += 2) {
    const auto part = g_construction(*even[i], *even[i + 1], plan.x);
    plan.moves.insert(plan.moves.end(), part.begin(), part.end());
  }
  return plan;
}

std::size_t lower_bound(const Permutation& sigma) {
  if (sigma.parity() == Parity::Odd)
    throw UnsolvableError("odd permutation cannot be inverted with 3-cycles");
  return (sigma.support().size() + sigma.cycles().size()) / 2;
}

}  // namespace mindswap

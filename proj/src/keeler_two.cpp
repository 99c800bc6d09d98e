#include "mindswap/keeler_two.hpp"

namespace mindswap {

std::vector<MachineMove> taubar(const Cycle& tau, const Element& x) {
  if (tau.contains(x)) throw std::invalid_argument("outsider " + x.label() + " lies inside the cycle");
  std::vector<MachineMove> out;
  for (std::size_t l = 1; l < tau.length(); ++l) out.push_back({x, tau[l]});
  return out;
}

std::vector<MachineMove> taucar(const Cycle& tau, const Element& x, const Element& y) {
  if (x == y) throw std::invalid_argument("outsiders x and y must differ");
  if (tau.contains(y)) throw std::invalid_argument("outsider " + y.label() + " lies inside the cycle");
  auto out = taubar(tau, x);
  out.push_back({y, tau[0]});
  out.push_back({y, tau[1]});
  out.push_back({x, tau[0]});
  return out;
}

TwoMachinePlan solve_two_machine(const Permutation& sigma) {
  if (sigma.touches_outsiders())
    throw std::invalid_argument("target must only move insiders");
  TwoMachinePlan plan;
  const auto cycles = sigma.cycles();
  std::vector<MachineMove> written;
  if (cycles.size() % 2 == 1) written.push_back({plan.x, plan.y});
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    auto part = taucar(*it, plan.x, plan.y);
    written.insert(written.end(), part.begin(), part.end());
  }
  plan.moves = chronological(written);
  return plan;
}

std::size_t two_machine_move_count(const Permutation& sigma) {
  std::size_t total = sigma.cycles().size() % 2;
  for (const auto& c : sigma.cycles()) total += c.length() + 2;
  return total;
}

}  // namespace mindswap

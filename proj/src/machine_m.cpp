#include "mindswap/machine_m.hpp"

#include <algorithm>
#include <set>

namespace mindswap {
namespace {

void require_disjoint(std::span<const Element> pool, std::span<const Element> insiders) {
  std::set<Element> seen(insiders.begin(), insiders.end());
  for (const auto& e : pool)
    if (!seen.insert(e).second)
      throw std::invalid_argument("outsider pool overlaps the cycle or repeats " + e.label());
}

// (a1 a2 a3)^-1 = (a1 a3 x1 ... x_{m-2})(a3 a2 x_{m-2} ... x1), seats taken
// exactly as given so callers control which insider pairs appear.
std::vector<MachineMove> three_cycle_inverse(const Element& a1, const Element& a2, const Element& a3,
                                             std::span<const Element> pool) {
  std::vector<Element> first{a3, a2};
  first.insert(first.end(), pool.rbegin(), pool.rend());
  std::vector<Element> second{a1, a3};
  second.insert(second.end(), pool.begin(), pool.end());
  return {MachineMove(std::move(first)), MachineMove(std::move(second))};
}

std::vector<MachineMove> odd_chain_inverse(std::span<const Element> cyc, std::span<const Element> pool) {
  std::vector<MachineMove> out;
  for (std::size_t i = 0; i + 2 < cyc.size(); i += 2) {
    auto part = three_cycle_inverse(cyc[i], cyc[i + 1], cyc[i + 2], pool);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Moves whose product is (a1 a2).
std::vector<MachineMove> transposition_moves(const Element& a1, const Element& a2,
                                             std::span<const Element> w, std::span<const Element> y,
                                             std::span<const Element> z) {
  std::vector<Element> first(w.begin(), w.end());
  first.push_back(a1);
  first.insert(first.end(), y.begin(), y.end());
  first.push_back(a2);

  std::vector<Element> second{a1};
  second.insert(second.end(), w.rbegin(), w.rend());
  second.push_back(a2);
  second.insert(second.end(), z.begin(), z.end());

  std::vector<Element> third{a1};
  third.insert(third.end(), z.rbegin(), z.rend());
  third.insert(third.end(), y.rbegin(), y.rend());
  third.push_back(a2);

  return {MachineMove(std::move(first)), MachineMove(std::move(second)), MachineMove(std::move(third))};
}

void append(std::vector<MachineMove>& to, const std::vector<MachineMove>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

std::size_t outsider_pool_size(int m) {
  if (m < 3) throw std::invalid_argument("machine size must be at least 3");
  return m % 2 == 1 ? static_cast<std::size_t>(m - 2) : static_cast<std::size_t>(3 * (m / 2 - 1));
}

bool membership_check(const Permutation& sigma, int m) {
  if (m < 3) throw std::invalid_argument("machine size must be at least 3");
  return m % 2 == 0 || sigma.parity() == Parity::Even;
}

std::vector<MachineMove> invert_three_cycle(const Cycle& tau, std::span<const Element> pool, int m) {
  if (tau.length() != 3) throw std::invalid_argument("expected a 3-cycle");
  if (m < 3 || pool.size() != static_cast<std::size_t>(m - 2))
    throw std::invalid_argument("pool must hold exactly m - 2 outsiders");
  require_disjoint(pool, tau.elements());
  return three_cycle_inverse(tau[0], tau[1], tau[2], pool);
}

std::vector<MachineMove> invert_odd_cycle(const Cycle& tau, std::span<const Element> pool, int m) {
  if (tau.length() % 2 == 0) throw std::invalid_argument("expected an odd-length cycle");
  if (m < 3 || pool.size() != static_cast<std::size_t>(m - 2))
    throw std::invalid_argument("pool must hold exactly m - 2 outsiders");
  require_disjoint(pool, tau.elements());
  return odd_chain_inverse(tau.elements(), pool);
}

std::vector<MachineMove> invert_even_pair_odd_m(const Cycle& tau_i, const Cycle& tau_j,
                                                std::span<const Element> pool, int m) {
  if (tau_i.length() % 2 == 1 || tau_j.length() % 2 == 1)
    throw std::invalid_argument("expected two even-length cycles");
  if (m % 2 == 0) throw std::invalid_argument("even-cycle pairing is for odd machines");
  if (m < 3 || pool.size() != static_cast<std::size_t>(m - 2))
    throw std::invalid_argument("pool must hold exactly m - 2 outsiders");
  std::vector<Element> both(tau_i.elements().begin(), tau_i.elements().end());
  both.insert(both.end(), tau_j.elements().begin(), tau_j.elements().end());
  {
    std::set<Element> s(both.begin(), both.end());
    if (s.size() != both.size()) throw std::invalid_argument("cycles overlap");
  }
  require_disjoint(pool, both);

  const auto a = tau_i.elements();
  const auto b = tau_j.elements();
  const std::size_t ki = a.size(), kj = b.size();
  std::vector<MachineMove> out;
  // (a1 ... ak) = (a1 ... a_{k-1})(a_{k-1} a_k); prefixes first.
  append(out, odd_chain_inverse(a.first(ki - 1), pool));
  append(out, odd_chain_inverse(b.first(kj - 1), pool));

  const Element& a_last = a[ki - 1];
  const Element& a_prev = a[ki - 2];
  const Element& b_last = b[kj - 1];
  const Element& b_prev = b[kj - 2];
  // ((a' a)(b' b))^-1 = (a b b')(a' b' a); each 3-cycle (p q r) is the
  // inverse of (p r q).
  append(out, three_cycle_inverse(a_prev, a_last, b_prev, pool));
  append(out, three_cycle_inverse(a_last, b_prev, b_last, pool));
  return out;
}

std::vector<MachineMove> invert_transposition_even_m(const Cycle& tau, std::span<const Element> w,
                                                     std::span<const Element> y,
                                                     std::span<const Element> z, int m) {
  if (tau.length() != 2) throw std::invalid_argument("expected a transposition");
  if (m < 4 || m % 2 == 1) throw std::invalid_argument("machine size must be even and at least 4");
  const auto h = static_cast<std::size_t>(m / 2 - 1);
  if (w.size() != h || y.size() != h || z.size() != h)
    throw std::invalid_argument("each pool must hold m/2 - 1 outsiders");
  std::vector<Element> pools(w.begin(), w.end());
  pools.insert(pools.end(), y.begin(), y.end());
  pools.insert(pools.end(), z.begin(), z.end());
  require_disjoint(pools, tau.elements());
  return transposition_moves(tau[0], tau[1], w, y, z);
}

bool generator_identity_check(int m, std::span<const Element> elements) {
  if (m < 4 || m % 2 == 1) throw std::invalid_argument("machine size must be even and at least 4");
  if (elements.size() < static_cast<std::size_t>(m))
    throw std::invalid_argument("need y, x and m - 2 further elements");
  {
    std::set<Element> s(elements.begin(), elements.begin() + m);
    if (s.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("elements must be distinct");
  }
  const Element& y = elements[0];
  const Element& x = elements[1];
  // a[i] is a_{i+1}.
  const auto a = elements.subspan(2, static_cast<std::size_t>(m - 2));

  std::vector<Element> left{y, a[0], x};
  left.insert(left.end(), a.begin() + 1, a.end());
  std::vector<Element> right{y, x};
  right.insert(right.end(), a.begin(), a.end());

  std::vector<Element> shorter{y};
  for (std::size_t i = 1; i < a.size(); i += 2) shorter.push_back(a[i]);  // a2 a4 ... a_{m-2}
  for (std::size_t i = 0; i < a.size(); i += 2) shorter.push_back(a[i]);  // a1 a3 ... a_{m-3}

  std::vector<Element> closer{x, y};
  for (std::size_t i = a.size(); i-- > 0;)  // a_{m-3} ... a3 a1
    if (i % 2 == 0) closer.push_back(a[i]);
  for (std::size_t i = a.size(); i-- > 0;)  // a_{m-2} ... a4 a2
    if (i % 2 == 1) closer.push_back(a[i]);

  const Permutation two_cycles = Permutation::from_cycle(Cycle(left)) * Permutation::from_cycle(Cycle(right));
  const Permutation m_minus_one = Permutation::from_cycle(Cycle(shorter));
  if (two_cycles != m_minus_one) return false;
  const Permutation swap = Permutation::from_cycle(Cycle({x, y}));
  return Permutation::from_cycle(Cycle(closer)) * m_minus_one == swap;
}

MPlan solve_m_machine(const Permutation& sigma, int m) {
  if (sigma.touches_outsiders()) throw std::invalid_argument("target must only move insiders");
  if (!membership_check(sigma, m))
    throw UnsolvableError("odd permutation is not generated by " + std::to_string(m) + "-cycles");

  MPlan plan;
  plan.m = m;
  const std::size_t d = outsider_pool_size(m);
  for (std::size_t i = 1; i <= d; ++i) plan.outsider_pool.push_back(Element::outsider(i));
  const std::span<const Element> pool(plan.outsider_pool);
  const auto three_pool = pool.first(static_cast<std::size_t>(m - 2));

  if (m % 2 == 1) {
    std::vector<const Cycle*> even;
    for (const auto& c : sigma.cycles()) {
      if (c.length() % 2 == 1)
        append(plan.moves, odd_chain_inverse(c.elements(), three_pool));
      else
        even.push_back(&c);
    }
    for (std::size_t i = 0; i + 1 < even.size(); i += 2)
      append(plan.moves, invert_even_pair_odd_m(*even[i], *even[i + 1], three_pool, m));
    return plan;
  }

  const auto h = static_cast<std::size_t>(m / 2 - 1);
  const auto w = pool.subspan(0, h), y = pool.subspan(h, h), z = pool.subspan(2 * h, h);
  for (const auto& c : sigma.cycles()) {
    const auto els = c.elements();
    if (c.length() % 2 == 1) {
      append(plan.moves, odd_chain_inverse(els, three_pool));
      continue;
    }
    const std::size_t k = els.size();
    append(plan.moves, odd_chain_inverse(els.first(k - 1), three_pool));
    append(plan.moves, transposition_moves(els[k - 2], els[k - 1], w, y, z));
  }
  return plan;
}

}  // namespace mindswap

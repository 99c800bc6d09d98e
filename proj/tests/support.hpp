// Random generators and brute-force reference computations shared by the
// test binaries. The references work on plain index maps and never call the
// library's own compose/inverse.
#ifndef MINDSWAP_TESTS_SUPPORT_HPP
#define MINDSWAP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mindswap/plan.hpp"

namespace testing_support {

using mindswap::Cycle;
using mindswap::Element;
using mindswap::MachineMove;
using mindswap::Permutation;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'cafe'f00dULL);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

/// Image table over a1..an: img[i] is where a_{i+1} goes, 0-based.
using Table = std::vector<std::size_t>;

inline Table random_table(std::size_t n) {
  Table t(n);
  std::iota(t.begin(), t.end(), 0);
  std::shuffle(t.begin(), t.end(), rng());
  return t;
}

inline Permutation from_table(const Table& t) {
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < t.size(); ++i) pairs.emplace_back(Element::insider(i + 1), Element::insider(t[i] + 1));
  return Permutation::from_pairs(pairs);
}

inline Permutation random_permutation(std::size_t n) { return from_table(random_table(n)); }

inline bool table_even(const Table& t) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) inversions += t[i] > t[j];
  return inversions % 2 == 0;
}

inline Permutation random_even_permutation(std::size_t n) {
  auto t = random_table(n);
  if (!table_even(t) && n >= 2) std::swap(t[0], t[1]);
  return from_table(t);
}

inline Cycle random_cycle(std::size_t k, std::size_t universe) {
  std::vector<std::size_t> pool(universe);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng());
  std::vector<Element> els;
  for (std::size_t i = 0; i < k; ++i) els.push_back(Element::insider(pool[i]));
  return Cycle(els);
}

/// Reference evaluation of e under a chronological list of seat lists.
inline Element trace(const std::vector<MachineMove>& plan, Element e) {
  for (const auto& mv : plan) {
    const auto s = mv.seats();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == e) {
        e = s[(i + 1) % s.size()];
        break;
      }
  }
  return e;
}

/// True if the plan sends sigma(e) back to e for every e it or sigma touches.
inline bool undoes(const std::vector<MachineMove>& plan, const Permutation& sigma) {
  std::set<Element> pts;
  for (const auto& c : sigma.cycles())
    for (const auto& e : c.elements()) pts.insert(e);
  for (const auto& mv : plan)
    for (const auto& e : mv.seats()) pts.insert(e);
  for (const auto& e : pts)
    if (trace(plan, sigma.apply(e)) != e) return false;
  return true;
}

inline bool supports_distinct(const std::vector<MachineMove>& plan) {
  std::set<std::set<Element>> seen;
  for (const auto& mv : plan)
    if (!seen.insert(std::set<Element>(mv.seats().begin(), mv.seats().end())).second) return false;
  return true;
}

/// Every cycle type of n: partitions of n into parts >= 2.
inline void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 2; --p) {
    if (n - p == 1) continue;
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> cycle_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions(n, n, cur, out);
  return out;
}

/// Consecutive cycles a1..a_{k1}, a_{k1+1}.. for a given cycle type.
inline Permutation permutation_of_type(const std::vector<std::size_t>& type) {
  std::vector<Cycle> cycles;
  std::size_t next = 1;
  for (auto k : type) {
    std::vector<Element> els;
    for (std::size_t i = 0; i < k; ++i) els.push_back(Element::insider(next++));
    cycles.emplace_back(els);
  }
  return Permutation::product_of(cycles);
}

}  // namespace testing_support

#endif  // MINDSWAP_TESTS_SUPPORT_HPP

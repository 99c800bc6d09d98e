#ifndef MINDSWAP_PLAN_ORACLE_HPP
#define MINDSWAP_PLAN_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindswap/plan.hpp"

namespace mindswap {

struct RuleSet {
  int machine_size = 2;
  std::vector<Element> outsiders;
  bool require_outsider_per_move = true;
  bool require_distinct_supports = true;

  /// Machine of size m with outsiders x1 .. xd.
  static RuleSet with_outsiders(int m, std::size_t d);
};

enum class ViolationKind {
  WrongSeatCount,
  RepeatedSeat,
  NoOutsider,
  DuplicateSupport,
  OutsiderNotInPool,
};

const char* to_string(ViolationKind kind);

struct Violation {
  std::size_t move_index = 0;
  ViolationKind kind = ViolationKind::WrongSeatCount;
  std::string detail;
};

struct VerificationReport {
  bool product_ok = false;
  std::vector<Violation> violations;
  std::size_t step_count = 0;
  Permutation product;

  bool clean() const { return product_ok && violations.empty(); }
};

/// Checks every machine rule and that the plan's product inverts the target.
/// Problems are collected, never thrown.
VerificationReport verify_plan(const Permutation& target, std::span<const MachineMove> plan,
                               const RuleSet& rules);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t ground_size = 0;
  std::size_t legal_moves = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Shortest legal plan inverting the target over the ground set
/// support(target) ∪ rules.outsiders, by iterative deepening. Returns nullopt
/// if nothing exists within max_steps. Throws BudgetExceeded once more than
/// node_budget nodes have been expanded. Deterministic: candidate moves are
/// tried in lexicographic order of (seat set, seat order).
std::optional<Plan> search_min_plan(const Permutation& target, const RuleSet& rules,
                                    std::size_t max_steps,
                                    std::uint64_t node_budget = kDefaultNodeBudget,
                                    SearchStats* stats = nullptr);

}  // namespace mindswap

#endif  // MINDSWAP_PLAN_ORACLE_HPP

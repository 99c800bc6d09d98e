#ifndef MINDSWAP_PLAN_DOCUMENT_HPP
#define MINDSWAP_PLAN_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindswap/plan.hpp"
#include "mindswap/plan_oracle.hpp"

namespace mindswap {

inline constexpr int kSchemaVersion = 1;

struct VerificationSummary {
  bool product_ok = false;
  bool supports_distinct = false;
  bool outsider_in_every_move = false;
  std::vector<Violation> violations;

  bool clean() const { return product_ok && violations.empty(); }
};

VerificationSummary summarize(const VerificationReport& report);

/// A plan on disk. JSON with a fixed key order:
///
///   schema_version, machine_size, target, outsiders, moves,
///   metadata {solver, step_count, lower_bound}, verification (optional)
///
/// moves are seat-ordered cycles in chronological order.
struct PlanDocument {
  int schema_version = kSchemaVersion;
  int machine_size = 2;
  Permutation target;
  std::vector<Element> outsiders;
  Plan moves;
  std::string solver;
  std::optional<std::size_t> lower_bound;
  std::optional<VerificationSummary> verification;

  RuleSet rules() const;
};

/// Serialized form, two-space indented, newline terminated.
std::string to_json(const PlanDocument& doc);
/// Throws ParseError on malformed JSON, unknown schema, bad labels or an
/// inconsistent step_count. Seat counts are not checked here; verification
/// reports them.
PlanDocument parse_document(std::string_view text);

/// Fills doc.verification from verify_plan under doc.rules().
void attach_verification(PlanDocument& doc);

/// Solver names accepted by solve_document. "auto" picks keeler2 for m = 2,
/// optimal3 for m = 3 and general_m otherwise.
inline constexpr std::string_view kSolverNames[] = {"auto", "keeler2", "general_m", "optimal3"};

/// Runs a solver and returns a verified document. Throws
/// std::invalid_argument for an unknown solver or one that does not fit m,
/// UnsolvableError when the target is outside the reachable group.
PlanDocument solve_document(const Permutation& target, int m, std::string_view solver = "auto");

}  // namespace mindswap

#endif  // MINDSWAP_PLAN_DOCUMENT_HPP

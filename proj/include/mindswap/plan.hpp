#ifndef MINDSWAP_PLAN_HPP
#define MINDSWAP_PLAN_HPP

#include <span>
#include <string>
#include <vector>

#include "mindswap/permutation.hpp"

namespace mindswap {

/// One use of the machine. Seat i's mind moves to seat i+1, the last seat's
/// mind moves to seat 0, i.e. the cycle (seats[0] seats[1] ... seats[m-1]).
class MachineMove {
 public:
  explicit MachineMove(std::vector<Element> seats);
  MachineMove(std::initializer_list<Element> seats)
      : MachineMove(std::vector<Element>(seats)) {}

  std::span<const Element> seats() const { return seats_; }
  std::size_t size() const { return seats_.size(); }

  /// Sorted seat set.
  std::vector<Element> support() const;
  Permutation permutation() const;
  std::size_t outsider_count() const;
  std::size_t insider_count() const { return size() - outsider_count(); }
  bool has_outsider() const { return outsider_count() > 0; }

  /// Seat-ordered cycle notation, e.g. "(a3 a2 x1)".
  std::string format() const;

  bool operator==(const MachineMove&) const = default;

 private:
  std::vector<Element> seats_;
};

/// Chronological list of machine uses: moves[0] happens first.
using Plan = std::vector<MachineMove>;

/// moves[last] ∘ ... ∘ moves[0].
Permutation plan_product(std::span<const MachineMove> moves);

/// Converts a product written left-to-right (rightmost acts first) into
/// chronological order.
Plan chronological(std::span<const MachineMove> written_left_to_right);

/// "(a1 x1) (a2 x2) ..." in chronological order.
std::string format_plan(std::span<const MachineMove> moves);

/// Reads a seat-ordered plan, one parenthesized move per use, in
/// chronological order.
Plan parse_plan(std::string_view text);

/// True if no two moves share the same seat set.
bool supports_pairwise_distinct(std::span<const MachineMove> moves);

class UnsolvableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mindswap

#endif  // MINDSWAP_PLAN_HPP

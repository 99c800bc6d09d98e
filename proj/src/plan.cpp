#include "mindswap/plan.hpp"

#include <algorithm>
#include <set>

namespace mindswap {

MachineMove::MachineMove(std::vector<Element> seats) : seats_(std::move(seats)) {
  if (seats_.size() < 2) throw std::invalid_argument("a machine move needs at least two seats");
}

std::vector<Element> MachineMove::support() const {
  std::vector<Element> s = seats_;
  std::sort(s.begin(), s.end());
  return s;
}

Permutation MachineMove::permutation() const {
  const Cycle c(seats_);
  return Permutation::from_cycle(c);
}

std::size_t MachineMove::outsider_count() const {
  return static_cast<std::size_t>(
      std::count_if(seats_.begin(), seats_.end(), [](const Element& e) { return e.is_outsider(); }));
}

std::string MachineMove::format() const {
  std::string out = "(";
  for (std::size_t i = 0; i < seats_.size(); ++i) {
    if (i) out += ' ';
    out += seats_[i].label();
  }
  return out + ")";
}

Permutation plan_product(std::span<const MachineMove> moves) {
  std::vector<std::pair<Element, Element>> pairs;
  std::set<Element> points;
  for (const auto& m : moves) points.insert(m.seats().begin(), m.seats().end());
  // Track where each point's mind ends up by walking the uses in order.
  for (const auto& start : points) {
    Element at = start;
    for (const auto& m : moves) {
      const auto seats = m.seats();
      auto it = std::find(seats.begin(), seats.end(), at);
      if (it != seats.end()) {
        ++it;
        at = it == seats.end() ? seats.front() : *it;
      }
    }
    pairs.emplace_back(start, at);
  }
  return Permutation::from_pairs(std::move(pairs));
}

Plan chronological(std::span<const MachineMove> written_left_to_right) {
  return Plan(written_left_to_right.rbegin(), written_left_to_right.rend());
}

std::string format_plan(std::span<const MachineMove> moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ' ';
    out += moves[i].format();
  }
  return out;
}

Plan parse_plan(std::string_view text) {
  Plan plan;
  for (auto& g : parse_cycle_groups(text)) {
    if (g.size() < 2) throw ParseError("a machine move needs at least two seats");
    plan.emplace_back(std::move(g));
  }
  return plan;
}

bool supports_pairwise_distinct(std::span<const MachineMove> moves) {
  std::set<std::vector<Element>> seen;
  for (const auto& m : moves)
    if (!seen.insert(m.support()).second) return false;
  return true;
}

}  // namespace mindswap

#include "mindswap/plan_oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

namespace mindswap {

RuleSet RuleSet::with_outsiders(int m, std::size_t d) {
  RuleSet r;
  r.machine_size = m;
  for (std::size_t i = 1; i <= d; ++i) r.outsiders.push_back(Element::outsider(i));
  return r;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::WrongSeatCount: return "wrong_seat_count";
    case ViolationKind::RepeatedSeat: return "repeated_seat";
    case ViolationKind::NoOutsider: return "no_outsider";
    case ViolationKind::DuplicateSupport: return "duplicate_support";
    case ViolationKind::OutsiderNotInPool: return "outsider_not_in_pool";
  }
  return "unknown";
}

VerificationReport verify_plan(const Permutation& target, std::span<const MachineMove> plan,
                               const RuleSet& rules) {
  VerificationReport report;
  report.step_count = plan.size();
  const std::set<Element> pool(rules.outsiders.begin(), rules.outsiders.end());
  std::map<std::vector<Element>, std::size_t> first_use;

  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto& mv = plan[i];
    const auto seats = mv.support();
    if (seats.size() != static_cast<std::size_t>(rules.machine_size))
      report.violations.push_back({i, ViolationKind::WrongSeatCount,
                                   std::to_string(seats.size()) + " seats on a machine of size " +
                                       std::to_string(rules.machine_size)});
    if (std::adjacent_find(seats.begin(), seats.end()) != seats.end())
      report.violations.push_back({i, ViolationKind::RepeatedSeat, mv.format()});
    if (rules.require_outsider_per_move && !mv.has_outsider())
      report.violations.push_back({i, ViolationKind::NoOutsider, mv.format()});
    if (!pool.empty())
      for (const auto& e : seats)
        if (e.is_outsider() && !pool.contains(e))
          report.violations.push_back({i, ViolationKind::OutsiderNotInPool, e.label()});
    if (rules.require_distinct_supports) {
      auto [it, inserted] = first_use.emplace(seats, i);
      if (!inserted)
        report.violations.push_back({i, ViolationKind::DuplicateSupport,
                                     "same seat set as move " + std::to_string(it->second)});
    }
  }

  // A move with repeated seats has no well-defined cycle; skip the product.
  const bool well_formed = std::none_of(report.violations.begin(), report.violations.end(),
                                        [](const Violation& v) { return v.kind == ViolationKind::RepeatedSeat; });
  if (well_formed) {
    report.product = plan_product(plan);
    report.product_ok = report.product == target.inverse();
  }
  return report;
}

namespace {

constexpr std::size_t kMaxGround = 16;
using State = std::array<std::uint8_t, kMaxGround>;

struct CandidateMove {
  std::uint32_t support_id;
  std::vector<std::uint8_t> seats;
  State map;
};

class Searcher {
 public:
  Searcher(std::size_t ground, std::vector<CandidateMove> moves, int m, bool distinct,
           std::uint64_t budget)
      : ground_(ground), moves_(std::move(moves)), m_(m), distinct_(distinct), budget_(budget) {}

  std::optional<std::vector<std::size_t>> run(const State& start, std::size_t max_steps) {
    for (std::size_t limit = 0; limit <= max_steps; ++limit) {
      seen_.clear();
      path_.clear();
      used_.assign(support_count(), false);
      State s = start;
      if (dfs(s, limit)) return path_;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t support_count() const {
    std::uint32_t n = 0;
    for (const auto& mv : moves_) n = std::max(n, mv.support_id + 1);
    return n;
  }

  std::size_t moved(const State& s) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < ground_; ++i) c += s[i] != i;
    return c;
  }

  std::string key(const State& s) const {
    std::string k(reinterpret_cast<const char*>(s.data()), ground_);
    k.push_back(static_cast<char>(path_.size()));
    if (distinct_) {
      std::vector<std::uint32_t> ids;
      ids.reserve(path_.size());
      for (auto idx : path_) ids.push_back(moves_[idx].support_id);
      std::sort(ids.begin(), ids.end());
      k.append(reinterpret_cast<const char*>(ids.data()), ids.size() * sizeof(std::uint32_t));
    }
    return k;
  }

  bool dfs(const State& s, std::size_t limit) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("search exceeded the node budget of " + std::to_string(budget_));
    const std::size_t mv = moved(s);
    if (mv == 0) return true;
    const std::size_t remaining = limit - path_.size();
    if ((mv + m_ - 1) / m_ > remaining) return false;
    if (!seen_.insert(key(s)).second) return false;

    for (std::size_t i = 0; i < moves_.size(); ++i) {
      const auto& cand = moves_[i];
      if (distinct_ && used_[cand.support_id]) continue;
      State next{};
      for (std::size_t p = 0; p < ground_; ++p) next[p] = cand.map[s[p]];
      if (distinct_) used_[cand.support_id] = true;
      path_.push_back(i);
      if (dfs(next, limit)) return true;
      path_.pop_back();
      if (distinct_) used_[cand.support_id] = false;
    }
    return false;
  }

  std::size_t ground_;
  std::vector<CandidateMove> moves_;
  std::size_t m_;
  bool distinct_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> path_;
  std::vector<bool> used_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

std::optional<Plan> search_min_plan(const Permutation& target, const RuleSet& rules,
                                    std::size_t max_steps, std::uint64_t node_budget,
                                    SearchStats* stats) {
  const int m = rules.machine_size;
  if (m < 2) throw std::invalid_argument("machine size must be at least 2");

  std::vector<Element> ground = target.support();
  ground.insert(ground.end(), rules.outsiders.begin(), rules.outsiders.end());
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  if (ground.size() > kMaxGround)
    throw std::invalid_argument("ground set of " + std::to_string(ground.size()) +
                                " points exceeds the search limit of " + std::to_string(kMaxGround));
  const std::size_t g = ground.size();
  auto index_of = [&](const Element& e) {
    return static_cast<std::uint8_t>(std::lower_bound(ground.begin(), ground.end(), e) - ground.begin());
  };

  // Seat sets in lexicographic order, each with its (m-1)! seatings that put
  // the smallest point first.
  std::vector<CandidateMove> moves;
  if (static_cast<std::size_t>(m) <= g) {
    std::vector<bool> pick(g, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    std::uint32_t support_id = 0;
    do {
      std::vector<std::uint8_t> combo;
      bool has_outsider = false;
      for (std::size_t i = 0; i < g; ++i)
        if (pick[i]) {
          combo.push_back(static_cast<std::uint8_t>(i));
          has_outsider |= ground[i].is_outsider();
        }
      if (rules.require_outsider_per_move && !has_outsider) continue;
      std::vector<std::uint8_t> rest(combo.begin() + 1, combo.end());
      do {
        CandidateMove cand;
        cand.support_id = support_id;
        cand.seats = {combo.front()};
        cand.seats.insert(cand.seats.end(), rest.begin(), rest.end());
        for (std::size_t i = 0; i < kMaxGround; ++i) cand.map[i] = static_cast<std::uint8_t>(i);
        for (std::size_t i = 0; i < cand.seats.size(); ++i)
          cand.map[cand.seats[i]] = cand.seats[(i + 1) % cand.seats.size()];
        moves.push_back(std::move(cand));
      } while (std::next_permutation(rest.begin(), rest.end()));
      ++support_id;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  State start{};
  for (std::size_t i = 0; i < g; ++i) start[i] = index_of(target.apply(ground[i]));

  Searcher searcher(g, moves, m, rules.require_distinct_supports, node_budget);
  std::optional<std::vector<std::size_t>> found;
  try {
    found = searcher.run(start, max_steps);
  } catch (...) {
    if (stats) *stats = {searcher.nodes(), g, moves.size()};
    throw;
  }
  if (stats) *stats = {searcher.nodes(), g, moves.size()};
  if (!found) return std::nullopt;

  Plan plan;
  for (auto idx : *found) {
    std::vector<Element> seats;
    for (auto s : moves[idx].seats) seats.push_back(ground[s]);
    plan.emplace_back(std::move(seats));
  }
  return plan;
}

}  // namespace mindswap

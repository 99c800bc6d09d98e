#include "mindswap/infinite_machine.hpp"

#include <algorithm>

namespace mindswap {

std::string stream_name(std::uint32_t stream) {
  static constexpr char kLetters[] = "abcdefghijklmnopqrstuvwy";
  constexpr std::uint32_t count = sizeof(kLetters) - 1;
  if (stream < count) return std::string(1, kLetters[stream]);
  return "s" + std::to_string(stream) + "_";
}

std::string CarrierPoint::render() const {
  if (is_named()) return label;
  return stream_name(stream) + std::to_string(index);
}

// ---------------------------------------------------------------- PointSet

void PointSet::add(const CarrierPoint& p) {
  if (p.is_named()) {
    named_.insert(p.label);
    return;
  }
  streams_[p.stream].finite.insert(p.index);
  normalize(p.stream);
}

void PointSet::add_from(std::uint32_t stream, std::uint64_t from) {
  auto& part = streams_[stream];
  part.from = part.from ? std::min(*part.from, from) : from;
  normalize(stream);
}

void PointSet::normalize(std::uint32_t stream) {
  auto& part = streams_[stream];
  if (part.from) {
    part.finite.erase(part.finite.lower_bound(*part.from), part.finite.end());
    while (*part.from > 1 && part.finite.contains(*part.from - 1)) {
      part.finite.erase(*part.from - 1);
      --*part.from;
    }
  }
  if (part.finite.empty() && !part.from) streams_.erase(stream);
}

bool PointSet::contains(const CarrierPoint& p) const {
  if (p.is_named()) return named_.contains(p.label);
  auto it = streams_.find(p.stream);
  if (it == streams_.end()) return false;
  return (it->second.from && p.index >= *it->second.from) || it->second.finite.contains(p.index);
}

PointSet PointSet::unite(const PointSet& other) const {
  PointSet out = *this;
  out.named_.insert(other.named_.begin(), other.named_.end());
  for (const auto& [s, part] : other.streams_) {
    auto& mine = out.streams_[s];
    mine.finite.insert(part.finite.begin(), part.finite.end());
    if (part.from) mine.from = mine.from ? std::min(*mine.from, *part.from) : *part.from;
    out.normalize(s);
  }
  return out;
}

bool PointSet::subset_of(const PointSet& other) const {
  for (const auto& n : named_)
    if (!other.named_.contains(n)) return false;
  for (const auto& [s, part] : streams_) {
    for (auto i : part.finite)
      if (!other.contains(CarrierPoint::at(s, i))) return false;
    if (part.from) {
      auto it = other.streams_.find(s);
      if (it == other.streams_.end() || !it->second.from) return false;
      for (auto i = *part.from; i < *it->second.from; ++i)
        if (!it->second.finite.contains(i)) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::uint64_t>> PointSet::excluded(std::uint32_t stream) const {
  auto it = streams_.find(stream);
  if (it == streams_.end() || !it->second.from) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i < *it->second.from; ++i)
    if (!it->second.finite.contains(i)) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> PointSet::streams() const {
  std::vector<std::uint32_t> out;
  for (const auto& kv : streams_) out.push_back(kv.first);
  return out;
}

std::string PointSet::render() const {
  std::vector<std::string> parts;
  for (const auto& [s, part] : streams_) {
    const std::string name = stream_name(s);
    if (part.from) {
      std::string piece = name + "[*]";
      const auto ex = *excluded(s);
      if (!ex.empty()) {
        piece += " \\ {";
        for (std::size_t i = 0; i < ex.size(); ++i) piece += (i ? ", " : "") + name + std::to_string(ex[i]);
        piece += "}";
      }
      parts.push_back(piece);
    } else {
      std::string piece = "{";
      bool first = true;
      for (auto i : part.finite) {
        piece += (first ? "" : ", ") + name + std::to_string(i);
        first = false;
      }
      parts.push_back(piece + "}");
    }
  }
  if (!named_.empty()) {
    std::string piece = "{";
    bool first = true;
    for (const auto& n : named_) {
      piece += (first ? "" : ", ") + n;
      first = false;
    }
    parts.push_back(piece + "}");
  }
  if (parts.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ∪ " : "") + parts[i];
  return out;
}

// ----------------------------------------------------------------- TailMap

TailMap::TailMap(std::map<CarrierPoint, CarrierPoint> exceptions, std::map<std::uint32_t, TailRule> tails)
    : exceptions_(std::move(exceptions)), tails_(std::move(tails)) {
  for (const auto& [s, rule] : tails_) {
    if (rule.delta < -1 || rule.delta > 1) throw std::invalid_argument("tail delta must be -1, 0 or +1");
    if (rule.threshold < 1) throw std::invalid_argument("tail threshold must be positive");
    if (rule.delta == -1 && rule.threshold < 2)
      throw std::invalid_argument("a downward tail needs threshold >= 2");
  }
  for (const auto& [from, to] : exceptions_) {
    for (const auto* p : {&from, &to})
      if (!p->is_named() && p->index < 1) throw std::invalid_argument("stream indices start at 1");
    if (in_tail_region(from))
      throw std::invalid_argument("exception at " + from.render() + " overlaps a tail rule");
    if (!reverse_.emplace(to, from).second)
      throw std::invalid_argument("two points map to " + to.render());
    if (!to.is_named()) {
      auto it = tails_.find(to.stream);
      if (it != tails_.end() &&
          static_cast<std::int64_t>(to.index) >=
              static_cast<std::int64_t>(it->second.threshold) + it->second.delta)
        throw std::invalid_argument("exception image " + to.render() + " collides with a tail image");
    }
  }
  // Absorb exceptions that agree with their stream's tail.
  for (auto& [s, rule] : tails_) {
    while (rule.threshold > 1 && static_cast<std::int64_t>(rule.threshold) - 1 + rule.delta >= 1) {
      const auto below = CarrierPoint::at(s, rule.threshold - 1);
      auto it = exceptions_.find(below);
      if (it == exceptions_.end() ||
          it->second != CarrierPoint::at(s, static_cast<std::uint64_t>(
                                                static_cast<std::int64_t>(below.index) + rule.delta)))
        break;
      reverse_.erase(it->second);
      exceptions_.erase(it);
      --rule.threshold;
    }
  }
}

bool TailMap::in_tail_region(const CarrierPoint& p) const {
  if (p.is_named()) return false;
  auto it = tails_.find(p.stream);
  return it != tails_.end() && p.index >= it->second.threshold;
}

TailMap TailMap::shift(std::uint32_t stream) { return TailMap({}, {{stream, {1, +1}}}); }

TailMap TailMap::forgetful_chain(const std::vector<CarrierPoint>& prefix, std::uint32_t stream,
                                 std::uint64_t start) {
  std::map<CarrierPoint, CarrierPoint> ex;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const auto next = i + 1 < prefix.size() ? prefix[i + 1] : CarrierPoint::at(stream, start);
    if (!ex.emplace(prefix[i], next).second) throw std::invalid_argument("chain repeats a point");
  }
  return TailMap(std::move(ex), {{stream, {start, +1}}});
}

TailMap TailMap::retentive_chain(std::uint32_t stream, std::uint64_t start,
                                 const std::vector<CarrierPoint>& suffix) {
  if (suffix.empty()) throw std::invalid_argument("retentive chain needs a final seat");
  std::map<CarrierPoint, CarrierPoint> ex;
  ex.emplace(CarrierPoint::at(stream, start), suffix.front());
  for (std::size_t i = 0; i + 1 < suffix.size(); ++i)
    if (!ex.emplace(suffix[i], suffix[i + 1]).second) throw std::invalid_argument("chain repeats a point");
  return TailMap(std::move(ex), {{stream, {start + 1, -1}}});
}

TailMap TailMap::stream_extension(const Permutation& sigma, std::uint32_t stream) {
  if (sigma.touches_outsiders()) throw std::invalid_argument("permutation must act on stream points only");
  std::uint64_t top = 0;
  for (const auto& e : sigma.support()) top = std::max(top, e.index);
  std::map<CarrierPoint, CarrierPoint> ex;
  for (std::uint64_t i = 1; i <= top; ++i)
    ex.emplace(CarrierPoint::at(stream, i), CarrierPoint::at(stream, sigma.apply(Element::insider(i)).index));
  return TailMap(std::move(ex), {{stream, {top + 1, 0}}});
}

std::optional<CarrierPoint> TailMap::apply(const CarrierPoint& p) const {
  if (auto it = exceptions_.find(p); it != exceptions_.end()) return it->second;
  if (in_tail_region(p)) {
    const int d = tails_.at(p.stream).delta;
    return CarrierPoint::at(p.stream, static_cast<std::uint64_t>(static_cast<std::int64_t>(p.index) + d));
  }
  return std::nullopt;
}

std::optional<CarrierPoint> TailMap::preimage(const CarrierPoint& p) const {
  if (auto it = reverse_.find(p); it != reverse_.end()) return it->second;
  if (p.is_named()) return std::nullopt;
  auto it = tails_.find(p.stream);
  if (it == tails_.end()) return std::nullopt;
  const auto source = static_cast<std::int64_t>(p.index) - it->second.delta;
  if (source < static_cast<std::int64_t>(it->second.threshold)) return std::nullopt;
  return CarrierPoint::at(p.stream, static_cast<std::uint64_t>(source));
}

std::optional<CarrierPoint> TailMap::apply_extended(const CarrierPoint& p) const {
  if (!participates(p)) return p;
  return apply(p);
}

PointSet TailMap::domain() const {
  PointSet s;
  for (const auto& kv : exceptions_) s.add(kv.first);
  for (const auto& [st, rule] : tails_) s.add_from(st, rule.threshold);
  return s;
}

PointSet TailMap::image() const {
  PointSet s;
  for (const auto& kv : exceptions_) s.add(kv.second);
  for (const auto& [st, rule] : tails_)
    s.add_from(st, static_cast<std::uint64_t>(static_cast<std::int64_t>(rule.threshold) + rule.delta));
  return s;
}

PointSet TailMap::participants() const { return domain().unite(image()); }

TailMap TailMap::inverse() const {
  std::map<std::uint32_t, TailRule> tails;
  for (const auto& [s, rule] : tails_)
    tails[s] = {static_cast<std::uint64_t>(static_cast<std::int64_t>(rule.threshold) + rule.delta), -rule.delta};
  return TailMap(reverse_, std::move(tails));
}

TailMap TailMap::with_fixed(const CarrierPoint& p) const {
  if (participates(p)) throw std::invalid_argument(p.render() + " already takes part in this map");
  auto ex = exceptions_;
  ex.emplace(p, p);
  return TailMap(std::move(ex), tails_);
}

std::vector<TailMap::Chain> TailMap::chains(std::uint64_t horizon) const {
  std::vector<Chain> out;
  std::set<CarrierPoint> visited;

  auto upward_tail = [&](const CarrierPoint& p) {
    return in_tail_region(p) && tails_.at(p.stream).delta == +1;
  };
  auto downward_source = [&](const CarrierPoint& p) {
    // p is reached from the tail of a downward-shifting stream.
    if (reverse_.contains(p) || p.is_named()) return false;
    auto it = tails_.find(p.stream);
    return it != tails_.end() && it->second.delta == -1 && p.index + 1 >= it->second.threshold;
  };
  auto extend_up = [&](std::vector<CarrierPoint>& pts, CarrierPoint cur) {
    // cur already in pts; append a few more tail points.
    do {
      cur = CarrierPoint::at(cur.stream, cur.index + 1);
      pts.push_back(cur);
    } while (cur.index < horizon);
  };

  // Walk forward from p; stops on closure, loss, or an upward tail.
  auto walk_forward = [&](const CarrierPoint& p0, Chain& ch) {
    ch.points.push_back(p0);
    visited.insert(p0);
    CarrierPoint cur = p0;
    while (true) {
      if (upward_tail(cur)) {
        ch.infinite_right = true;
        extend_up(ch.points, cur);
        return;
      }
      auto nxt = apply(cur);
      if (!nxt) return;
      if (*nxt == p0) {
        ch.closed = true;
        return;
      }
      ch.points.push_back(*nxt);
      visited.insert(*nxt);
      cur = *nxt;
    }
  };
  // Walk backward from p; returns points in reading order ending at p0.
  auto walk_backward = [&](const CarrierPoint& p0, Chain& ch) {
    std::vector<CarrierPoint> back{p0};
    visited.insert(p0);
    CarrierPoint cur = p0;
    while (true) {
      if (downward_source(cur)) {
        ch.infinite_left = true;
        extend_up(back, cur);
        break;
      }
      auto prv = preimage(cur);
      if (!prv) break;
      back.push_back(*prv);
      visited.insert(*prv);
      cur = *prv;
    }
    std::reverse(back.begin(), back.end());
    return back;
  };

  std::vector<CarrierPoint> candidates;
  for (const auto& kv : exceptions_) {
    candidates.push_back(kv.first);
    candidates.push_back(kv.second);
  }
  for (const auto& [s, rule] : tails_) {
    candidates.push_back(CarrierPoint::at(s, rule.threshold));
    if (rule.delta == -1) candidates.push_back(CarrierPoint::at(s, rule.threshold - 1));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Chains with a first seat (its body ends up mindless).
  for (const auto& p : candidates) {
    if (visited.contains(p) || !in_domain(p) || in_image(p)) continue;
    Chain ch;
    walk_forward(p, ch);
    out.push_back(std::move(ch));
  }
  // Chains with a last seat coming down from infinity.
  for (const auto& p : candidates) {
    if (visited.contains(p) || in_domain(p) || !in_image(p)) continue;
    Chain ch;
    ch.points = walk_backward(p, ch);
    out.push_back(std::move(ch));
  }
  // Cycles and two-way infinite chains through the exception table.
  for (const auto& p : candidates) {
    if (visited.contains(p) || !in_domain(p) || in_tail_region(p)) continue;
    Chain fwd;
    walk_forward(p, fwd);
    if (fwd.closed) {
      out.push_back(std::move(fwd));
      continue;
    }
    Chain ch;
    auto back = walk_backward(p, ch);
    back.pop_back();
    back.insert(back.end(), fwd.points.begin(), fwd.points.end());
    ch.points = std::move(back);
    ch.infinite_right = fwd.infinite_right;
    out.push_back(std::move(ch));
  }
  // Fixed tails.
  for (const auto& [s, rule] : tails_) {
    if (rule.delta != 0) continue;
    Chain ch;
    ch.closed = true;
    ch.infinite_right = true;
    std::uint64_t i = rule.threshold;
    do ch.points.push_back(CarrierPoint::at(s, i)); while (i++ < horizon);
    out.push_back(std::move(ch));
  }
  return out;
}

std::string TailMap::render(std::uint64_t horizon) const {
  std::string out;
  for (const auto& ch : chains(horizon)) {
    if (ch.closed && ch.infinite_right) {
      for (const auto& p : ch.points) out += "(" + p.render() + ")";
      out += "⋯";
      continue;
    }
    const bool open_finite = !ch.closed && !ch.infinite_left && !ch.infinite_right;
    out += open_finite ? "[" : "(";
    if (ch.infinite_left) out += "⋯ ";
    for (std::size_t i = 0; i < ch.points.size(); ++i) out += (i ? " " : "") + ch.points[i].render();
    if (ch.infinite_right) out += " ⋯";
    out += open_finite ? "]" : ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<std::string> TailMap::step_table(std::uint64_t horizon) const {
  std::vector<std::string> lines;
  bool infinite = false;
  auto line = [&](const CarrierPoint& a, const CarrierPoint& b) {
    lines.push_back(a.render() + " → " + b.render());
  };
  for (const auto& ch : chains(horizon)) {
    const auto& pts = ch.points;
    if (ch.closed && ch.infinite_right) {
      for (const auto& p : pts) line(p, p);
      infinite = true;
      continue;
    }
    if (ch.infinite_left && !ch.infinite_right) {
      // Read from the refilled end back up the stream.
      for (std::size_t i = pts.size() - 1; i > 0; --i) line(pts[i - 1], pts[i]);
      infinite = true;
      continue;
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) line(pts[i], pts[i + 1]);
    if (ch.closed) line(pts.size() == 1 ? pts[0] : pts.back(), pts.front());
    infinite |= ch.infinite_left || ch.infinite_right;
  }
  if (infinite) lines.push_back("⋮");
  return lines;
}

// ------------------------------------------------------------- composition

TailMap compose(const TailMap& f, const TailMap& g) {
  std::set<std::uint32_t> tail_streams;
  for (const auto& kv : f.tails()) tail_streams.insert(kv.first);
  for (const auto& kv : g.tails()) tail_streams.insert(kv.first);

  std::map<std::uint32_t, std::uint64_t> bound;
  std::set<CarrierPoint> points;
  auto note = [&](const CarrierPoint& p) {
    points.insert(p);
    if (!p.is_named()) bound[p.stream] = std::max(bound[p.stream], p.index);
  };
  for (const auto* m : {&f, &g})
    for (const auto& [a, b] : m->exceptions()) {
      note(a);
      note(b);
    }
  for (const auto* m : {&f, &g})
    for (const auto& [s, rule] : m->tails()) bound[s] = std::max(bound[s], rule.threshold);

  std::map<std::uint32_t, TailRule> tails;
  for (auto s : tail_streams) {
    const std::uint64_t top = bound[s] + 2;
    for (std::uint64_t i = 1; i < top; ++i) points.insert(CarrierPoint::at(s, i));
    int delta = 0;
    if (auto it = f.tails().find(s); it != f.tails().end()) delta += it->second.delta;
    if (auto it = g.tails().find(s); it != g.tails().end()) delta += it->second.delta;
    if (delta < -1 || delta > 1)
      throw UnsupportedComposition("composite shifts stream " + stream_name(s) + " by " + std::to_string(delta));
    tails[s] = {top, delta};
  }

  std::map<CarrierPoint, CarrierPoint> ex;
  for (const auto& p : points) {
    if (!f.participates(p) && !g.participates(p)) continue;
    const auto mid = g.apply_extended(p);
    if (!mid) continue;
    const auto end = f.apply_extended(*mid);
    if (!end) continue;
    ex.emplace(p, *end);
  }
  return TailMap(std::move(ex), std::move(tails));
}

TailMap compose_plan(std::span<const TailMap> swaps) {
  TailMap acc;
  for (const auto& f : swaps) acc = compose(f, acc);
  return acc;
}

bool equal(const TailMap& f, const TailMap& g) { return f == g; }

const char* to_string(SwapClassification c) {
  switch (c) {
    case SwapClassification::Forgetful: return "forgetful";
    case SwapClassification::Retentive: return "retentive";
    case SwapClassification::Neither: return "neither";
  }
  return "unknown";
}

SwapClassification classify(const TailMap& f) {
  const PointSet dom = f.domain();
  const PointSet img = f.image();
  const PointSet all = dom.unite(img);
  if (img == all) return SwapClassification::Retentive;
  if (dom == all) return SwapClassification::Forgetful;
  return SwapClassification::Neither;
}

// ------------------------------------------------------------ constructions

namespace {

void require_named(const CarrierPoint& z) {
  if (!z.is_named()) throw std::invalid_argument("the outsider must be a named point, not a stream point");
}

CarrierPoint point(const Element& e, std::uint32_t stream) {
  if (e.is_outsider()) throw std::invalid_argument("stream permutations only move insiders a_i");
  return CarrierPoint::at(stream, e.index);
}

// Stream points up to top that the permutation leaves alone, ascending.
std::vector<CarrierPoint> untouched_below(const Permutation& sigma, std::uint64_t top, std::uint32_t stream) {
  std::vector<CarrierPoint> out;
  for (std::uint64_t i = 1; i <= top; ++i)
    if (!sigma.moves(Element::insider(i))) out.push_back(CarrierPoint::at(stream, i));
  return out;
}

}  // namespace

std::vector<TailMap> invert_shift_three_step(std::uint32_t stream, const CarrierPoint& z) {
  require_named(z);
  const auto at = [&](std::uint64_t i) { return CarrierPoint::at(stream, i); };
  return {
      TailMap::retentive_chain(stream, 3, {z, at(2), at(1)}),
      TailMap::forgetful_chain({z}, stream, 2),
      TailMap::retentive_chain(stream, 3, {z}),
  };
}

std::vector<TailMap> invert_multi_shift(std::span<const std::uint32_t> streams, const CarrierPoint& z) {
  std::set<std::uint32_t> unique(streams.begin(), streams.end());
  if (unique.size() != streams.size()) throw std::invalid_argument("streams must be pairwise disjoint");
  std::vector<TailMap> out;
  for (auto s : streams) {
    auto part = invert_shift_three_step(s, z);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

TailMap forward_shift(std::span<const std::uint32_t> streams) {
  std::map<std::uint32_t, TailRule> tails;
  for (auto s : streams) tails[s] = {1, +1};
  return TailMap({}, std::move(tails));
}

std::vector<TailMap> cycle_as_two_swaps(std::size_t n, std::uint32_t stream) {
  if (n == 0) throw std::invalid_argument("cycle length must be positive");
  if (n == 1) return {};
  return {
      TailMap::shift(stream),
      TailMap::retentive_chain(stream, n + 1, {CarrierPoint::at(stream, 1)}),
  };
}

std::vector<TailMap> sigma_star(const Cycle& cycle, const CarrierPoint& z, std::uint32_t stream) {
  require_named(z);
  const auto c = cycle.elements();
  std::uint64_t top = 0;
  for (const auto& e : c) top = std::max(top, point(e, stream).index);
  const auto rest = untouched_below(Permutation::from_cycle(cycle), top, stream);

  // (c1 ck ... c2 z b1 b2 ...)
  std::vector<CarrierPoint> prefix{point(c[0], stream)};
  for (std::size_t i = c.size() - 1; i >= 1; --i) prefix.push_back(point(c[i], stream));
  prefix.push_back(z);
  prefix.insert(prefix.end(), rest.begin(), rest.end());

  // (... b2 b1 z c1)
  std::vector<CarrierPoint> suffix(rest.rbegin(), rest.rend());
  suffix.push_back(z);
  suffix.push_back(point(c[0], stream));

  return {TailMap::forgetful_chain(prefix, stream, top + 1), TailMap::retentive_chain(stream, top + 1, suffix)};
}

std::vector<TailMap> invert_finitary_two_step(const Permutation& sigma, const CarrierPoint& z,
                                              std::uint32_t stream) {
  require_named(z);
  if (sigma.is_identity()) return {};
  std::uint64_t top = 0;
  for (const auto& e : sigma.support()) top = std::max(top, point(e, stream).index);
  const auto rest = untouched_below(sigma, top, stream);
  const auto cycles = sigma.cycles();

  // First cycle as a_{1,1} a_{1,k} ... a_{1,2}; the others fully reversed.
  std::vector<CarrierPoint> prefix{point(cycles[0][0], stream)};
  for (std::size_t i = cycles[0].length() - 1; i >= 1; --i) prefix.push_back(point(cycles[0][i], stream));
  prefix.push_back(z);
  for (std::size_t j = 1; j < cycles.size(); ++j)
    for (std::size_t i = cycles[j].length(); i-- > 0;) prefix.push_back(point(cycles[j][i], stream));
  prefix.insert(prefix.end(), rest.begin(), rest.end());

  // (... b2 b1 a_{m,k_m} ... a_{2,k_2} z a_{1,1})
  std::vector<CarrierPoint> suffix(rest.rbegin(), rest.rend());
  for (std::size_t j = cycles.size(); j-- > 1;) suffix.push_back(point(cycles[j][cycles[j].length() - 1], stream));
  suffix.push_back(z);
  suffix.push_back(point(cycles[0][0], stream));

  return {TailMap::forgetful_chain(prefix, stream, top + 1), TailMap::retentive_chain(stream, top + 1, suffix)};
}

InfinitePlanReport verify_infinite_plan(const TailMap& expected, std::span<const TailMap> swaps) {
  InfinitePlanReport report;
  for (const auto& f : swaps) {
    report.kinds.push_back(classify(f));
    report.domains.push_back(f.domain());
    report.participants.push_back(f.participants());
  }
  for (std::size_t i = 0; i < swaps.size(); ++i)
    for (std::size_t j = i + 1; j < swaps.size(); ++j) {
      if (report.participants[i] == report.participants[j]) report.participants_distinct = false;
      if (report.domains[i] == report.domains[j]) report.domains_distinct = false;
    }
  report.composite = compose_plan(swaps);
  report.composition_ok = report.composite == expected;
  return report;
}

}  // namespace mindswap

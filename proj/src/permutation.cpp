#include "mindswap/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace mindswap {

std::string Element::label() const {
  return (is_outsider() ? "x" : "a") + std::to_string(index);
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.label(); }

Element parse_element(std::string_view token) {
  if (token.empty()) throw ParseError("empty element token");
  Element::Kind kind = Element::Kind::Insider;
  std::string_view digits = token;
  if (token.front() == 'a' || token.front() == 'x') {
    kind = token.front() == 'x' ? Element::Kind::Outsider : Element::Kind::Insider;
    digits.remove_prefix(1);
  }
  if (digits.empty() || digits.front() == '0')
    throw ParseError("malformed element token '" + std::string(token) + "'");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("malformed element token '" + std::string(token) + "'");
  return {kind, value};
}

Cycle::Cycle(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.size() < 2) throw std::invalid_argument("cycle needs at least two elements");
  std::vector<Element> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats an element");
  std::rotate(elements_.begin(), std::min_element(elements_.begin(), elements_.end()),
              elements_.end());
}

bool Cycle::contains(const Element& e) const {
  return std::find(elements_.begin(), elements_.end(), e) != elements_.end();
}

Permutation Permutation::from_cycle(const Cycle& c) {
  return product_of(std::span<const Cycle>(&c, 1));
}

Permutation Permutation::product_of(std::span<const Cycle> cycles) {
  Permutation result;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::pair<Element, Element>> pairs;
    const auto els = it->elements();
    for (std::size_t i = 0; i < els.size(); ++i)
      pairs.emplace_back(els[i], els[(i + 1) % els.size()]);
    result = compose(from_pairs(std::move(pairs)), result);
  }
  return result;
}

Permutation Permutation::from_pairs(std::vector<std::pair<Element, Element>> pairs) {
  std::erase_if(pairs, [](const auto& p) { return p.first == p.second; });
  std::sort(pairs.begin(), pairs.end());
  std::vector<Element> images;
  images.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first)
      throw std::invalid_argument("mapping assigns two images to " + pairs[i].first.label());
    images.push_back(pairs[i].second);
  }
  std::sort(images.begin(), images.end());
  std::vector<Element> domain;
  domain.reserve(pairs.size());
  for (const auto& p : pairs) domain.push_back(p.first);
  if (images != domain) throw std::invalid_argument("mapping is not a bijection on its support");

  Permutation p;
  p.map_ = std::move(pairs);
  std::vector<bool> seen(p.map_.size(), false);
  auto position = [&](const Element& e) {
    auto it = std::lower_bound(p.map_.begin(), p.map_.end(), e,
                               [](const auto& kv, const Element& k) { return kv.first < k; });
    return static_cast<std::size_t>(it - p.map_.begin());
  };
  for (std::size_t i = 0; i < p.map_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Element> cyc;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(p.map_[j].first);
      j = position(p.map_[j].second);
    }
    p.cycles_.emplace_back(std::move(cyc));
  }
  // Leaders come out ascending because the scan walks the sorted domain.
  return p;
}

Element Permutation::apply(const Element& e) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), e,
                             [](const auto& kv, const Element& k) { return kv.first < k; });
  if (it != map_.end() && it->first == e) return it->second;
  return e;
}

std::vector<Element> Permutation::support() const {
  std::vector<Element> out;
  out.reserve(map_.size());
  for (const auto& kv : map_) out.push_back(kv.first);
  return out;
}

bool Permutation::moves(const Element& e) const { return apply(e) != e; }

Parity Permutation::parity() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles_) transpositions += c.length() - 1;
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation Permutation::inverse() const {
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(map_.size());
  for (const auto& [from, to] : map_) pairs.emplace_back(to, from);
  return from_pairs(std::move(pairs));
}

bool Permutation::touches_outsiders() const {
  return std::any_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.first.is_outsider(); });
}

std::string Permutation::format() const {
  if (cycles_.empty()) return "()";
  std::string out;
  for (const auto& c : cycles_) {
    out += '(';
    bool first = true;
    for (const auto& e : c.elements()) {
      if (!first) out += ' ';
      out += e.label();
      first = false;
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Element> pts = q.support();
  const auto ps = p.support();
  pts.insert(pts.end(), ps.begin(), ps.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pairs.reserve(pts.size());
  for (const auto& e : pts) pairs.emplace_back(e, p.apply(q.apply(e)));
  return Permutation::from_pairs(std::move(pairs));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.format(); }

std::vector<std::vector<Element>> parse_cycle_groups(std::string_view text) {
  std::vector<std::vector<Element>> groups;
  std::vector<Element> current;
  bool open = false;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '(') {
      if (open) throw ParseError("unbalanced parentheses: nested '('");
      open = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!open) throw ParseError("unbalanced parentheses: stray ')'");
      open = false;
      std::set<Element> seen(current.begin(), current.end());
      if (seen.size() != current.size()) throw ParseError("element repeated within one cycle");
      groups.push_back(current);
      ++i;
    } else {
      if (!open) throw ParseError("element outside parentheses");
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j]) && text[j] != '(' && text[j] != ')') ++j;
      current.push_back(parse_element(text.substr(i, j - i)));
      i = j;
    }
  }
  if (open) throw ParseError("unbalanced parentheses: missing ')'");
  return groups;
}

Permutation parse_cycles(std::string_view text) {
  std::vector<Cycle> cycles;
  for (auto& g : parse_cycle_groups(text))
    if (g.size() >= 2) cycles.emplace_back(std::move(g));
  return Permutation::product_of(cycles);
}

}  // namespace mindswap

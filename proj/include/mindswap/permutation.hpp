#ifndef MINDSWAP_PERMUTATION_HPP
#define MINDSWAP_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mindswap {

/// A labeled point the symmetric group acts on. Insiders are the scrambled
/// people, outsiders are helpers who never used the machine before.
struct Element {
  enum class Kind : std::uint8_t { Insider = 0, Outsider = 1 };

  Kind kind = Kind::Insider;
  std::uint64_t index = 1;

  static constexpr Element insider(std::uint64_t i) { return {Kind::Insider, i}; }
  static constexpr Element outsider(std::uint64_t i) { return {Kind::Outsider, i}; }

  constexpr bool is_outsider() const { return kind == Kind::Outsider; }
  constexpr bool is_insider() const { return kind == Kind::Insider; }

  // Insiders order before outsiders, then by index.
  constexpr auto operator<=>(const Element&) const = default;

  /// "a3" / "x1"
  std::string label() const;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a single token: "a3", "x2" or a bare "3" (insider).
Element parse_element(std::string_view token);

/// A cycle of length >= 2 with distinct entries, rotated so that the minimal
/// element leads.
class Cycle {
 public:
  explicit Cycle(std::vector<Element> elements);
  Cycle(std::initializer_list<Element> elements)
      : Cycle(std::vector<Element>(elements)) {}

  std::span<const Element> elements() const { return elements_; }
  std::size_t length() const { return elements_.size(); }
  const Element& leader() const { return elements_.front(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  bool contains(const Element& e) const;

  bool operator==(const Cycle&) const = default;
  auto operator<=>(const Cycle& other) const { return elements_ <=> other.elements_; }

 private:
  std::vector<Element> elements_;
};

enum class Parity { Even, Odd };

/// Finite-support bijection on Elements, held as canonical disjoint cycles.
/// Composition is right-to-left: compose(p, q) maps e to p(q(e)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity() { return {}; }
  static Permutation from_cycle(const Cycle& c);
  /// Product of the given (not necessarily disjoint) cycles, rightmost first.
  static Permutation product_of(std::span<const Cycle> cycles);
  /// Builds from (element, image) pairs. Pairs with e == image may be
  /// included or omitted. Throws std::invalid_argument if not a bijection.
  static Permutation from_pairs(std::vector<std::pair<Element, Element>> pairs);

  std::span<const Cycle> cycles() const { return cycles_; }
  bool is_identity() const { return cycles_.empty(); }

  Element apply(const Element& e) const;
  Element operator()(const Element& e) const { return apply(e); }

  /// Moved elements in ascending order.
  std::vector<Element> support() const;
  bool moves(const Element& e) const;
  Parity parity() const;
  Permutation inverse() const;
  bool touches_outsiders() const;

  /// Exact serializer: "(a1 a4 a2)(x1 a5)", identity as "()".
  std::string format() const;

  bool operator==(const Permutation&) const = default;

 private:
  void build_index();

  std::vector<Cycle> cycles_;
  // Sorted (element, image) pairs over the support.
  std::vector<std::pair<Element, Element>> map_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Parses cycle notation, e.g. "(1 5)(1 2 3)(1 4)". The product is taken
/// right-to-left and returned in canonical form.
Permutation parse_cycles(std::string_view text);

/// Parses cycle notation without multiplying: each parenthesized group is
/// returned with its seat order intact. Groups of length 1 are kept.
std::vector<std::vector<Element>> parse_cycle_groups(std::string_view text);

}  // namespace mindswap

template <>
struct std::hash<mindswap::Element> {
  std::size_t operator()(const mindswap::Element& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.index * 2 + (e.is_outsider() ? 1 : 0));
  }
};

#endif  // MINDSWAP_PERMUTATION_HPP

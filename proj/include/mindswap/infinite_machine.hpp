#ifndef MINDSWAP_INFINITE_MACHINE_HPP
#define MINDSWAP_INFINITE_MACHINE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindswap/permutation.hpp"

namespace mindswap {

// The countably infinite machine. People are points of one or more streams
// a1, a2, ... (stream 0 renders as "a", stream 1 as "b", ...) plus named
// outsiders such as z. A machine use sends the mind in each seat to the next
// seat; seats continue forever in one direction, so a use is a partial
// injection: a forgetful use leaves its first body mindless, a retentive use
// is only run when its last body is already mindless.

struct CarrierPoint {
  enum class Kind : std::uint8_t { Named = 0, Stream = 1 };

  Kind kind = Kind::Stream;
  std::uint32_t stream = 0;
  std::uint64_t index = 1;
  std::string label;

  static CarrierPoint at(std::uint32_t stream, std::uint64_t index) {
    return {Kind::Stream, stream, index, {}};
  }
  static CarrierPoint named(std::string label) { return {Kind::Named, 0, 0, std::move(label)}; }

  bool is_named() const { return kind == Kind::Named; }

  auto operator<=>(const CarrierPoint&) const = default;

  std::string render() const;
};

/// Letter used when rendering a stream: a, b, c, ... (x and z skipped).
std::string stream_name(std::uint32_t stream);

/// Finite sets of named points plus, per stream, a finite set of indices and
/// optionally every index from some point on.
class PointSet {
 public:
  void add(const CarrierPoint& p);
  /// Adds stream points with index >= from.
  void add_from(std::uint32_t stream, std::uint64_t from);

  bool contains(const CarrierPoint& p) const;
  PointSet unite(const PointSet& other) const;
  bool subset_of(const PointSet& other) const;
  bool empty() const { return streams_.empty() && named_.empty(); }

  /// For a stream holding all indices from some point on: the finitely many
  /// indices it is missing. Empty optional when the stream part is finite.
  std::optional<std::vector<std::uint64_t>> excluded(std::uint32_t stream) const;
  std::vector<std::uint32_t> streams() const;
  const std::set<std::string>& named() const { return named_; }

  /// "a[*] \ {a1} ∪ {z}" style.
  std::string render() const;

  bool operator==(const PointSet&) const = default;

 private:
  struct StreamPart {
    std::set<std::uint64_t> finite;
    std::optional<std::uint64_t> from;
    bool operator==(const StreamPart&) const = default;
  };
  void normalize(std::uint32_t stream);

  std::map<std::uint32_t, StreamPart> streams_;
  std::set<std::string> named_;
};

/// Stream(s, n) -> Stream(s, n + delta) for every n >= threshold.
struct TailRule {
  std::uint64_t threshold = 1;
  int delta = 0;
  bool operator==(const TailRule&) const = default;
};

class UnsupportedComposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial injection given by a finite exception table plus eventual shift
/// rules per stream. Always held in canonical form: thresholds are minimal
/// and exceptions never duplicate what a tail rule already says.
class TailMap {
 public:
  /// The empty map. Under composition it acts as the identity.
  TailMap() = default;
  /// Validates injectivity and tail constraints, then canonicalizes.
  TailMap(std::map<CarrierPoint, CarrierPoint> exceptions, std::map<std::uint32_t, TailRule> tails);

  /// n -> n + 1 on the stream.
  static TailMap shift(std::uint32_t stream);
  /// (p0 p1 ... pk s_start s_{start+1} ...): every mind moves one seat right.
  static TailMap forgetful_chain(const std::vector<CarrierPoint>& prefix, std::uint32_t stream,
                                 std::uint64_t start);
  /// (... s_{start+1} s_start q0 q1 ... qk): minds move right, qk's body is
  /// the mindless one being refilled.
  static TailMap retentive_chain(std::uint32_t stream, std::uint64_t start,
                                 const std::vector<CarrierPoint>& suffix);
  /// A finitary permutation of insiders a_i read as stream points, extended
  /// by the identity on the rest of the stream.
  static TailMap stream_extension(const Permutation& sigma, std::uint32_t stream = 0);

  const std::map<CarrierPoint, CarrierPoint>& exceptions() const { return exceptions_; }
  const std::map<std::uint32_t, TailRule>& tails() const { return tails_; }

  std::optional<CarrierPoint> apply(const CarrierPoint& p) const;
  std::optional<CarrierPoint> preimage(const CarrierPoint& p) const;
  bool in_domain(const CarrierPoint& p) const { return apply(p).has_value(); }
  bool in_image(const CarrierPoint& p) const { return preimage(p).has_value(); }
  bool participates(const CarrierPoint& p) const { return in_domain(p) || in_image(p); }

  /// Where a use moves the mind in body p: apply(p) for participants (empty
  /// when p's mind is dropped), p itself for everyone not seated.
  std::optional<CarrierPoint> apply_extended(const CarrierPoint& p) const;

  PointSet domain() const;
  PointSet image() const;
  /// Everyone seated: domain ∪ image.
  PointSet participants() const;

  TailMap inverse() const;
  /// Adds p -> p; p must not already participate.
  TailMap with_fixed(const CarrierPoint& p) const;

  /// Extended cycle notation, e.g. "(⋯ a4 a3 z a2 a1)". Tails are printed
  /// up to index horizon and then marked with ⋯.
  std::string render(std::uint64_t horizon = 8) const;
  /// "src → dst" lines in chain order, ending with "⋮" when infinite.
  std::vector<std::string> step_table(std::uint64_t horizon = 8) const;

  bool operator==(const TailMap&) const = default;

 private:
  struct Chain {
    std::vector<CarrierPoint> points;
    bool infinite_left = false;
    bool infinite_right = false;
    bool closed = false;
  };
  std::vector<Chain> chains(std::uint64_t horizon) const;
  bool in_tail_region(const CarrierPoint& p) const;

  std::map<CarrierPoint, CarrierPoint> exceptions_;
  std::map<std::uint32_t, TailRule> tails_;
  std::map<CarrierPoint, CarrierPoint> reverse_;
};

/// (f ∘ g): g's use happens first. People not seated in a use keep their
/// minds. Throws UnsupportedComposition when a tail would shift by 2.
TailMap compose(const TailMap& f, const TailMap& g);
/// Composition of chronologically ordered uses.
TailMap compose_plan(std::span<const TailMap> swaps);
bool equal(const TailMap& f, const TailMap& g);

enum class SwapClassification { Forgetful, Retentive, Neither };
const char* to_string(SwapClassification c);

/// Retentive: every seated body ends with a mind. Forgetful: every seated
/// mind moves and some seated body is left mindless.
SwapClassification classify(const TailMap& f);

/// [retentive, forgetful, retentive] uses that undo the shift n -> n + 1 on
/// the stream with the help of outsider z:
/// (⋯ 4 3 z 2 1), (z 2 3 4 ⋯), (⋯ 5 4 3 z).
std::vector<TailMap> invert_shift_three_step(std::uint32_t stream, const CarrierPoint& z);

/// Three uses per stream, streams undone in the given order.
std::vector<TailMap> invert_multi_shift(std::span<const std::uint32_t> streams, const CarrierPoint& z);

/// Product of the forward shifts on every stream.
TailMap forward_shift(std::span<const std::uint32_t> streams);

/// [forgetful, retentive] uses whose composite is the cycle (a1 ... an) on
/// the first n stream points: (a1 a2 ⋯) then (⋯ a_{n+2} a_{n+1} a1).
/// n = 1 is the identity and needs no uses.
std::vector<TailMap> cycle_as_two_swaps(std::size_t n, std::uint32_t stream = 0);

/// [forgetful, retentive] uses undoing the cycle (a1 ... ak):
/// (a1 ak ⋯ a2 z b1 b2 ⋯) then (⋯ b2 b1 z a1), where the b's are the stream
/// points the cycle leaves alone, in increasing order.
std::vector<TailMap> sigma_star(const Cycle& cycle, const CarrierPoint& z, std::uint32_t stream = 0);

/// Two uses undoing any finitary permutation of stream points, regardless of
/// how many cycles it has. Identity gives an empty plan.
std::vector<TailMap> invert_finitary_two_step(const Permutation& sigma, const CarrierPoint& z,
                                              std::uint32_t stream = 0);

struct InfinitePlanReport {
  std::vector<SwapClassification> kinds;
  std::vector<PointSet> domains;
  std::vector<PointSet> participants;
  bool participants_distinct = true;
  bool domains_distinct = true;
  bool composition_ok = false;
  TailMap composite;
};

/// Composes the plan, compares with expected, and records for every use its
/// domain, participants and classification.
InfinitePlanReport verify_infinite_plan(const TailMap& expected, std::span<const TailMap> swaps);

}  // namespace mindswap

#endif  // MINDSWAP_INFINITE_MACHINE_HPP

#include <doctest.h>

#include "mindswap/permutation.hpp"
#include "support.hpp"

using namespace mindswap;
using namespace testing_support;

namespace {
Element a(std::uint64_t i) { return Element::insider(i); }
Element x(std::uint64_t i) { return Element::outsider(i); }
}  // namespace

TEST_CASE("element parsing and ordering") {
  CHECK(parse_element("a3") == a(3));
  CHECK(parse_element("7") == a(7));
  CHECK(parse_element("x2") == x(2));
  CHECK(a(100) < x(1));
  CHECK(a(2) < a(10));
  CHECK(a(12).label() == "a12");
  CHECK_THROWS_AS(parse_element("a0"), ParseError);
  CHECK_THROWS_AS(parse_element("a03"), ParseError);
  CHECK_THROWS_AS(parse_element("y1"), ParseError);
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_element("a"), ParseError);
}

TEST_CASE("cycle canonical rotation and validation") {
  const Cycle c({a(3), a(1), a(2)});
  CHECK(c.leader() == a(1));
  CHECK(c[1] == a(2));
  CHECK(c[2] == a(3));
  CHECK_THROWS(Cycle({a(1)}));
  CHECK_THROWS(Cycle({a(1), a(2), a(1)}));
}

TEST_CASE("parse_cycles composes right to left") {
  CHECK(parse_cycles("(1 5)(1 2 3)(1 4)").format() == "(a1 a4 a2 a3 a5)");
  CHECK(parse_cycles("").is_identity());
  CHECK(parse_cycles("  ").is_identity());
  CHECK(parse_cycles("(2 1)").format() == "(a1 a2)");
  CHECK(parse_cycles("(a2 x1) (a1)").format() == "(a2 x1)");

  const auto p = parse_cycles("(1 2)(2 3)");
  REQUIRE(p.cycles().size() == 1);
  CHECK(p.cycles()[0].length() == 3);
  // (2 3) first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(p.apply(a(1)) == a(2));
  CHECK(p.apply(a(2)) == a(3));
  CHECK(p.apply(a(3)) == a(1));
}

TEST_CASE("parse_cycles errors") {
  CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("((1 2))"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 b2)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("3 (1 2)"), ParseError);
}

TEST_CASE("compose, inverse, apply on the worked product") {
  const auto p = parse_cycles("(1 5)");
  const auto q = compose(parse_cycles("(1 2 3)"), parse_cycles("(1 4)"));
  CHECK(compose(p, q) == parse_cycles("(1 4 2 3 5)"));
  CHECK(compose(p, Permutation::identity()) == p);
  CHECK(compose(p, p.inverse()).is_identity());

  CHECK(parse_cycles("(1 2 3)").inverse() == parse_cycles("(1 3 2)"));
  CHECK(Permutation::identity().inverse().is_identity());
  const auto r = parse_cycles("(1 2)(3 4 5)");
  CHECK(r.inverse() == parse_cycles("(1 2)(3 5 4)"));
  CHECK(compose(r, r.inverse()).is_identity());

  const auto t = parse_cycles("(1 4 2 3 5)");
  CHECK(t.apply(a(1)) == a(4));
  CHECK(t.apply(a(6)) == a(6));
  CHECK(parse_cycles("(1 2)").apply(x(1)) == x(1));
}

TEST_CASE("parity, support, decomposition") {
  CHECK(parse_cycles("(1 2 3)").parity() == Parity::Even);
  CHECK(parse_cycles("(1 2 3 4)").parity() == Parity::Odd);
  CHECK(Permutation::identity().parity() == Parity::Even);

  CHECK(parse_cycles("(1 2)(3 4)").support() == std::vector<Element>{a(1), a(2), a(3), a(4)});
  CHECK(Permutation::identity().support().empty());
  CHECK(parse_cycles("(a1 a3 x1)").support() == std::vector<Element>{a(1), a(3), x(1)});

  const auto p = parse_cycles("(1 4 2 3 5)");
  REQUIRE(p.cycles().size() == 1);
  CHECK(p.cycles()[0] == Cycle({a(1), a(4), a(2), a(3), a(5)}));
  CHECK(Permutation::identity().cycles().empty());
  CHECK(Permutation::identity().format() == "()");
}

TEST_CASE("from_pairs rejects non-bijections") {
  CHECK_THROWS(Permutation::from_pairs({{a(1), a(2)}, {a(2), a(2)}}));
  CHECK_THROWS(Permutation::from_pairs({{a(1), a(2)}}));
  CHECK(Permutation::from_pairs({{a(1), a(1)}}).is_identity());
}

TEST_CASE("property: group laws on 1000 samples") {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = uniform(1, 10);
    const auto tp = random_table(n), tq = random_table(n), tr = random_table(n);
    const auto p = from_table(tp), q = from_table(tq), r = from_table(tr);

    CHECK(compose(p, compose(q, r)) == compose(compose(p, q), r));
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());

    // Reference composition on raw tables.
    Table pq(n);
    for (std::size_t i = 0; i < n; ++i) pq[i] = tp[tq[i]];
    CHECK(compose(p, q) == from_table(pq));

    const bool odd = (p.parity() == Parity::Odd) != (q.parity() == Parity::Odd);
    CHECK((compose(p, q).parity() == Parity::Odd) == odd);
    CHECK((p.parity() == Parity::Even) == table_even(tp));
  }
}

TEST_CASE("property: format round-trips and cycles are disjoint") {
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = random_permutation(uniform(0, 10));
    if (trial % 3 == 0) p = compose(p, parse_cycles("(x1 a2)(x2 x3)"));
    CHECK(parse_cycles(p.format()) == p);

    std::set<Element> seen;
    for (const auto& c : p.cycles()) {
      CHECK(c.leader() == *std::min_element(c.elements().begin(), c.elements().end()));
      for (const auto& e : c.elements()) CHECK(seen.insert(e).second);
    }
    CHECK(Permutation::product_of(p.cycles()) == p);
    for (std::size_t i = 1; i < p.cycles().size(); ++i) CHECK(p.cycles()[i - 1].leader() < p.cycles()[i].leader());
  }
}

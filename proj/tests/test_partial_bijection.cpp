#include <map>     // for map
#include <random>  // for mt19937_64
#include <vector>  // for vector

#include "catch_amalgamated.hpp"

#include "waning/partial_bijection.hpp"
#include "waning/universe.hpp"

using waning::Direction;
using waning::Nat;
using waning::PartialBijection;
using waning::compose;
using waning::d_map;
using waning::invert;
using waning::is_idempotent;
using waning::restrict_below;

namespace {
  // Relational composition through std::map, a applied first.
  PartialBijection compose_oracle(PartialBijection const& a, PartialBijection const& b) {
    std::map<Nat, Nat> bm(b.begin(), b.end());
    std::vector<waning::Pair> out;
    for (auto const& [x, y] : a) {
      if (auto it = bm.find(y); it != bm.end()) {
        out.emplace_back(x, it->second);
      }
    }
    return PartialBijection(out);
  }

  // k-th element (0-based) of N \ X by walking the naturals.
  Nat nth_outside(std::vector<Nat> const& X, Nat k) {
    for (Nat v = 0;; ++v) {
      bool in_x = false;
      for (Nat x : X) {
        in_x = in_x || x == v;
      }
      if (!in_x && k-- == 0) {
        return v;
      }
    }
  }
}  // namespace

TEST_CASE("construction validates injectivity", "[pb]") {
  REQUIRE_THROWS_AS(PartialBijection({{0, 1}, {0, 2}}), waning::DomainError);
  REQUIRE_THROWS_AS(PartialBijection({{0, 1}, {2, 1}}), waning::DomainError);
  PartialBijection const g{{3, 1}, {0, 5}};
  REQUIRE(g.to_string() == "[[0,5],[3,1]]");
  REQUIRE(g(3) == Nat(1));
  REQUIRE_FALSE(g(1).has_value());
  REQUIRE(g.preimage(5) == Nat(0));
}

TEST_CASE("compose examples", "[pb]") {
  REQUIRE(compose({{0, 1}}, {{1, 2}}) == PartialBijection{{0, 2}});
  PartialBijection const a{{0, 3}, {1, 4}};
  REQUIRE(compose(a, invert(a)) == PartialBijection{{0, 0}, {1, 1}});
  REQUIRE(compose({{0, 1}}, {{2, 3}}).empty());
}

TEST_CASE("invert examples", "[pb]") {
  REQUIRE(invert({{0, 3}, {1, 4}}) == PartialBijection{{3, 0}, {4, 1}});
  REQUIRE(invert({}).empty());
  REQUIRE(invert({{2, 2}}) == PartialBijection{{2, 2}});
}

TEST_CASE("restrict_below examples", "[pb]") {
  PartialBijection const g{{0, 5}, {3, 1}, {7, 2}};
  REQUIRE(restrict_below(g, 4) == PartialBijection{{0, 5}, {3, 1}});
  REQUIRE(restrict_below(g, 0).empty());
  REQUIRE(restrict_below(g, 8) == g);
}

TEST_CASE("is_idempotent examples", "[pb]") {
  REQUIRE(is_idempotent({{0, 0}, {2, 2}}));
  REQUIRE_FALSE(is_idempotent({{0, 1}}));
  REQUIRE(is_idempotent({}));
}

TEST_CASE("reindex_apply examples", "[pb]") {
  std::vector<Nat> const X{0, 2};
  REQUIRE(reindex_apply(X, 1, Direction::forward) == 3);
  REQUIRE(reindex_apply(std::vector<Nat>{}, 7, Direction::forward) == 7);
  REQUIRE(reindex_apply(X, 4, Direction::inverse) == 2);
  REQUIRE_THROWS_AS(reindex_apply(X, 2, Direction::inverse), waning::DomainError);
}

TEST_CASE("reindex_apply matches a naive walk", "[pb][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Nat> X;
    for (Nat v = 0; v < 12; ++v) {
      if (rng() % 3 == 0) {
        X.push_back(v);
      }
    }
    for (Nat k = 0; k < 10; ++k) {
      Nat const y = nth_outside(X, k);
      REQUIRE(reindex_apply(X, k, Direction::forward) == y);
      REQUIRE(reindex_apply(X, y, Direction::inverse) == k);
    }
  }
}

TEST_CASE("d_map examples", "[pb]") {
  REQUIRE(d_map({{0, 0}}, {{0, 0}, {2, 5}}) == PartialBijection{{1, 4}});
  PartialBijection const g{{1, 0}};
  REQUIRE(d_map(g, g).empty());
  REQUIRE(d_map(g, {{1, 0}, {0, 2}}) == PartialBijection{{0, 1}});
  REQUIRE_THROWS_AS(d_map({{0, 1}}, {{0, 0}}), waning::PreconditionError);
}

TEST_CASE("d_map is the composite of the reindexing maps", "[pb][property]") {
  waning::BoundedUniverse const universe(4);
  for (auto const& g : universe.elements()) {
    if (g.size() > 2) {
      continue;
    }
    auto const dom = g.domain(), im = g.image();
    for (auto const& h : universe.elements()) {
      if (!h.extends(g)) {
        continue;
      }
      std::vector<waning::Pair> expected;
      for (auto const& [s, t] : h) {
        if (!g.in_domain(s)) {
          Nat rs = 0, rt = 0;
          while (nth_outside(dom, rs) != s) {
            ++rs;
          }
          while (nth_outside(im, rt) != t) {
            ++rt;
          }
          expected.emplace_back(rs, rt);
        }
      }
      REQUIRE(d_map(g, h) == PartialBijection(expected));
    }
  }
}

TEST_CASE("monoid laws on I_4", "[pb][property]") {
  waning::BoundedUniverse const universe(4);
  std::mt19937_64               rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    auto const& a = universe[rng() % universe.size()];
    auto const& b = universe[rng() % universe.size()];
    auto const& c = universe[rng() % universe.size()];
    REQUIRE(compose(a, b) == compose_oracle(a, b));
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    REQUIRE(compose(compose(a, invert(a)), a) == a);
    REQUIRE(invert(invert(a)) == a);
    REQUIRE(invert(compose(a, b)) == compose(invert(b), invert(a)));
    REQUIRE(is_idempotent(compose(a, invert(a))));
  }
}

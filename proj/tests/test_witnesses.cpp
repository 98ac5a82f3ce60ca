#include <random>  // for mt19937_64
#include <vector>  // for vector

#include "catch_amalgamated.hpp"

#include "waning/io.hpp"
#include "waning/universe.hpp"
#include "waning/witnesses.hpp"

using waning::ExtNat;
using waning::GenFn;
using waning::Nat;
using waning::omega;
using waning::PartialBijection;
using waning::SetDescriptor;
using waning::WaningFn;
using waning::cover_witness;

namespace {
  std::string dump(SetDescriptor const& d) {
    return waning::io::to_json(d).dump();
  }

  // Least r by the definition, scanning far beyond dom(g).
  Nat valid_r_oracle(WaningFn const& f, PartialBijection const& g) {
    for (Nat r = 0;; ++r) {
      if (f(r) <= f(g.size()) && f(g.size()) == f(restrict_below(g, r).size())) {
        return r;
      }
    }
  }
}  // namespace

TEST_CASE("valid_r_min examples", "[witnesses]") {
  REQUIRE(valid_r_min(WaningFn::zero(), {{0, 0}}) == 0);
  REQUIRE(valid_r_min(WaningFn::const_omega(), {{3, 1}, {4, 0}}) == 0);
  REQUIRE(valid_r_min(WaningFn::tail(0, {2, 1}), {{5, 5}}) == 6);
}

TEST_CASE("valid_r_min is the least valid r", "[witnesses][property]") {
  waning::BoundedUniverse const universe(4);
  for (auto const& f : {WaningFn::zero(), WaningFn::tail(0, {1}), WaningFn::tail(0, {3, 2, 1}),
                        WaningFn::tail(1, {2}), WaningFn::tail(3, {}), WaningFn::const_omega()}) {
    for (auto const& g : universe.elements()) {
      Nat const r = valid_r_min(f, g);
      REQUIRE(r == valid_r_oracle(f, g));
      for (Nat p = r; p < r + 6; ++p) {
        REQUIRE(is_valid_r(f, g, p));
      }
    }
  }
}

TEST_CASE("basis_refinement examples", "[witnesses]") {
  REQUIRE(basis_refinement(WaningFn::zero(), 1, {0}, {{1, 2}}) == 2);
  REQUIRE(basis_refinement(WaningFn::const_omega(), 1, {}, {{0, 0}}) == 1);
  REQUIRE_THROWS_AS(basis_refinement(WaningFn::zero(), 1, {0}, {{1, 0}}), waning::NotMember);
}

TEST_CASE("much_wan_witness examples", "[witnesses]") {
  GenFn const            f{{5, 5, 5}, 0, 0};
  PartialBijection const g{{0, 0}};
  auto const             d = much_wan_witness(f, g, 1);
  auto const             expected
      = SetDescriptor::intersection({SetDescriptor::fix_below(g, 1), SetDescriptor::u_basic(f, 0, {0})});
  REQUIRE(dump(d) == dump(expected));
  auto const eq = equality_check(d, SetDescriptor::w_nbhd(closure(f), g, 1), 5);
  REQUIRE(eq.passed());

  GenFn const all_omega{{omega}, omega, omega};
  auto const  fix = much_wan_witness(all_omega, {{1, 2}}, 0);
  REQUIRE(dump(fix) == dump(SetDescriptor::fix_below({{1, 2}}, 0)));
  REQUIRE(fix.contains({{0, 0}, {3, 3}}));

  REQUIRE_THROWS_AS(much_wan_witness(GenFn{{2, 1}, 0, 0}, {{5, 5}}, 0), waning::PreconditionError);
}

TEST_CASE("much_wan_witness of a waning function is W itself", "[witnesses]") {
  waning::BoundedUniverse const universe(4);
  auto const                    f = WaningFn::tail(0, {3, 2, 1});
  for (PartialBijection const& g : {PartialBijection{{0, 1}}, PartialBijection{{0, 0}, {1, 2}},
                                   PartialBijection{}}) {
    Nat const r = valid_r_min(f, g) + 1;
    REQUIRE(equality_check(much_wan_witness(to_gen_fn(f), g, r), SetDescriptor::w_nbhd(f, g, r),
                           universe)
                .passed());
  }
}

TEST_CASE("tfprime_refinement examples", "[witnesses]") {
  GenFn const f{{5, 5, 5}, 0, 0};
  auto const  u = tfprime_refinement(f, 1, {0}, {{1, 2}});
  REQUIRE(dump(u) == dump(SetDescriptor::u_basic(closure(f), 1, {0})));

  // |g| = 3 and f'(3) = 0, so the refinement is a W neighbourhood of g.
  PartialBijection const g{{0, 1}, {1, 2}, {2, 3}};
  auto const             w = tfprime_refinement(f, 1, {0}, g);
  REQUIRE(w.is<waning::descriptor::WNbhd>());
  REQUIRE(w.contains(g));
  REQUIRE(subset_check(w, SetDescriptor::u_basic(f, 1, {0}), 5).passed());

  REQUIRE_THROWS_AS(tfprime_refinement(f, 1, {0}, {{0, 0}}), waning::NotMember);
}

TEST_CASE("tfprime_refinement when X lies beyond the preimages", "[witnesses]") {
  // X = {10, 11} sits past every point of g; the neighbourhood must still
  // fix all of X or maps hitting it escape U.
  GenFn const            f{{1}, 0, 0};
  PartialBijection const g{{0, 0}};
  auto const             w = tfprime_refinement(f, 0, {10, 11}, g);
  auto const             u = SetDescriptor::u_basic(f, 0, {10, 11});
  REQUIRE(w.contains(g));
  REQUIRE_FALSE(u.contains({{0, 0}, {1, 10}, {2, 11}}));
  REQUIRE_FALSE(w.contains({{0, 0}, {1, 10}, {2, 11}}));
}

TEST_CASE("continuity_p examples", "[witnesses]") {
  REQUIRE(continuity_p(WaningFn::zero(), {{0, 1}}, {{1, 2}}, 1) == 2);
  REQUIRE(continuity_p(WaningFn::zero(), {}, {}, 0) == 1);
  REQUIRE_THROWS_AS(continuity_p(WaningFn::tail(0, {2, 1}), {{5, 5}}, {{5, 5}}, 0), waning::InvalidR);

  // p = 1 is too small for the first example: W_{0,b,1} only fixes b below 1,
  // so it contains the empty map, and a times the empty map loses (0,2).
  waning::BoundedUniverse const universe(5);
  PartialBijection const        a{{0, 1}}, b{{1, 2}};
  auto const                    c  = compose(a, b);
  auto const                    wa = SetDescriptor::w_nbhd(WaningFn::zero(), a, 1);
  auto const                    wb = SetDescriptor::w_nbhd(WaningFn::zero(), b, 1);
  auto const                    wc = SetDescriptor::w_nbhd(WaningFn::zero(), c, 1);
  PartialBijection const        d = a, e;
  REQUIRE(wa.contains(d));
  REQUIRE(wb.contains(e));
  REQUIRE_FALSE(wc.contains(compose(d, e)));
  REQUIRE(product_containment_check(WaningFn::zero(), a, b, universe).passed());
}

TEST_CASE("product containment examples", "[witnesses]") {
  waning::BoundedUniverse const i5(5), i4(4);
  REQUIRE(product_containment_check(WaningFn::zero(), {{0, 1}}, {{1, 2}}, i5).passed());
  REQUIRE(product_containment_check(WaningFn::const_omega(), {{0, 1}, {2, 0}}, {{1, 3}}, i4).passed());
  REQUIRE(product_containment_check(WaningFn::tail(0, {2, 1}), {}, {}, i4).passed());
}

TEST_CASE("order_counterexample examples", "[witnesses]") {
  auto const w = order_counterexample(WaningFn::zero(), WaningFn::tail(0, {1}), 2);
  REQUIRE(w.n == 0);
  REQUIRE(w.b == 1);
  REQUIRE(w.h == PartialBijection{{2, 0}});

  auto const v = order_counterexample(WaningFn::tail(0, {1}), WaningFn::tail(0, {2, 1}), 3);
  REQUIRE(v.n == 0);
  REQUIRE(v.b == 2);
  REQUIRE(v.h == PartialBijection{{3, 0}, {4, 1}});

  auto const f = WaningFn::tail(0, {4, 2});
  REQUIRE_THROWS_AS(order_counterexample(f, f, 10), waning::NoWitness);
  REQUIRE_THROWS_AS(order_counterexample(WaningFn::zero(), WaningFn::tail(0, {1}), 1),
                    waning::PreconditionError);
}

TEST_CASE("order witness membership facts", "[witnesses][property]") {
  std::vector<WaningFn> fs = {WaningFn::zero(),          WaningFn::tail(0, {1}),
                              WaningFn::tail(0, {2, 1}), WaningFn::tail(0, {3}),
                              WaningFn::tail(1, {2}),    WaningFn::tail(2, {4, 1}),
                              WaningFn::const_omega()};
  for (auto const& f : fs) {
    for (auto const& g : fs) {
      if (preceq(f, g)) {
        REQUIRE_THROWS_AS(order_counterexample(f, g, 100), waning::NoWitness);
        continue;
      }
      auto const v = least_violation(f, g);
      REQUIRE(v.has_value());
      for (Nat r = v->b + 1; r < v->b + 4; ++r) {
        auto const w  = order_counterexample(f, g, r);
        auto const id = PartialBijection::identity(w.n);
        REQUIRE(SetDescriptor::w_nbhd(g, id, r).contains(w.h));
        REQUIRE_FALSE(SetDescriptor::w_nbhd(f, id, w.b).contains(w.h));
      }
    }
  }
}

TEST_CASE("cover_witness examples", "[witnesses]") {
  std::vector<Nat> const upto9{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  REQUIRE(cover_witness(0, {}, {}, upto9, true) == PartialBijection{{0, 10}});
  REQUIRE(cover_witness(1, {{0, 1}}, {2}, upto9, true) == PartialBijection{{0, 1}, {1, 10}});
  REQUIRE(cover_witness(2, {{0, 3}}, {1}, {}, false) == PartialBijection{{0, 3}});
  REQUIRE(cover_witness(1, {}, {0, 3}, {1}, true) == PartialBijection{{1, 2}});
  REQUIRE_THROWS_AS(cover_witness(1, {{1, 0}}, {}, {}, true), waning::BadBase);
  REQUIRE_THROWS_AS(cover_witness(1, {{0, 2}}, {2}, {}, true), waning::BadBase);
}

#include <random>  // for mt19937_64
#include <string>  // for string

#include "catch_amalgamated.hpp"

#include "waning/io.hpp"
#include "waning/universe.hpp"

using waning::GenFn;
using waning::omega;
using waning::PartialBijection;
using waning::SetDescriptor;
using waning::WaningFn;
namespace io = waning::io;

TEST_CASE("value forms", "[io]") {
  REQUIRE(io::to_json(omega).dump() == R"("omega")");
  REQUIRE(io::to_json(waning::ExtNat(4)).dump() == "4");
  REQUIRE(io::to_json(PartialBijection{{3, 1}, {0, 5}}).dump() == "[[0,5],[3,1]]");
  REQUIRE(io::to_json(WaningFn::const_omega()).dump() == R"({"const":"omega"})");
  REQUIRE(io::to_json(WaningFn::tail(2, {3, 1})).dump() == R"({"omega_prefix":2,"drops":[3,1]})");
  REQUIRE(io::to_json(GenFn{{5, omega}, 0, omega}).dump()
          == R"({"prefix":[5,"omega"],"tail":0,"omega":"omega"})");
  REQUIRE(io::to_json(waning::PolishTopology::dual(WaningFn::tail(0, {1}))).dump()
          == R"({"dual":{"omega_prefix":0,"drops":[1]}})");
}

TEST_CASE("parsing", "[io]") {
  auto const f = io::gen_fn_from_json(io::parse(R"({"prefix":[5,5,5],"tail":0,"omega":0})"));
  REQUIRE(closure(f) == WaningFn::tail(0, {5, 4, 3}));
  REQUIRE(io::waning_from_json(io::parse(R"({"const":"omega"})")) == WaningFn::const_omega());
  REQUIRE(io::nat_set_from_json(io::parse("[3,1,3]")) == std::vector<waning::Nat>{1, 3});
  REQUIRE(io::topology_from_json(io::parse(R"({"dual":{"omega_prefix":0,"drops":[]}})")).is_i4());
}

TEST_CASE("malformed input", "[io]") {
  REQUIRE_THROWS_AS(io::parse("{"), waning::FormatError);
  REQUIRE_THROWS_AS(io::ext_nat_from_json(io::parse(R"("infinity")")), waning::FormatError);
  REQUIRE_THROWS_AS(io::nat_from_json(io::parse("-1")), waning::FormatError);
  REQUIRE_THROWS_AS(io::nat_from_json(io::parse("1.5")), waning::FormatError);
  REQUIRE_THROWS_AS(io::pb_from_json(io::parse("[[0,1,2]]")), waning::FormatError);
  REQUIRE_THROWS_AS(io::pb_from_json(io::parse("[[0,1],[0,2]]")), waning::DomainError);
  REQUIRE_THROWS_AS(io::waning_from_json(io::parse(R"({"omega_prefix":0,"drops":[1,2]})")),
                    waning::NotWaning);
  REQUIRE_THROWS_AS(io::topology_from_json(io::parse("{}")), waning::FormatError);
  REQUIRE_THROWS_AS(io::descriptor_from_json(io::parse(R"({"nope":1})")), waning::FormatError);
  REQUIRE_THROWS_AS(io::descriptor_from_json(io::parse(R"({"dom_miss":1,"im_miss":2})")),
                    waning::FormatError);
}

TEST_CASE("descriptors round-trip with identical membership", "[io][property]") {
  waning::BoundedUniverse const universe(3);
  std::vector<SetDescriptor>    ds = {
      SetDescriptor::point_hit(0, 1),
      SetDescriptor::dom_miss(2),
      SetDescriptor::im_miss(0),
      SetDescriptor::u_basic(WaningFn::tail(0, {2, 1}), 1, {0}),
      SetDescriptor::u_basic(GenFn{{omega, 1}, 0, 0}, 1, {1, 2}),
      SetDescriptor::w_nbhd(WaningFn::tail(0, {1}), {{0, 1}}, 1),
      SetDescriptor::wany(1, {{0}, {1, 2}}),
      SetDescriptor::fix_below({{1, 1}}, 2)};
  ds.push_back(SetDescriptor::dual(ds[3]));
  ds.push_back(SetDescriptor::intersection({ds[0], ds[6], SetDescriptor::dual(ds[5])}));
  for (auto const& d : ds) {
    auto const text = io::to_json(d).dump();
    auto const back = io::descriptor_from_json(io::parse(text));
    REQUIRE(io::to_json(back).dump() == text);
    for (auto const& h : universe.elements()) {
      REQUIRE(back.contains(h) == d.contains(h));
    }
  }
}

TEST_CASE("functions round-trip", "[io][property]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    GenFn f;
    for (int i = 0, len = rng() % 5; i < len; ++i) {
      f.prefix.push_back(rng() % 5 == 0 ? omega : waning::ExtNat(rng() % 9));
    }
    f.tail     = rng() % 3 == 0 ? omega : waning::ExtNat(rng() % 3);
    f.at_omega = rng() % 2 == 0 ? omega : waning::ExtNat(0);
    REQUIRE(io::to_json(io::gen_fn_from_json(io::to_json(f))) == io::to_json(f));
    auto const c = closure(f);
    REQUIRE(io::waning_from_json(io::to_json(c)) == c);
  }
}

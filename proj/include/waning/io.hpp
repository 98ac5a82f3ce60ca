#pragma once

#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "json.hpp"

#include "waning/descriptors.hpp"
#include "waning/errors.hpp"
#include "waning/ext_nat.hpp"
#include "waning/partial_bijection.hpp"
#include "waning/topology.hpp"
#include "waning/waning_function.hpp"

// JSON forms of every value type.  Output uses insertion-ordered objects so
// the printed key order is fixed.
//
//   ExtNat     3 | "omega"
//   FinPB      [[0,5],[3,1]]
//   WaningFn   {"const":"omega"} | {"omega_prefix":k,"drops":[...]}
//   GenFn      {"prefix":[...],"tail":v,"omega":v}
//   Topology   {"direct":W} | {"dual":W}
//   Descriptor {"hit":{"x":..,"y":..}} {"dom_miss":x} {"im_miss":x}
//              {"U":{"f":..,"n":..,"X":[..]}} {"W":{"f":..,"g":..,"r":..}}
//              {"wany":{"n":..,"Ys":[[..],..]}} {"dual":D} {"and":[D,..]}
//              {"fix":{"g":..,"r":..}}

namespace waning::io {

  using Json = nlohmann::ordered_json;

  inline Json parse(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what());
    }
  }

  namespace detail {
    inline Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field \"") + key + "\" in " + j.dump());
      }
      return j.at(key);
    }
  }  // namespace detail

  inline Nat nat_from_json(Json const& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
      throw FormatError("expected a natural number, got " + j.dump());
    }
    return j.get<Nat>();
  }

  inline Json to_json(ExtNat x) {
    return x.is_omega() ? Json("omega") : Json(x.value());
  }

  inline ExtNat ext_nat_from_json(Json const& j) {
    if (j.is_string()) {
      if (j.get<std::string>() != "omega") {
        throw FormatError("the only non-numeric value is \"omega\", got " + j.dump());
      }
      return omega;
    }
    return ExtNat(nat_from_json(j));
  }

  inline std::vector<Nat> nat_set_from_json(Json const& j) {
    if (!j.is_array()) {
      throw FormatError("expected an array of naturals, got " + j.dump());
    }
    std::vector<Nat> out;
    for (auto const& x : j) {
      out.push_back(nat_from_json(x));
    }
    return make_set(std::move(out));
  }

  inline Json nat_set_to_json(std::vector<Nat> const& xs) {
    Json j = Json::array();
    for (Nat x : xs) {
      j.push_back(x);
    }
    return j;
  }

  inline Json to_json(PartialBijection const& g) {
    Json j = Json::array();
    for (auto const& [x, y] : g) {
      j.push_back(Json::array({x, y}));
    }
    return j;
  }

  inline PartialBijection pb_from_json(Json const& j) {
    if (!j.is_array()) {
      throw FormatError("expected an array of pairs, got " + j.dump());
    }
    std::vector<Pair> pairs;
    for (auto const& p : j) {
      if (!p.is_array() || p.size() != 2) {
        throw FormatError("expected a two-element array, got " + p.dump());
      }
      pairs.emplace_back(nat_from_json(p[0]), nat_from_json(p[1]));
    }
    return PartialBijection(std::move(pairs));
  }

  inline Json to_json(WaningFn const& f) {
    Json j = Json::object();
    if (f.is_const_omega()) {
      j["const"] = "omega";
      return j;
    }
    j["omega_prefix"] = f.omega_prefix();
    Json drops        = Json::array();
    for (Nat d : f.drops()) {
      drops.push_back(d);
    }
    j["drops"] = std::move(drops);
    return j;
  }

  inline WaningFn waning_from_json(Json const& j) {
    if (j.is_object() && j.contains("const")) {
      if (j.at("const") != "omega") {
        throw FormatError("unknown constant waning function " + j.dump());
      }
      return WaningFn::const_omega();
    }
    Nat        prefix = nat_from_json(detail::field(j, "omega_prefix"));
    auto const& d     = detail::field(j, "drops");
    if (!d.is_array()) {
      throw FormatError("drops must be an array");
    }
    std::vector<Nat> drops;
    for (auto const& x : d) {
      drops.push_back(nat_from_json(x));
    }
    return WaningFn::tail(prefix, std::move(drops));
  }

  inline Json to_json(GenFn const& f) {
    Json j      = Json::object();
    Json prefix = Json::array();
    for (ExtNat x : f.prefix) {
      prefix.push_back(to_json(x));
    }
    j["prefix"] = std::move(prefix);
    j["tail"]   = to_json(f.tail);
    j["omega"]  = to_json(f.at_omega);
    return j;
  }

  inline GenFn gen_fn_from_json(Json const& j) {
    GenFn       f;
    auto const& prefix = detail::field(j, "prefix");
    if (!prefix.is_array()) {
      throw FormatError("prefix must be an array");
    }
    for (auto const& x : prefix) {
      f.prefix.push_back(ext_nat_from_json(x));
    }
    f.tail     = ext_nat_from_json(detail::field(j, "tail"));
    f.at_omega = ext_nat_from_json(detail::field(j, "omega"));
    return f;
  }

  // A GenFn is recognised by its "prefix" key; anything else is a WaningFn.
  inline AnyFn any_fn_from_json(Json const& j) {
    if (j.is_object() && j.contains("prefix")) {
      return gen_fn_from_json(j);
    }
    return waning_from_json(j);
  }

  inline Json to_json(AnyFn const& f) {
    return std::visit([](auto const& g) { return to_json(g); }, f);
  }

  inline Json to_json(PolishTopology const& t) {
    Json j = Json::object();
    j[t.family() == PolishTopology::Family::direct ? "direct" : "dual"] = to_json(t.function());
    return j;
  }

  inline PolishTopology topology_from_json(Json const& j) {
    if (j.is_object() && j.contains("direct")) {
      return PolishTopology::direct(waning_from_json(j.at("direct")));
    }
    if (j.is_object() && j.contains("dual")) {
      return PolishTopology::dual(waning_from_json(j.at("dual")));
    }
    throw FormatError("expected {\"direct\":..} or {\"dual\":..}, got " + j.dump());
  }

  inline Json to_json(SetDescriptor const& d);

  namespace detail {
    struct DescriptorToJson {
      Json operator()(descriptor::PointHit const& d) const {
        Json inner = Json::object();
        inner["x"] = d.x;
        inner["y"] = d.y;
        return Json{{"hit", inner}};
      }

      Json operator()(descriptor::DomMiss const& d) const {
        return Json{{"dom_miss", d.x}};
      }

      Json operator()(descriptor::ImMiss const& d) const {
        return Json{{"im_miss", d.x}};
      }

      Json operator()(descriptor::UBasic const& d) const {
        Json inner = Json::object();
        inner["f"] = to_json(d.f);
        inner["n"] = d.n;
        inner["X"] = nat_set_to_json(d.marked);
        return Json{{"U", inner}};
      }

      Json operator()(descriptor::WNbhd const& d) const {
        Json inner = Json::object();
        inner["f"] = to_json(d.f);
        inner["g"] = to_json(d.g);
        inner["r"] = d.r;
        return Json{{"W", inner}};
      }

      Json operator()(descriptor::Wany const& d) const {
        Json inner = Json::object();
        inner["n"] = d.n;
        Json ys    = Json::array();
        for (auto const& y : d.avoid) {
          ys.push_back(nat_set_to_json(y));
        }
        inner["Ys"] = std::move(ys);
        return Json{{"wany", inner}};
      }

      Json operator()(descriptor::Dual const& d) const {
        return Json{{"dual", to_json(*d.inner)}};
      }

      Json operator()(descriptor::Intersection const& d) const {
        Json parts = Json::array();
        for (auto const& p : d.parts) {
          parts.push_back(to_json(p));
        }
        return Json{{"and", std::move(parts)}};
      }

      Json operator()(descriptor::FixBelow const& d) const {
        Json inner = Json::object();
        inner["g"] = to_json(d.g);
        inner["r"] = d.r;
        return Json{{"fix", inner}};
      }
    };
  }  // namespace detail

  inline Json to_json(SetDescriptor const& d) {
    return std::visit(detail::DescriptorToJson{}, d.node());
  }

  inline SetDescriptor descriptor_from_json(Json const& j) {
    if (!j.is_object() || j.size() != 1) {
      throw FormatError("a descriptor is a single-key object, got " + j.dump());
    }
    auto const        it   = j.begin();
    std::string const tag  = it.key();
    Json const&       body = it.value();
    if (tag == "hit") {
      return SetDescriptor::point_hit(nat_from_json(detail::field(body, "x")),
                                      nat_from_json(detail::field(body, "y")));
    }
    if (tag == "dom_miss") {
      return SetDescriptor::dom_miss(nat_from_json(body));
    }
    if (tag == "im_miss") {
      return SetDescriptor::im_miss(nat_from_json(body));
    }
    if (tag == "U") {
      return SetDescriptor::u_basic(any_fn_from_json(detail::field(body, "f")),
                                    nat_from_json(detail::field(body, "n")),
                                    nat_set_from_json(detail::field(body, "X")));
    }
    if (tag == "W") {
      return SetDescriptor::w_nbhd(waning_from_json(detail::field(body, "f")),
                                   pb_from_json(detail::field(body, "g")),
                                   nat_from_json(detail::field(body, "r")));
    }
    if (tag == "wany") {
      auto const& ys = detail::field(body, "Ys");
      if (!ys.is_array()) {
        throw FormatError("Ys must be an array of sets");
      }
      std::vector<std::vector<Nat>> avoid;
      for (auto const& y : ys) {
        avoid.push_back(nat_set_from_json(y));
      }
      return SetDescriptor::wany(nat_from_json(detail::field(body, "n")), std::move(avoid));
    }
    if (tag == "dual") {
      return SetDescriptor::dual(descriptor_from_json(body));
    }
    if (tag == "and") {
      if (!body.is_array()) {
        throw FormatError("\"and\" takes an array of descriptors");
      }
      std::vector<SetDescriptor> parts;
      for (auto const& p : body) {
        parts.push_back(descriptor_from_json(p));
      }
      return SetDescriptor::intersection(std::move(parts));
    }
    if (tag == "fix") {
      return SetDescriptor::fix_below(pb_from_json(detail::field(body, "g")),
                                      nat_from_json(detail::field(body, "r")));
    }
    throw FormatError("unknown descriptor tag \"" + tag + "\"");
  }

}  // namespace waning::io

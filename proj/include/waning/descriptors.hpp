#pragma once

#include <algorithm>  // for all_of, any_of, equal, sort, unique
#include <cstddef>    // for size_t
#include <memory>     // for shared_ptr, make_shared
#include <string>     // for string
#include <utility>    // for move
#include <variant>    // for variant, visit, holds_alternative
#include <vector>     // for vector

#include "waning/errors.hpp"
#include "waning/ext_nat.hpp"
#include "waning/partial_bijection.hpp"
#include "waning/waning_function.hpp"

namespace waning {

  using NatSet = std::vector<Nat>;  // sorted, no duplicates

  inline NatSet make_set(std::vector<Nat> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  // {0, ..., n - 1}
  inline NatSet initial_segment(Nat n) {
    NatSet out(n);
    for (Nat i = 0; i < n; ++i) {
      out[i] = i;
    }
    return out;
  }

  inline bool same_below(PartialBijection const& h, PartialBijection const& g, Nat r) {
    auto hb = h.begin(), he = std::lower_bound(h.begin(), h.end(), Pair{r, 0});
    auto gb = g.begin(), ge = std::lower_bound(g.begin(), g.end(), Pair{r, 0});
    return std::equal(hb, he, gb, ge);
  }

  // The condition under which W_{f,g,r} is defined:
  // f(r) <= f(|g|) = f(|g restricted to r|).
  inline bool is_valid_r(WaningFn const& f, PartialBijection const& g, Nat r) {
    ExtNat full = f(g.size());
    return f(r) <= full && full == f(restrict_below(g, r).size());
  }

  class SetDescriptor;

  namespace descriptor {
    // U_{x,y}: (x, y) in h.
    struct PointHit {
      Nat x;
      Nat y;
    };

    // W_x: x not in dom(h).
    struct DomMiss {
      Nat x;
    };

    // W_x^-1: x not in im(h).
    struct ImMiss {
      Nat x;
    };

    // U_{f,n,X}: |im(h) \ X| >= n and |X n im(h)| <= f(n).
    struct UBasic {
      AnyFn  f;
      Nat    n;
      NatSet marked;
    };

    // W_{f,g,r}: h agrees with g below r and
    // |im(h) n (r \ im(g))| <= f(|g|).
    struct WNbhd {
      WaningFn         f;
      PartialBijection g;
      Nat              r;
      NatSet           g_image;
    };

    // N_{n,Ys}: dom(h) misses {0..n-1} and im(h) misses some Y in Ys.
    struct Wany {
      Nat                 n;
      std::vector<NatSet> avoid;
    };

    // {h : h^-1 in inner}
    struct Dual {
      std::shared_ptr<SetDescriptor const> inner;
    };

    struct Intersection {
      std::vector<SetDescriptor> parts;
    };

    // {h : h restricted to r = g restricted to r}
    struct FixBelow {
      PartialBijection g;
      Nat              r;
    };

    using Node
        = std::variant<PointHit, DomMiss, ImMiss, UBasic, WNbhd, Wany, Dual, Intersection, FixBelow>;
  }  // namespace descriptor

  // A symbolic subset of I_N with an exact membership predicate on finite
  // partial bijections.  Immutable once built; the factories validate.
  class SetDescriptor {
   public:
    using Node = descriptor::Node;

    static SetDescriptor point_hit(Nat x, Nat y) {
      return SetDescriptor(descriptor::PointHit{x, y});
    }

    static SetDescriptor dom_miss(Nat x) {
      return SetDescriptor(descriptor::DomMiss{x});
    }

    static SetDescriptor im_miss(Nat x) {
      return SetDescriptor(descriptor::ImMiss{x});
    }

    static SetDescriptor u_basic(AnyFn f, Nat n, std::vector<Nat> marked) {
      return SetDescriptor(descriptor::UBasic{std::move(f), n, make_set(std::move(marked))});
    }

    static SetDescriptor w_nbhd(WaningFn f, PartialBijection g, Nat r) {
      if (!is_valid_r(f, g, r)) {
        throw InvalidDescriptor("W_{f,g,r} undefined: r = " + std::to_string(r)
                                + " violates f(r) <= f(|g|) = f(|g|r|) for g = "
                                + g.to_string());
      }
      NatSet im = g.image();
      return SetDescriptor(descriptor::WNbhd{std::move(f), std::move(g), r, std::move(im)});
    }

    static SetDescriptor wany(Nat n, std::vector<std::vector<Nat>> avoid) {
      if (avoid.empty()) {
        throw InvalidDescriptor("wany set needs a non-empty family");
      }
      std::vector<NatSet> sets;
      sets.reserve(avoid.size());
      for (auto& y : avoid) {
        sets.push_back(make_set(std::move(y)));
      }
      return SetDescriptor(descriptor::Wany{n, std::move(sets)});
    }

    static SetDescriptor dual(SetDescriptor inner) {
      return SetDescriptor(
          descriptor::Dual{std::make_shared<SetDescriptor const>(std::move(inner))});
    }

    static SetDescriptor intersection(std::vector<SetDescriptor> parts) {
      return SetDescriptor(descriptor::Intersection{std::move(parts)});
    }

    static SetDescriptor fix_below(PartialBijection g, Nat r) {
      return SetDescriptor(descriptor::FixBelow{std::move(g), r});
    }

    Node const& node() const noexcept {
      return node_;
    }

    template <typename T>
    bool is() const noexcept {
      return std::holds_alternative<T>(node_);
    }

    template <typename T>
    T const& as() const {
      return std::get<T>(node_);
    }

    bool contains(PartialBijection const& h) const;

   private:
    explicit SetDescriptor(Node node) : node_(std::move(node)) {}

    Node node_;
  };

  namespace detail {
    struct MemberVisitor {
      PartialBijection const& h;

      bool operator()(descriptor::PointHit const& d) const {
        return h.contains(Pair{d.x, d.y});
      }

      bool operator()(descriptor::DomMiss const& d) const {
        return !h.in_domain(d.x);
      }

      bool operator()(descriptor::ImMiss const& d) const {
        return !h.in_image(d.x);
      }

      bool operator()(descriptor::UBasic const& d) const {
        Nat inside = 0;
        for (auto const& p : h) {
          inside += std::binary_search(d.marked.begin(), d.marked.end(), p.second) ? 1 : 0;
        }
        Nat outside = h.size() - inside;
        return outside >= d.n && ExtNat(inside) <= eval(d.f, ExtNat(d.n));
      }

      bool operator()(descriptor::WNbhd const& d) const {
        if (!same_below(h, d.g, d.r)) {
          return false;
        }
        Nat extra = 0;
        for (auto const& p : h) {
          if (p.second < d.r
              && !std::binary_search(d.g_image.begin(), d.g_image.end(), p.second)) {
            ++extra;
          }
        }
        return ExtNat(extra) <= d.f(d.g.size());
      }

      bool operator()(descriptor::Wany const& d) const {
        if (!h.empty() && h.begin()->first < d.n) {
          return false;
        }
        return std::any_of(d.avoid.begin(), d.avoid.end(), [this](NatSet const& y) {
          return std::none_of(h.begin(), h.end(), [&y](Pair const& p) {
            return std::binary_search(y.begin(), y.end(), p.second);
          });
        });
      }

      bool operator()(descriptor::Dual const& d) const {
        return d.inner->contains(invert(h));
      }

      bool operator()(descriptor::Intersection const& d) const {
        return std::all_of(d.parts.begin(), d.parts.end(), [this](SetDescriptor const& part) {
          return part.contains(h);
        });
      }

      bool operator()(descriptor::FixBelow const& d) const {
        return same_below(h, d.g, d.r);
      }
    };
  }  // namespace detail

  inline bool SetDescriptor::contains(PartialBijection const& h) const {
    return std::visit(detail::MemberVisitor{h}, node_);
  }

  inline bool member(SetDescriptor const& d, PartialBijection const& h) {
    return d.contains(h);
  }

}  // namespace waning

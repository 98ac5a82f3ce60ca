#pragma once

#include <algorithm>  // for max, binary_search
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "waning/descriptors.hpp"
#include "waning/errors.hpp"
#include "waning/ext_nat.hpp"
#include "waning/partial_bijection.hpp"
#include "waning/waning_function.hpp"

// Constructive witnesses: the explicit sets and numbers built in the proofs
// that the topologies T_f are Polish semigroup topologies ordered by preceq.

namespace waning {

  // Smallest r for which W_{f,g,r} is defined.  Validity is upward closed, so
  // every p >= the result is valid as well.
  inline Nat valid_r_min(WaningFn const& f, PartialBijection const& g) {
    Nat const last = g.empty() ? 0 : g.pairs().back().first + 1;
    for (Nat r = 0; r < last; ++r) {
      if (is_valid_r(f, g, r)) {
        return r;
      }
    }
    // r beyond dom(g): |g|r| = |g| and r >= |g|, so f(r) <= f(|g|).
    return last;
  }

  // r with W_{f,g,r} contained in U_{f,n,X}, for g in U_{f,n,X}: r exceeds X,
  // g|r already has n image points outside X, and r is valid.
  inline Nat basis_refinement(WaningFn const&         f,
                              Nat                     n,
                              std::vector<Nat> const& marked,
                              PartialBijection const& g) {
    auto u = SetDescriptor::u_basic(f, n, marked);
    if (!u.contains(g)) {
      throw NotMember(g.to_string() + " is not in U_{f,n,X}");
    }
    NatSet const X = make_set(marked);
    Nat          r = X.empty() ? 0 : X.back() + 1;
    r              = std::max(r, valid_r_min(f, g));
    auto outside   = [&](Nat bound) {
      Nat count = 0;
      for (auto const& [s, t] : g) {
        if (s < bound && !std::binary_search(X.begin(), X.end(), t)) {
          ++count;
        }
      }
      return count;
    };
    while (outside(r) < n) {
      ++r;
    }
    return r;
  }

  // A T_f-open set equal to W_{f',g,r}: FixBelow(g, r) n U_{f,j,X} with
  // X = (r \ im g) u Z, Z the |g|r| - b smallest points of im(g|r).
  inline SetDescriptor much_wan_witness(GenFn const& f, PartialBijection const& g, Nat r) {
    WaningFn const fp = closure(f);
    if (!is_valid_r(fp, g, r)) {
      throw PreconditionError("much_wan_witness: r = " + std::to_string(r)
                              + " is not valid for the closure and " + g.to_string());
    }
    if (fp(g.size()).is_omega()) {
      return SetDescriptor::fix_below(g, r);
    }
    PartialBijection const below = restrict_below(g, r);
    Nat const              k     = below.size();
    long long const        fk    = static_cast<long long>(fp(k).value());

    std::optional<Nat> j;
    for (Nat i = 0; i <= k && !j; ++i) {
      ExtNat fi = f(i);
      if (fi.is_finite()
          && static_cast<long long>(fi.value()) - static_cast<long long>(k - i) <= fk) {
        j = i;
      }
    }
    if (!j) {
      throw std::logic_error("much_wan_witness: no index realises the closure value");
    }
    Nat const fj = f(*j).value();
    Nat const b  = static_cast<Nat>(fk + static_cast<long long>(k) - static_cast<long long>(fj));

    std::vector<Nat> marked;
    NatSet const     g_image = g.image();
    for (Nat y = 0; y < r; ++y) {
      if (!std::binary_search(g_image.begin(), g_image.end(), y)) {
        marked.push_back(y);
      }
    }
    NatSet const smallest = below.image();
    for (Nat i = 0; i < k - b; ++i) {
      marked.push_back(smallest[i]);
    }
    std::vector<SetDescriptor> parts;
    parts.push_back(SetDescriptor::fix_below(g, r));
    parts.push_back(SetDescriptor::u_basic(f, *j, std::move(marked)));
    return SetDescriptor::intersection(std::move(parts));
  }

  // A T_{f'}-basic set D with g in D contained in U_{f,n,X}.
  inline SetDescriptor tfprime_refinement(GenFn const&            f,
                                          Nat                     n,
                                          std::vector<Nat> const& marked,
                                          PartialBijection const& g) {
    if (!SetDescriptor::u_basic(f, n, marked).contains(g)) {
      throw NotMember(g.to_string() + " is not in U_{f,n,X}");
    }
    WaningFn const fp = closure(f);
    if (fp(g.size()) > ExtNat(0)) {
      return SetDescriptor::u_basic(fp, n, marked);
    }
    NatSet const X = make_set(marked);
    Nat          r = valid_r_min(fp, g);
    if (!X.empty()) {
      r = std::max(r, X.back() + 1);
    }
    Nat taken = 0;
    for (auto const& [s, t] : g) {
      bool const in_x = std::binary_search(X.begin(), X.end(), t);
      if (in_x) {
        r = std::max(r, s + 1);
      } else if (taken < n) {
        r = std::max(r, s + 1);
        ++taken;
      }
    }
    return SetDescriptor::w_nbhd(fp, g, r);
  }

  // Smallest positive p that is valid for a and for b and exceeds (x)a and
  // (y)b^-1 for x, y <= r.  Then W_{f,a,p} W_{f,b,p} lies in W_{f,ab,r}.
  inline Nat continuity_p(WaningFn const&         f,
                          PartialBijection const& a,
                          PartialBijection const& b,
                          Nat                     r) {
    if (!is_valid_r(f, compose(a, b), r)) {
      throw InvalidR("r = " + std::to_string(r) + " is not valid for the product");
    }
    Nat p = std::max<Nat>({1, valid_r_min(f, a), valid_r_min(f, b)});
    for (auto const& [x, y] : a) {
      if (x <= r) {
        p = std::max(p, y + 1);
      }
    }
    for (auto const& [x, y] : b) {
      if (y <= r) {
        p = std::max(p, x + 1);
      }
    }
    return p;
  }

  struct OrderViolation {
    Nat n;
    Nat b;
  };

  // Least n with f(n) < g(n), with the least b having f(n) < b - n <= g(n).
  inline std::optional<OrderViolation> least_violation(WaningFn const& f, WaningFn const& g) {
    Nat const bound = std::max(f.omega_prefix() + f.drops().size(),
                               g.omega_prefix() + g.drops().size());
    for (Nat n = 0; n <= bound; ++n) {
      if (f(n) < g(n)) {
        return OrderViolation{n, n + f(n).value() + 1};
      }
    }
    return std::nullopt;
  }

  struct OrderWitness {
    Nat              n;
    Nat              b;
    PartialBijection h;
  };

  // h = id_n u {(r + i, n + i) : i < b - n}, which lies in W_{g,id_n,r} but
  // not in W_{f,id_n,b}, so T_f is not contained in T_g.
  inline OrderWitness order_counterexample(WaningFn const& f, WaningFn const& g, Nat r) {
    auto v = least_violation(f, g);
    if (!v) {
      throw NoWitness("f(n) >= g(n) for all n, so T_f is contained in T_g");
    }
    if (r <= v->b) {
      throw PreconditionError("order_counterexample needs r > " + std::to_string(v->b));
    }
    std::vector<Pair> pairs;
    for (Nat x = 0; x < v->n; ++x) {
      pairs.emplace_back(x, x);
    }
    for (Nat i = 0; i < v->b - v->n; ++i) {
      pairs.emplace_back(r + i, v->n + i);
    }
    return OrderWitness{v->n, v->b, PartialBijection(std::move(pairs))};
  }

  // An element of U = {f : f|n = h0, im(f) n X = {}} outside the listed members
  // {f : (n)f = m}, m in covered, and, if includes_dom_miss, outside
  // {f : n not in dom f}.
  inline PartialBijection cover_witness(Nat                     n,
                                        PartialBijection const& h0,
                                        std::vector<Nat> const& marked,
                                        std::vector<Nat> const& covered,
                                        bool                    includes_dom_miss) {
    NatSet const X = make_set(marked);
    for (auto const& [s, t] : h0) {
      if (s >= n) {
        throw BadBase("base map " + h0.to_string() + " is not defined inside n");
      }
      if (std::binary_search(X.begin(), X.end(), t)) {
        throw BadBase("base map " + h0.to_string() + " meets X");
      }
    }
    if (!includes_dom_miss) {
      return h0;
    }
    NatSet const cov = make_set(covered);
    Nat          v   = 0;
    while (std::binary_search(X.begin(), X.end(), v) || h0.in_image(v)
           || std::binary_search(cov.begin(), cov.end(), v)) {
      ++v;
    }
    std::vector<Pair> pairs(h0.begin(), h0.end());
    pairs.emplace_back(n, v);
    return PartialBijection(std::move(pairs));
  }

}  // namespace waning

#pragma once

#include <algorithm>  // for max, min, sort, unique
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <random>     // for mt19937_64
#include <set>        // for set
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "waning/descriptors.hpp"
#include "waning/errors.hpp"
#include "waning/io.hpp"
#include "waning/partial_bijection.hpp"
#include "waning/poset.hpp"
#include "waning/topology.hpp"
#include "waning/universe.hpp"
#include "waning/waning_function.hpp"
#include "waning/witnesses.hpp"

// Invariant batteries over bounded universes.  Each suite is deterministic in
// (bound, seed, sample); the worker count only changes wall time.

namespace waning {

  struct SuiteOptions {
    std::optional<Nat> bound;
    Nat                seed = 1;
    std::optional<Nat> sample;
    unsigned           jobs = 1;
  };

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {"basis",
                                                   "much-wan",
                                                   "continuity",
                                                   "order",
                                                   "remark",
                                                   "dual",
                                                   "d-map",
                                                   "census",
                                                   "chains",
                                                   "embed",
                                                   "compactness",
                                                   "closure"};
    return names;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Fixed samples
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Strictly decreasing sequences with entries in [1, max_value] and length
    // at most max_len, in lexicographic order.
    inline void decreasing_sequences(Nat                            max_value,
                                     Nat                            max_len,
                                     std::vector<Nat>&              current,
                                     std::vector<std::vector<Nat>>& out) {
      out.push_back(current);
      if (current.size() == max_len) {
        return;
      }
      Nat const hi = current.empty() ? max_value : current.back() - 1;
      for (Nat v = 1; v <= hi; ++v) {
        current.push_back(v);
        decreasing_sequences(max_value, max_len, current, out);
        current.pop_back();
      }
    }

    inline std::vector<WaningFn> omega_free_family(Nat max_value, Nat max_support) {
      std::vector<std::vector<Nat>> seqs;
      std::vector<Nat>              current;
      decreasing_sequences(max_value, max_support, current, seqs);
      std::vector<WaningFn> out;
      for (auto& s : seqs) {
        out.push_back(WaningFn::tail(0, std::move(s)));
      }
      return out;
    }
  }  // namespace detail

  // ConstOmega, two leading-omega forms, and every Omega-free waning function
  // with support <= 3 and values <= 5.
  inline std::vector<WaningFn> waning_family() {
    std::vector<WaningFn> out = {WaningFn::const_omega(),
                                 WaningFn::tail(1, {2, 1}),
                                 WaningFn::tail(2, {})};
    for (auto& f : detail::omega_free_family(5, 3)) {
      out.push_back(std::move(f));
    }
    return out;
  }

  // The first `count` functions of waning_family() followed by a fixed
  // extension (larger Omega-free functions, then more leading-omega forms).
  inline std::vector<WaningFn> waning_sample(size_t count) {
    std::vector<WaningFn> out = waning_family();
    std::set<WaningFn>    seen(out.begin(), out.end());
    auto                  add = [&](WaningFn f) {
      if (out.size() < count && seen.insert(f).second) {
        out.push_back(std::move(f));
      }
    };
    for (auto& f : detail::omega_free_family(7, 4)) {
      add(std::move(f));
    }
    for (Nat k = 1; k <= 4; ++k) {
      for (auto& f : detail::omega_free_family(4, 2)) {
        add(WaningFn::tail(k, std::vector<Nat>(f.drops().begin(), f.drops().end())));
      }
    }
    out.resize(std::min(out.size(), count));
    return out;
  }

  namespace detail {
    using Rng = std::mt19937_64;

    inline Nat below(Rng& rng, Nat n) {
      return n == 0 ? 0 : rng() % n;
    }

    inline std::vector<Nat> random_subset(Rng& rng, Nat bound) {
      std::vector<Nat> out;
      for (Nat i = 0; i < bound; ++i) {
        if (rng() & 1) {
          out.push_back(i);
        }
      }
      return out;
    }

    inline ExtNat random_value(Rng& rng) {
      Nat v = below(rng, 7);
      return v == 6 ? omega : ExtNat(v);
    }

    inline GenFn random_gen_fn(Rng& rng) {
      GenFn f;
      Nat   len = below(rng, 5);
      for (Nat i = 0; i < len; ++i) {
        f.prefix.push_back(random_value(rng));
      }
      f.tail     = below(rng, 5) == 0 ? omega : ExtNat(0);
      f.at_omega = below(rng, 2) == 0 ? omega : ExtNat(0);
      return f;
    }

    inline std::string describe(WaningFn const& f) {
      return io::to_json(f).dump();
    }

    inline std::string describe(GenFn const& f) {
      return io::to_json(f).dump();
    }

    inline std::string describe(std::vector<Nat> const& xs) {
      return io::nat_set_to_json(xs).dump();
    }

    inline void expect_subset(CheckReport&           report,
                              std::string const&     what,
                              SetDescriptor const&   lhs,
                              SetDescriptor const&   rhs,
                              BoundedUniverse const& universe) {
      auto r = subset_check(lhs, rhs, universe);
      report.cases += r.cases;
      for (auto& c : r.counterexamples) {
        report.fail(what, std::move(c.witness));
      }
    }

    inline void expect_equal(CheckReport&           report,
                             std::string const&     what,
                             SetDescriptor const&   lhs,
                             SetDescriptor const&   rhs,
                             BoundedUniverse const& universe) {
      auto r = equality_check(lhs, rhs, universe);
      report.cases += r.cases;
      for (auto& c : r.counterexamples) {
        report.fail(what + " (" + c.inputs + ")", std::move(c.witness));
      }
    }

    // Draws (n, X, g) with g in U_{f,n,X}; n is bounded by |im g \ X|.
    template <typename F>
    std::optional<std::pair<Nat, std::vector<Nat>>> draw_member(Rng&                    rng,
                                                                F const&                f,
                                                                PartialBijection const& g,
                                                                Nat                     bound) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        auto X      = random_subset(rng, bound);
        Nat  inside = 0;
        for (auto const& [s, t] : g) {
          inside += std::binary_search(X.begin(), X.end(), t) ? 1 : 0;
        }
        Nat n = below(rng, g.size() - inside + 1);
        if (ExtNat(inside) <= f(n)) {
          return std::make_pair(n, std::move(X));
        }
      }
      return std::nullopt;
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    inline void suite_basis(CheckReport& report, SuiteOptions const& opt) {
      BoundedUniverse const universe(opt.bound.value_or(5));
      Rng                   rng(opt.seed);
      auto const            family = waning_family();
      Nat const             cases  = opt.sample.value_or(200);
      for (Nat done = 0; done < cases;) {
        auto const& f = family[below(rng, family.size())];
        auto const& g = universe[below(rng, universe.size())];
        auto        m = draw_member(rng, f, g, universe.bound());
        if (!m) {
          continue;
        }
        ++done;
        auto const& [n, X] = *m;
        std::string const tag
            = "f=" + describe(f) + " n=" + std::to_string(n) + " X=" + describe(X) + " g=" + g.to_string();

        // Monotonicity of W_{f,g,.} in r.
        Nat const r = valid_r_min(f, g) + below(rng, 3);
        Nat const p = r + below(rng, 3);
        expect_subset(report,
                      "W_{f,g,p} in W_{f,g,r} " + tag + " r=" + std::to_string(r)
                          + " p=" + std::to_string(p),
                      SetDescriptor::w_nbhd(f, g, p),
                      SetDescriptor::w_nbhd(f, g, r),
                      universe);

        // Refinement of U_{f,n,X} to a basic neighbourhood of g.
        Nat const  rb = basis_refinement(f, n, X, g);
        auto const w  = SetDescriptor::w_nbhd(f, g, rb);
        if (!w.contains(g)) {
          report.fail("g not in its refinement " + tag, g);
        }
        expect_subset(report,
                      "W_{f,g,r} in U_{f,n,X} " + tag + " r=" + std::to_string(rb),
                      w,
                      SetDescriptor::u_basic(f, n, X),
                      universe);
      }
    }

    inline void suite_much_wan(CheckReport& report, SuiteOptions const& opt) {
      BoundedUniverse const universe(opt.bound.value_or(5));
      Rng                   rng(opt.seed);
      Nat const             cases = opt.sample.value_or(100);

      for (Nat i = 0; i < cases; ++i) {
        GenFn const f  = random_gen_fn(rng);
        auto const& g  = universe[below(rng, universe.size())];
        auto const  fp = closure(f);
        Nat const   r  = valid_r_min(fp, g) + below(rng, 3);
        std::string const tag
            = "f=" + describe(f) + " g=" + g.to_string() + " r=" + std::to_string(r);
        auto const d = much_wan_witness(f, g, r);
        if (!d.contains(g)) {
          report.fail("g not in much_wan set " + tag, g);
        }
        expect_equal(report,
                     "much_wan equals W_{f',g,r} " + tag,
                     d,
                     SetDescriptor::w_nbhd(fp, g, r),
                     universe);
      }

      for (Nat done = 0; done < cases;) {
        GenFn const f = random_gen_fn(rng);
        auto const& g = universe[below(rng, universe.size())];
        auto        m = draw_member(rng, f, g, universe.bound());
        if (!m) {
          continue;
        }
        ++done;
        auto const& [n, X] = *m;
        auto const        fp = closure(f);
        std::string const tag
            = "f=" + describe(f) + " n=" + std::to_string(n) + " X=" + describe(X) + " g=" + g.to_string();
        auto const d = tfprime_refinement(f, n, X, g);
        if (!d.contains(g)) {
          report.fail("g not in T_{f'} refinement " + tag, g);
        }
        expect_subset(report, "T_{f'} refinement in U_{f,n,X} " + tag, d,
                      SetDescriptor::u_basic(f, n, X), universe);

        // Zero lemma: |im g \ X| >= n and |X n im g| >= f'(n) force f'(|g|) = 0.
        for (auto const& h : universe.elements()) {
          Nat inside = 0;
          for (auto const& [s, t] : h) {
            inside += std::binary_search(X.begin(), X.end(), t) ? 1 : 0;
          }
          ++report.cases;
          if (!fp.is_const_omega() && h.size() - inside >= n && ExtNat(inside) >= fp(n)
              && fp(h.size()) != ExtNat(0)) {
            report.fail("zero lemma f'=" + describe(fp) + " n=" + std::to_string(n)
                            + " X=" + describe(X),
                        h);
          }
        }
      }
    }

    inline void suite_continuity(CheckReport& report, SuiteOptions const& opt) {
      BoundedUniverse const universe(opt.bound.value_or(5));
      BoundedUniverse const small(std::min<Nat>(3, universe.bound()));
      Rng                   rng(opt.seed);
      auto const            family = waning_family();
      Nat const             cases  = opt.sample.value_or(100);
      for (Nat i = 0; i < cases; ++i) {
        auto const& f = family[below(rng, family.size())];
        auto const& a = small[below(rng, small.size())];
        auto const& b = small[below(rng, small.size())];
        auto        r = product_containment_check(f, a, b, universe, opt.jobs);
        report.absorb(r);
      }
    }

    inline void suite_order(CheckReport& report, SuiteOptions const& opt) {
      auto const sample = waning_sample(opt.sample.value_or(50));
      for (auto const& f : sample) {
        for (auto const& g : sample) {
          ++report.cases;
          std::string const tag = "f=" + describe(f) + " g=" + describe(g);
          bool const        le  = preceq(f, g);
          auto const        v   = least_violation(f, g);
          if (le == v.has_value()) {
            report.fail("preceq and witness not exclusive " + tag);
            continue;
          }
          if (!v) {
            continue;
          }
          Nat const  r  = v->b + 1;
          auto const ow = order_counterexample(f, g, r);
          auto const id = PartialBijection::identity(ow.n);
          if (!SetDescriptor::w_nbhd(g, id, r).contains(ow.h)) {
            report.fail("witness not in W_{g,id_n,r} " + tag, ow.h);
          }
          if (SetDescriptor::w_nbhd(f, id, ow.b).contains(ow.h)) {
            report.fail("witness in W_{f,id_n,b} " + tag, ow.h);
          }
        }
      }

      // Neighbourhoods of the empty map: W_{g,0,r} is inside W_{f,0,r} on I_B
      // iff min(f(0), cap) >= min(g(0), cap), cap = min(r, B - r) being the
      // most image points below r that a map in I_B with domain >= r can have.
      BoundedUniverse const universe(opt.bound.value_or(5));
      Nat const             r   = universe.bound() / 2;
      Nat const             cap = std::min(r, universe.bound() - r);
      auto const            cut = [cap](ExtNat x) { return std::min(x, ExtNat(cap)); };
      PartialBijection const empty;
      for (size_t i = 0; i < std::min<size_t>(sample.size(), 12); ++i) {
        for (size_t j = 0; j < std::min<size_t>(sample.size(), 12); ++j) {
          auto const& f   = sample[i];
          auto const& g   = sample[j];
          auto        s   = subset_check(SetDescriptor::w_nbhd(g, empty, r),
                                SetDescriptor::w_nbhd(f, empty, r),
                                universe);
          report.cases += s.cases;
          if (s.passed() != (cut(f(0)) >= cut(g(0)))) {
            report.fail("neighbourhoods of the empty map f=" + describe(f) + " g=" + describe(g));
          }
        }
      }
    }

    inline SetDescriptor dom_misses(Nat n, std::vector<SetDescriptor> extra = {}) {
      std::vector<SetDescriptor> parts;
      for (Nat x = 0; x < n; ++x) {
        parts.push_back(SetDescriptor::dom_miss(x));
      }
      for (auto& e : extra) {
        parts.push_back(std::move(e));
      }
      return SetDescriptor::intersection(std::move(parts));
    }

    inline void suite_remark(CheckReport& report, SuiteOptions const& opt) {
      BoundedUniverse const universe(opt.bound.value_or(5));
      Nat const             B = universe.bound();
      for (Nat n = 0; n <= B; ++n) {
        std::string const tag = " n=" + std::to_string(n);
        expect_equal(report, "Ys={{}}" + tag, SetDescriptor::wany(n, {{}}), dom_misses(n), universe);
        std::vector<SetDescriptor> miss0;
        miss0.push_back(SetDescriptor::im_miss(0));
        expect_equal(report,
                     "Ys={{0}}" + tag,
                     SetDescriptor::wany(n, {{0}}),
                     dom_misses(n, std::move(miss0)),
                     universe);
        for (Nat k = 0; k < B; ++k) {
          std::vector<SetDescriptor> misses;
          for (Nat y = 0; y <= k; ++y) {
            misses.push_back(SetDescriptor::im_miss(y));
          }
          expect_equal(report,
                       "Ys={{0..k}} k=" + std::to_string(k) + tag,
                       SetDescriptor::wany(n, {initial_segment(k + 1)}),
                       dom_misses(n, std::move(misses)),
                       universe);
        }
        for (Nat r = 3; r <= B + 1; ++r) {
          // All (r - 3)-subsets of r.
          std::vector<std::vector<Nat>> ys;
          for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << r); ++mask) {
            if (static_cast<Nat>(__builtin_popcountll(mask)) == r - 3) {
              std::vector<Nat> y;
              for (Nat i = 0; i < r; ++i) {
                if (mask >> i & 1) {
                  y.push_back(i);
                }
              }
              ys.push_back(std::move(y));
            }
          }
          std::vector<SetDescriptor> at_most_three;
          at_most_three.push_back(
              SetDescriptor::u_basic(descending_chain_element(3), 0, initial_segment(r)));
          expect_equal(report,
                       "Ys={Y in r : |Y| = r-3} r=" + std::to_string(r) + tag,
                       SetDescriptor::wany(n, std::move(ys)),
                       dom_misses(n, std::move(at_most_three)),
                       universe);
        }
      }
    }

    inline SetDescriptor random_descriptor(Rng&                     rng,
                                           BoundedUniverse const&   universe,
                                           std::vector<WaningFn> const& family,
                                           int                      depth) {
      Nat const B    = universe.bound();
      Nat const kind = below(rng, depth > 0 ? 9 : 7);
      switch (kind) {
        case 0:
          return SetDescriptor::point_hit(below(rng, B), below(rng, B));
        case 1:
          return SetDescriptor::dom_miss(below(rng, B));
        case 2:
          return SetDescriptor::im_miss(below(rng, B));
        case 3: {
          AnyFn f = below(rng, 2) == 0 ? AnyFn(family[below(rng, family.size())])
                                       : AnyFn(random_gen_fn(rng));
          return SetDescriptor::u_basic(std::move(f), below(rng, B), random_subset(rng, B));
        }
        case 4: {
          auto const& f = family[below(rng, family.size())];
          auto const& g = universe[below(rng, universe.size())];
          return SetDescriptor::w_nbhd(f, g, valid_r_min(f, g) + below(rng, 2));
        }
        case 5: {
          std::vector<std::vector<Nat>> ys;
          Nat                           k = 1 + below(rng, 3);
          for (Nat i = 0; i < k; ++i) {
            ys.push_back(random_subset(rng, B));
          }
          return SetDescriptor::wany(below(rng, B), std::move(ys));
        }
        case 6:
          return SetDescriptor::fix_below(universe[below(rng, universe.size())], below(rng, B + 1));
        case 7: {
          std::vector<SetDescriptor> parts;
          parts.push_back(random_descriptor(rng, universe, family, depth - 1));
          parts.push_back(random_descriptor(rng, universe, family, depth - 1));
          return SetDescriptor::intersection(std::move(parts));
        }
        default:
          return SetDescriptor::dual(random_descriptor(rng, universe, family, depth - 1));
      }
    }

    inline void suite_dual(CheckReport& report, SuiteOptions const& opt) {
      BoundedUniverse const universe(opt.bound.value_or(4));
      Rng                   rng(opt.seed);
      auto const            family = waning_family();
      Nat const             cases  = opt.sample.value_or(50);
      for (Nat i = 0; i < cases; ++i) {
        auto const d      = random_descriptor(rng, universe, family, 2);
        auto const dual   = SetDescriptor::dual(d);
        auto const twice  = SetDescriptor::dual(dual);
        auto const tag    = io::to_json(d).dump();
        for (auto const& h : universe.elements()) {
          ++report.cases;
          if (dual.contains(h) != d.contains(invert(h))) {
            report.fail("dual semantics D=" + tag, h);
          }
          if (twice.contains(h) != d.contains(h)) {
            report.fail("dual involution D=" + tag, h);
          }
        }
      }
    }

    inline void suite_d_map(CheckReport& report, SuiteOptions const& opt) {
      BoundedUniverse const universe(opt.bound.value_or(4));
      for (Nat n = 0; n <= std::min<Nat>(2, universe.bound()); ++n) {
        auto const                    g = PartialBijection::identity(n);
        std::vector<PartialBijection> up;
        for (auto const& h : universe.elements()) {
          if (h.extends(g)) {
            up.push_back(h);
          }
        }
        std::set<PartialBijection> images;
        for (auto const& h : up) {
          auto dh = d_map(g, h);
          ++report.cases;
          if (dh.size() != h.size() - g.size()) {
            report.fail("|d_g(h)| != |h| - |g| n=" + std::to_string(n), h);
          }
          images.insert(std::move(dh));
        }
        if (images.size() != up.size()) {
          report.fail("d_g not injective n=" + std::to_string(n));
        }
        for (auto const& h : up) {
          auto const dh = d_map(g, h);
          for (auto const& k : up) {
            ++report.cases;
            auto const hk = compose(h, k);
            if (!hk.extends(g) || d_map(g, hk) != compose(dh, d_map(g, k))) {
              report.fail("d_g(hk) != d_g(h) d_g(k) n=" + std::to_string(n) + " k="
                              + k.to_string(),
                          h);
            }
          }
        }
      }
    }

    inline void count_waning_prefixes(Nat                  c,
                                      std::vector<ExtNat>& prefix,
                                      Nat&                 count) {
      if (prefix.size() == c + 1) {
        count += is_waning(GenFn{prefix, 0, 0}) ? 1 : 0;
        return;
      }
      Nat const hi = prefix.empty() ? c : prefix.back().value();
      for (Nat v = 0; v <= hi; ++v) {
        prefix.emplace_back(v);
        count_waning_prefixes(c, prefix, count);
        prefix.pop_back();
      }
    }

    inline void suite_census(CheckReport& report, SuiteOptions const& opt) {
      Nat const max_c = opt.sample.value_or(10);
      if (max_c > 12) {
        throw BoundTooLarge("census is limited to c <= 12");
      }
      for (Nat c = 0; c <= max_c; ++c) {
        // Any waning f with f(0) <= c vanishes from index c on, so the
        // non-increasing prefixes of length c + 1 with tail 0 cover them all.
        Nat                 exhaustive = 0;
        std::vector<ExtNat> prefix;
        count_waning_prefixes(c, prefix, exhaustive);
        Nat const enumerated = enumerate_below(staircase(c)).size();
        Nat const closed     = Nat(1) << c;
        ++report.cases;
        if (exhaustive != closed || enumerated != closed) {
          report.fail("census c=" + std::to_string(c) + ": exhaustive "
                      + std::to_string(exhaustive) + ", enumerate_below "
                      + std::to_string(enumerated) + ", 2^c " + std::to_string(closed));
        }
      }
    }

    inline void suite_chains(CheckReport& report, SuiteOptions const& opt) {
      Nat const length = 100;
      for (Nat m = 0; m <= length; ++m) {
        for (Nat n = 0; n < m; ++n) {
          ++report.cases;
          auto const fm = descending_chain_element(m), fn = descending_chain_element(n);
          if (!preceq(fm, fn) || preceq(fn, fm)) {
            report.fail("chain not strictly descending at " + std::to_string(n) + " < "
                        + std::to_string(m));
          }
        }
      }
      Rng       rng(opt.seed);
      Nat const cases = opt.sample.value_or(20);
      for (Nat i = 0; i < cases; ++i) {
        // Random Omega-free waning function with support <= 4, values <= 6.
        std::vector<Nat> drops;
        Nat              top = below(rng, 7);
        for (Nat v = top; v > 0 && drops.size() < 4; --v) {
          if (drops.empty() || (rng() & 1)) {
            drops.push_back(v);
          }
        }
        auto const f     = WaningFn::tail(0, drops);
        auto const below_f = enumerate_below(f);
        std::string const tag = "f=" + describe(f);
        Nat bound = 1, total = 0;
        for (Nat v : drops) {
          bound *= v + 1;
          total += v;
        }
        ++report.cases;
        if (below_f.size() > bound) {
          report.fail("enumerate_below exceeds product bound " + tag);
        }
        for (auto const& h : below_f) {
          if (!preceq(f, h)) {
            report.fail("enumerated function not below " + tag);
          }
        }
        // Longest strictly ascending chain: ascending in preceq means pointwise
        // descending, which strictly lowers the value sum at every step.
        std::vector<Nat> longest(below_f.size(), 1);
        std::vector<size_t> order(below_f.size());
        std::vector<Nat>    sums(below_f.size(), 0);
        for (size_t k = 0; k < below_f.size(); ++k) {
          order[k] = k;
          for (Nat v : below_f[k].drops()) {
            sums[k] += v;
          }
        }
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return sums[x] > sums[y]; });
        Nat best = below_f.empty() ? 0 : 1;
        for (size_t x = 0; x < order.size(); ++x) {
          for (size_t y = 0; y < x; ++y) {
            auto const& hi = below_f[order[y]];
            auto const& lo = below_f[order[x]];
            if (hi != lo && preceq(hi, lo)) {
              longest[order[x]] = std::max(longest[order[x]], longest[order[y]] + 1);
            }
          }
          best = std::max(best, longest[order[x]]);
        }
        if (best > 1 + total) {
          report.fail("ascending chain longer than 1 + sum " + tag);
        }
      }
    }

    // All partial orders on {0, ..., n - 1}, as leq matrices.
    inline std::vector<std::vector<std::vector<bool>>> all_posets(size_t n) {
      std::vector<std::pair<size_t, size_t>> off;
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          if (i != j) {
            off.emplace_back(i, j);
          }
        }
      }
      std::vector<std::vector<std::vector<bool>>> out;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << off.size()); ++mask) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) {
          leq[i][i] = true;
        }
        for (size_t k = 0; k < off.size(); ++k) {
          if (mask >> k & 1) {
            leq[off[k].first][off[k].second] = true;
          }
        }
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
          for (size_t j = 0; j < n && ok; ++j) {
            if (i != j && leq[i][j] && leq[j][i]) {
              ok = false;
            }
            for (size_t k = 0; k < n && ok; ++k) {
              if (leq[i][j] && leq[j][k] && !leq[i][k]) {
                ok = false;
              }
            }
          }
        }
        if (ok) {
          out.push_back(std::move(leq));
        }
      }
      return out;
    }

    inline void suite_embed(CheckReport& report, SuiteOptions const& opt) {
      size_t const max_n = opt.sample.value_or(4);
      if (max_n > 5) {
        throw BoundTooLarge("poset enumeration is limited to 5 elements");
      }
      for (size_t n = 1; n <= max_n; ++n) {
        auto const posets = all_posets(n);
        static constexpr Nat known[] = {1, 1, 3, 19, 219};
        if (n < 5 && posets.size() != known[n]) {
          report.fail("labelled poset count on " + std::to_string(n) + " elements is "
                      + std::to_string(posets.size()));
        }
        for (auto const& leq : posets) {
          std::vector<std::string>                         labels;
          std::vector<std::pair<std::string, std::string>> pairs;
          for (size_t i = 0; i < n; ++i) {
            labels.push_back("e" + std::to_string(i));
          }
          for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
              if (leq[i][j]) {
                pairs.emplace_back(labels[i], labels[j]);
              }
            }
          }
          FinitePoset const poset(labels, pairs);
          auto const        image = embed_poset(poset);
          ++report.cases;
          std::set<WaningFn> distinct;
          for (auto const& [label, f] : image) {
            distinct.insert(f);
            if (!is_waning(to_gen_fn(f))) {
              report.fail("embedded image not waning");
            }
          }
          if (distinct.size() != n) {
            report.fail("embedding not injective on a poset of size " + std::to_string(n));
          }
          for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
              if (leq[i][j] != preceq(image.at(labels[i]), image.at(labels[j]))) {
                report.fail("embedding not an order isomorphism on a poset of size "
                            + std::to_string(n));
              }
            }
          }
        }
      }
    }

    inline void suite_compactness(CheckReport& report, SuiteOptions const& opt) {
      Rng       rng(opt.seed);
      Nat const cases = opt.sample.value_or(20);
      for (Nat i = 0; i < cases; ++i) {
        Nat const n = below(rng, 4);
        auto      X = random_subset(rng, 6);
        // Base map: a random partial injection from n into {0..7} \ X.
        std::vector<Pair> pairs;
        std::vector<bool> used(8, false);
        for (Nat x : X) {
          used[x] = true;
        }
        for (Nat x = 0; x < n; ++x) {
          Nat y = below(rng, 8);
          if ((rng() & 1) && !used[y]) {
            used[y] = true;
            pairs.emplace_back(x, y);
          }
        }
        PartialBijection const h0(pairs);
        std::vector<Nat>       covered;
        Nat const              spread = 4 + below(rng, 12);
        for (Nat m = 0; m < spread; ++m) {
          if (below(rng, 4) != 0) {
            covered.push_back(m);
          }
        }
        bool const        dom_miss = below(rng, 4) != 0;
        auto const        w        = cover_witness(n, h0, X, covered, dom_miss);
        std::string const tag      = "n=" + std::to_string(n) + " h0=" + h0.to_string()
                                + " X=" + describe(X) + " covered=" + describe(covered);
        ++report.cases;
        bool in_u = restrict_below(w, n) == h0;
        for (auto const& [s, t] : w) {
          in_u = in_u && !std::binary_search(X.begin(), X.end(), t);
        }
        if (!in_u) {
          report.fail("witness outside U " + tag, w);
        }
        auto const at_n = w(n);
        if (dom_miss && SetDescriptor::dom_miss(n).contains(w)) {
          report.fail("witness in the listed member n not in dom " + tag, w);
        }
        for (Nat m : covered) {
          if (SetDescriptor::point_hit(n, m).contains(w)) {
            report.fail("witness in the listed member (n)f = " + std::to_string(m) + " " + tag, w);
          }
        }
        // The full cover: (n)f = m for m = (n)w, or n not in dom(w).
        bool const in_cover = at_n ? SetDescriptor::point_hit(n, *at_n).contains(w)
                                   : SetDescriptor::dom_miss(n).contains(w);
        if (!in_cover) {
          report.fail("witness outside the full cover " + tag, w);
        }
      }
    }

    // max(0, min_{j <= i} f(j) - (i - j)), with omega - n = omega.
    inline ExtNat closure_closed_form(GenFn const& f, Nat i) {
      ExtNat best = omega;
      for (Nat j = 0; j <= i; ++j) {
        ExtNat v = f(j);
        if (v.is_finite()) {
          long long d = static_cast<long long>(v.value()) - static_cast<long long>(i - j);
          v           = ExtNat(static_cast<Nat>(std::max(0LL, d)));
        }
        best = std::min(best, v);
      }
      return best;
    }

    inline void closure_inputs(size_t len, std::vector<ExtNat>& prefix, std::vector<GenFn>& out) {
      if (prefix.size() == len) {
        for (ExtNat tail : {ExtNat(0), omega}) {
          for (ExtNat at : {ExtNat(0), omega}) {
            out.push_back(GenFn{prefix, tail, at});
          }
        }
        return;
      }
      for (Nat v = 0; v <= 5; ++v) {
        prefix.push_back(v == 5 ? omega : ExtNat(v));
        closure_inputs(len, prefix, out);
        prefix.pop_back();
      }
    }

    inline void suite_closure(CheckReport& report, SuiteOptions const& opt) {
      size_t const       max_len = opt.sample.value_or(4);
      if (max_len > 6) {
        throw BoundTooLarge("closure inputs are limited to prefix length 6");
      }
      std::vector<GenFn> inputs;
      for (size_t len = 0; len <= max_len; ++len) {
        std::vector<ExtNat> prefix;
        closure_inputs(len, prefix, inputs);
      }
      auto const candidates = enumerate_below(staircase(4));
      for (auto const& f : inputs) {
        ++report.cases;
        auto const        c   = closure(f);
        std::string const tag = "f=" + describe(f);
        if (!is_waning(to_gen_fn(c))) {
          report.fail("closure not waning " + tag);
        }
        if (closure(to_gen_fn(c)) != c) {
          report.fail("closure not idempotent " + tag);
        }
        Nat const horizon = f.prefix.size() + 6;
        for (Nat i = 0; i < horizon; ++i) {
          if (c(i) > f(i)) {
            report.fail("closure above input at " + std::to_string(i) + " " + tag);
          }
          if (c(i) != closure_closed_form(f, i)) {
            report.fail("inductive and closed-form closure differ at " + std::to_string(i)
                        + " " + tag);
          }
        }
        bool all_omega = f.tail.is_omega();
        for (auto x : f.prefix) {
          all_omega = all_omega && x.is_omega();
        }
        if ((c.at_omega() == omega) != all_omega) {
          report.fail("closure value at omega " + tag);
        }
        bool omega_free = f.tail.is_finite();
        for (auto x : f.prefix) {
          omega_free = omega_free && x.is_finite();
        }
        if (omega_free) {
          // Values are <= 4, so every waning h below f is below staircase(4).
          for (auto const& h : candidates) {
            bool below_f = true;
            for (Nat i = 0; i < horizon && below_f; ++i) {
              below_f = h(i) <= f(i);
            }
            if (below_f && !preceq(c, h)) {
              report.fail("closure not maximal: " + describe(h) + " " + tag);
            }
          }
        }
      }
    }
  }  // namespace detail

  inline CheckReport run_suite(std::string const& name, SuiteOptions const& options = {}) {
    detail::Stopwatch clock;
    CheckReport       report;
    report.name = name;
    if (name == "basis") {
      detail::suite_basis(report, options);
    } else if (name == "much-wan") {
      detail::suite_much_wan(report, options);
    } else if (name == "continuity") {
      detail::suite_continuity(report, options);
    } else if (name == "order") {
      detail::suite_order(report, options);
    } else if (name == "remark") {
      detail::suite_remark(report, options);
    } else if (name == "dual") {
      detail::suite_dual(report, options);
    } else if (name == "d-map") {
      detail::suite_d_map(report, options);
    } else if (name == "census") {
      detail::suite_census(report, options);
    } else if (name == "chains") {
      detail::suite_chains(report, options);
    } else if (name == "embed") {
      detail::suite_embed(report, options);
    } else if (name == "compactness") {
      detail::suite_compactness(report, options);
    } else if (name == "closure") {
      detail::suite_closure(report, options);
    } else {
      throw UnknownSuite("unknown suite \"" + name + "\"");
    }
    report.canonicalize();
    report.elapsed = clock.elapsed();
    return report;
  }

}  // namespace waning

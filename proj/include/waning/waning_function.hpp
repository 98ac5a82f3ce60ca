#pragma once

#include <algorithm>  // for max, min
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <span>       // for span
#include <string>     // for string
#include <utility>    // for move
#include <variant>    // for variant, visit
#include <vector>     // for vector

#include "waning/errors.hpp"
#include "waning/ext_nat.hpp"

namespace waning {

  // An eventually constant function omega + 1 -> omega + 1: prefix[i] at
  // index i < |prefix|, tail at every later finite index, at_omega at omega.
  struct GenFn {
    std::vector<ExtNat> prefix;
    ExtNat              tail     = 0;
    ExtNat              at_omega = 0;

    ExtNat operator()(Nat i) const {
      return i < prefix.size() ? prefix[i] : tail;
    }

    ExtNat eval(ExtNat i) const {
      return i.is_omega() ? at_omega : (*this)(i.value());
    }

    friend bool operator==(GenFn const&, GenFn const&) = default;
  };

  // Canonical encoding of a waning function.  Either constant omega on all of
  // omega + 1, or omega on [0, omega_prefix), then the strictly decreasing
  // positive values drops, then 0 (including at omega).
  class WaningFn {
   public:
    // Longest drops sequence the closure will materialise.
    static constexpr size_t kMaxDrops = size_t(1) << 22;

    WaningFn() = default;  // constant 0

    static WaningFn zero() {
      return WaningFn();
    }

    static WaningFn const_omega() {
      WaningFn f;
      f.const_omega_ = true;
      return f;
    }

    static WaningFn tail(Nat omega_prefix, std::vector<Nat> drops) {
      for (size_t i = 0; i < drops.size(); ++i) {
        if (drops[i] == 0 || (i > 0 && drops[i] >= drops[i - 1])) {
          throw NotWaning("drops must be positive and strictly decreasing");
        }
      }
      WaningFn f;
      f.omega_prefix_ = omega_prefix;
      f.drops_        = std::move(drops);
      return f;
    }

    // Builds the waning function whose values on omega are `values` followed by
    // zeros.  Throws NotWaning unless the sequence has the canonical shape.
    static WaningFn from_values(std::span<ExtNat const> values) {
      size_t i = 0;
      while (i < values.size() && values[i].is_omega()) {
        ++i;
      }
      Nat              prefix = i;
      std::vector<Nat> drops;
      while (i < values.size() && values[i] != ExtNat(0)) {
        if (values[i].is_omega()) {
          throw NotWaning("omega after a finite value");
        }
        drops.push_back(values[i].value());
        ++i;
      }
      for (; i < values.size(); ++i) {
        if (values[i] != ExtNat(0)) {
          throw NotWaning("non-zero value after a zero");
        }
      }
      return tail(prefix, std::move(drops));
    }

    bool is_const_omega() const noexcept {
      return const_omega_;
    }

    // True iff no value on omega is omega.
    bool is_omega_free() const noexcept {
      return !const_omega_ && omega_prefix_ == 0;
    }

    Nat omega_prefix() const noexcept {
      return omega_prefix_;
    }

    std::span<Nat const> drops() const noexcept {
      return drops_;
    }

    // First index from which the function is 0 (0 for the constant omega
    // function, which has no such index).
    Nat support() const noexcept {
      return const_omega_ ? 0 : omega_prefix_ + drops_.size();
    }

    ExtNat operator()(Nat i) const {
      if (const_omega_ || i < omega_prefix_) {
        return omega;
      }
      Nat k = i - omega_prefix_;
      return k < drops_.size() ? ExtNat(drops_[k]) : ExtNat(0);
    }

    ExtNat at_omega() const noexcept {
      return const_omega_ ? omega : ExtNat(0);
    }

    ExtNat eval(ExtNat i) const {
      return i.is_omega() ? at_omega() : (*this)(i.value());
    }

    friend auto operator<=>(WaningFn const&, WaningFn const&) = default;
    friend bool operator==(WaningFn const&, WaningFn const&)  = default;

   private:
    bool             const_omega_  = false;
    Nat              omega_prefix_ = 0;
    std::vector<Nat> drops_;
  };

  inline ExtNat eval(WaningFn const& f, ExtNat i) {
    return f.eval(i);
  }

  inline ExtNat eval(GenFn const& f, ExtNat i) {
    return f.eval(i);
  }

  inline GenFn to_gen_fn(WaningFn const& f) {
    if (f.is_const_omega()) {
      return GenFn{{}, omega, omega};
    }
    GenFn g;
    g.prefix.assign(f.omega_prefix(), omega);
    for (Nat d : f.drops()) {
      g.prefix.emplace_back(d);
    }
    g.tail     = 0;
    g.at_omega = 0;
    return g;
  }

  // Either kind of function, for the basic sets U_{f,n,X} which accept both.
  using AnyFn = std::variant<WaningFn, GenFn>;

  inline ExtNat eval(AnyFn const& f, ExtNat i) {
    return std::visit([i](auto const& g) { return g.eval(i); }, f);
  }

  // Non-increasing, and either constant omega on omega + 1 or somewhere finite
  // and strictly decreasing at every finite non-zero value.
  inline bool is_waning(GenFn const& f) {
    size_t const len = f.prefix.size();
    auto         at  = [&](size_t i) { return i < len ? f.prefix[i] : f.tail; };

    bool all_omega = f.tail.is_omega() && f.at_omega.is_omega();
    for (size_t i = 0; i < len && all_omega; ++i) {
      all_omega = f.prefix[i].is_omega();
    }
    if (all_omega) {
      return true;
    }

    bool some_finite = f.tail.is_finite();
    for (size_t i = 0; i < len; ++i) {
      some_finite = some_finite || f.prefix[i].is_finite();
    }
    if (!some_finite) {
      return false;
    }
    // Indices 0..len cover every distinct step; beyond len the value is tail.
    for (size_t j = 0; j < len; ++j) {
      ExtNat cur = at(j), next = at(j + 1);
      if (next > cur) {
        return false;
      }
      if (cur.is_finite() && cur != ExtNat(0) && !(next < cur)) {
        return false;
      }
    }
    if (f.tail.is_finite() && f.tail != ExtNat(0)) {
      return false;
    }
    return f.at_omega <= f.tail;
  }

  // The greatest waning function below f on omega, by the inductive rules:
  // f'(0) = f(0), f'(i+1) = min(f(i+1), f'(i) - 1) while f'(i) != 0, then 0.
  inline WaningFn closure(GenFn const& f) {
    std::vector<ExtNat> values;
    ExtNat              cur = f(0);
    Nat                 i   = 0;
    while (cur != ExtNat(0)) {
      if (i >= f.prefix.size() && cur.is_omega()) {
        // omega from here on: f is omega on all of omega.
        return WaningFn::const_omega();
      }
      values.push_back(cur);
      if (values.size() > WaningFn::kMaxDrops + f.prefix.size()) {
        throw DomainError("closure too long to materialise");
      }
      ++i;
      cur = std::min(f(i), cur.minus(1));
    }
    return WaningFn::from_values(values);
  }

  // f precedes g iff f(i) >= g(i) for every i in omega + 1.
  inline bool preceq(WaningFn const& f, WaningFn const& g) {
    if (f.at_omega() < g.at_omega()) {
      return false;
    }
    Nat const n = std::max(f.omega_prefix() + f.drops().size(),
                           g.omega_prefix() + g.drops().size());
    for (Nat i = 0; i <= n; ++i) {
      if (f(i) < g(i)) {
        return false;
      }
    }
    return true;
  }

  namespace detail {
    template <typename Op>
    std::vector<ExtNat> pointwise(WaningFn const& f, WaningFn const& g, Op op) {
      Nat const n = std::max(f.support(), g.support());
      std::vector<ExtNat> values;
      values.reserve(n);
      for (Nat i = 0; i < n; ++i) {
        values.push_back(op(f(i), g(i)));
      }
      return values;
    }
  }  // namespace detail

  // Least upper bound under preceq: the pointwise minimum.
  inline WaningFn join(WaningFn const& f, WaningFn const& g) {
    if (f.is_const_omega()) {
      return g;
    }
    if (g.is_const_omega()) {
      return f;
    }
    auto values = detail::pointwise(f, g, [](ExtNat a, ExtNat b) { return std::min(a, b); });
    return WaningFn::from_values(values);
  }

  // Pointwise maximum.  The result is checked, not assumed, to be waning.
  inline WaningFn meet_if_waning(WaningFn const& f, WaningFn const& g) {
    if (f.is_const_omega() || g.is_const_omega()) {
      return WaningFn::const_omega();
    }
    auto values = detail::pointwise(f, g, [](ExtNat a, ExtNat b) { return std::max(a, b); });
    GenFn candidate{values, 0, 0};
    if (!is_waning(candidate)) {
      throw NotWaning("pointwise maximum is not waning");
    }
    return WaningFn::from_values(values);
  }

  namespace detail {
    inline void enumerate_below(WaningFn const&        f,
                                std::vector<ExtNat>&   values,
                                Nat                    cap,
                                std::vector<WaningFn>& out) {
      Nat i = values.size();
      if (i >= f.support() || cap == 0) {
        out.push_back(WaningFn::from_values(values));
        return;
      }
      Nat hi = std::min(f(i).value(), cap);
      for (Nat v = 0; v <= hi; ++v) {
        values.emplace_back(v);
        enumerate_below(f, values, v == 0 ? 0 : v - 1, out);
        values.pop_back();
      }
    }
  }  // namespace detail

  // Every waning h with h(i) <= f(i) on omega, in lexicographic order of the
  // value sequence.  Finite only when f never takes the value omega.
  inline std::vector<WaningFn> enumerate_below(WaningFn const& f) {
    if (!f.is_omega_free()) {
      throw OmegaEntries("enumerate_below needs a function without omega values");
    }
    std::vector<WaningFn> out;
    std::vector<ExtNat>   values;
    Nat const             cap = f.support() == 0 ? 0 : f(0).value();
    detail::enumerate_below(f, values, cap, out);
    return out;
  }

  // f_n: n at 0 and 0 elsewhere.
  inline WaningFn descending_chain_element(Nat n) {
    return n == 0 ? WaningFn::zero() : WaningFn::tail(0, {n});
  }

  // c, c - 1, ..., 1, 0, ...: the pointwise largest Omega-free waning function
  // with value c at 0.
  inline WaningFn staircase(Nat c) {
    std::vector<Nat> drops;
    for (Nat v = c; v > 0; --v) {
      drops.push_back(v);
    }
    return WaningFn::tail(0, std::move(drops));
  }

}  // namespace waning

#pragma once

#include <algorithm>         // for sort, adjacent_find, lower_bound
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <span>              // for span
#include <string>            // for string
#include <utility>           // for pair
#include <vector>            // for vector

#include "waning/errors.hpp"
#include "waning/ext_nat.hpp"

namespace waning {

  using Pair = std::pair<Nat, Nat>;

  // A finite partial bijection of the natural numbers, stored as its graph:
  // pairs (source, target) sorted by source.  Maps act on the right, so
  // compose(a, b) applies a first.
  class PartialBijection {
   public:
    PartialBijection() = default;

    explicit PartialBijection(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
      std::sort(pairs_.begin(), pairs_.end());
      auto same_source = [](Pair const& p, Pair const& q) { return p.first == q.first; };
      if (std::adjacent_find(pairs_.begin(), pairs_.end(), same_source) != pairs_.end()) {
        throw DomainError("partial bijection is not functional: repeated source");
      }
      std::vector<Nat> targets = image();
      if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
        throw DomainError("partial bijection is not injective: repeated target");
      }
    }

    PartialBijection(std::initializer_list<Pair> pairs)
        : PartialBijection(std::vector<Pair>(pairs)) {}

    // id_n, the identity on {0, ..., n - 1}.
    static PartialBijection identity(Nat n) {
      PartialBijection result;
      result.pairs_.reserve(n);
      for (Nat x = 0; x < n; ++x) {
        result.pairs_.emplace_back(x, x);
      }
      return result;
    }

    // Skips validation; the caller guarantees sorted, functional, injective.
    static PartialBijection from_sorted_unchecked(std::vector<Pair> pairs) {
      PartialBijection result;
      result.pairs_ = std::move(pairs);
      return result;
    }

    size_t size() const noexcept {
      return pairs_.size();
    }

    bool empty() const noexcept {
      return pairs_.empty();
    }

    std::span<Pair const> pairs() const noexcept {
      return pairs_;
    }

    auto begin() const noexcept {
      return pairs_.begin();
    }

    auto end() const noexcept {
      return pairs_.end();
    }

    std::optional<Nat> operator()(Nat x) const {
      auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
      if (it != pairs_.end() && it->first == x) {
        return it->second;
      }
      return std::nullopt;
    }

    std::optional<Nat> preimage(Nat y) const {
      for (auto const& [s, t] : pairs_) {
        if (t == y) {
          return s;
        }
      }
      return std::nullopt;
    }

    bool in_domain(Nat x) const {
      return operator()(x).has_value();
    }

    bool in_image(Nat y) const {
      return preimage(y).has_value();
    }

    bool contains(Pair const& p) const {
      return std::binary_search(pairs_.begin(), pairs_.end(), p);
    }

    // True iff g is a subset of this map.
    bool extends(PartialBijection const& g) const {
      return std::includes(pairs_.begin(), pairs_.end(), g.pairs_.begin(), g.pairs_.end());
    }

    std::vector<Nat> domain() const {
      std::vector<Nat> result;
      result.reserve(pairs_.size());
      for (auto const& p : pairs_) {
        result.push_back(p.first);
      }
      return result;
    }

    std::vector<Nat> image() const {
      std::vector<Nat> result;
      result.reserve(pairs_.size());
      for (auto const& p : pairs_) {
        result.push_back(p.second);
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    // Largest point of dom u im, or nullopt for the empty map.
    std::optional<Nat> max_point() const {
      if (pairs_.empty()) {
        return std::nullopt;
      }
      Nat m = pairs_.back().first;
      for (auto const& p : pairs_) {
        m = std::max(m, p.second);
      }
      return m;
    }

    std::string to_string() const {
      std::string out = "[";
      for (size_t i = 0; i < pairs_.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += "[" + std::to_string(pairs_[i].first) + ","
               + std::to_string(pairs_[i].second) + "]";
      }
      return out + "]";
    }

    friend auto operator<=>(PartialBijection const&, PartialBijection const&) = default;
    friend bool operator==(PartialBijection const&, PartialBijection const&)  = default;

   private:
    std::vector<Pair> pairs_;
  };

  using FinPB = PartialBijection;

  inline PartialBijection compose(PartialBijection const& a, PartialBijection const& b) {
    std::vector<Pair> out;
    out.reserve(std::min(a.size(), b.size()));
    for (auto const& [x, y] : a) {
      if (auto z = b(y)) {
        out.emplace_back(x, *z);
      }
    }
    return PartialBijection::from_sorted_unchecked(std::move(out));
  }

  inline PartialBijection invert(PartialBijection const& a) {
    std::vector<Pair> out;
    out.reserve(a.size());
    for (auto const& [x, y] : a) {
      out.emplace_back(y, x);
    }
    std::sort(out.begin(), out.end());
    return PartialBijection::from_sorted_unchecked(std::move(out));
  }

  // g restricted to {0, ..., r - 1}.
  inline PartialBijection restrict_below(PartialBijection const& g, Nat r) {
    auto              last = std::lower_bound(g.begin(), g.end(), Pair{r, 0});
    std::vector<Pair> out(g.begin(), last);
    return PartialBijection::from_sorted_unchecked(std::move(out));
  }

  inline bool is_idempotent(PartialBijection const& g) {
    return std::all_of(g.begin(), g.end(), [](Pair const& p) { return p.first == p.second; });
  }

  enum class Direction { forward, inverse };

  // i_X, the order isomorphism from N onto N \ X, computed by counting.
  // forward: the x-th element (0-based) of N \ X.  inverse: the rank of x in
  // N \ X, which requires x not in X.
  inline Nat reindex_apply(std::span<Nat const> X, Nat x, Direction direction) {
    std::vector<Nat> removed(X.begin(), X.end());
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    if (direction == Direction::forward) {
      Nat result = x;
      for (Nat e : removed) {
        if (e <= result) {
          ++result;
        } else {
          break;
        }
      }
      return result;
    }
    if (std::binary_search(removed.begin(), removed.end(), x)) {
      throw DomainError("inverse reindexing of a removed point " + std::to_string(x));
    }
    auto below = std::lower_bound(removed.begin(), removed.end(), x) - removed.begin();
    return x - static_cast<Nat>(below);
  }

  // (h)d_g = i_dom(g) o h o i_im(g)^-1, defined on maps extending g.
  inline PartialBijection d_map(PartialBijection const& g, PartialBijection const& h) {
    if (!h.extends(g)) {
      throw PreconditionError("d_map requires " + h.to_string() + " to extend "
                              + g.to_string());
    }
    std::vector<Nat> dom = g.domain();
    std::vector<Nat> im  = g.image();
    std::vector<Pair> out;
    out.reserve(h.size() - g.size());
    for (auto const& [s, t] : h) {
      if (g.contains(Pair{s, t})) {
        continue;
      }
      out.emplace_back(reindex_apply(dom, s, Direction::inverse),
                       reindex_apply(im, t, Direction::inverse));
    }
    // Rank in N \ dom(g) is strictly monotone, so source order is preserved.
    return PartialBijection::from_sorted_unchecked(std::move(out));
  }

}  // namespace waning

template <>
struct std::hash<waning::PartialBijection> {
  size_t operator()(waning::PartialBijection const& g) const noexcept {
    size_t seed = g.size();
    for (auto const& [x, y] : g) {
      seed ^= std::hash<waning::Nat>{}(x * 0x9e3779b97f4a7c15ULL + y) + 0x9e3779b9
              + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

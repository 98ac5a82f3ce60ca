#pragma once

#include <compare>    // for strong_ordering
#include <cstdint>    // for uint64_t
#include <limits>     // for numeric_limits
#include <ostream>    // for ostream
#include <string>     // for string, to_string

#include "waning/errors.hpp"

namespace waning {

  using Nat = std::uint64_t;

  // An element of the successor ordinal omega + 1: either a natural number or
  // omega itself.  Omega compares above every finite value.
  class ExtNat {
   public:
    constexpr ExtNat() noexcept = default;

    // Implicit on purpose: naturals embed into omega + 1.
    constexpr ExtNat(Nat n) : value_(n) {  // NOLINT(runtime/explicit)
      if (n == kOmegaRep) {
        throw DomainError("natural value too large to represent");
      }
    }

    static constexpr ExtNat omega() noexcept {
      ExtNat x;
      x.value_ = kOmegaRep;
      return x;
    }

    constexpr bool is_omega() const noexcept {
      return value_ == kOmegaRep;
    }

    constexpr bool is_finite() const noexcept {
      return value_ != kOmegaRep;
    }

    constexpr Nat value() const {
      if (is_omega()) {
        throw DomainError("omega has no finite value");
      }
      return value_;
    }

    // omega - n = omega; finite values saturate at 0.
    constexpr ExtNat minus(Nat n) const noexcept {
      if (is_omega()) {
        return *this;
      }
      return ExtNat(value_ > n ? value_ - n : 0);
    }

    std::string to_string() const {
      return is_omega() ? std::string("omega") : std::to_string(value_);
    }

    friend constexpr auto operator<=>(ExtNat, ExtNat) noexcept = default;
    friend constexpr bool operator==(ExtNat, ExtNat) noexcept  = default;

   private:
    static constexpr Nat kOmegaRep = std::numeric_limits<Nat>::max();
    Nat                  value_    = 0;
  };

  inline constexpr ExtNat omega = ExtNat::omega();

  inline std::ostream& operator<<(std::ostream& os, ExtNat x) {
    return os << x.to_string();
  }

}  // namespace waning

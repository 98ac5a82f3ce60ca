#pragma once

#include <string>   // for string
#include <utility>  // for move

#include "waning/waning_function.hpp"

namespace waning {

  // A Polish semigroup topology on I_N: T_f (containing I_2) or its dual
  // T_f^-1 (containing I_3).  T_0 = I_4 is self-dual, so dual(0) is stored as
  // direct(0).
  class PolishTopology {
   public:
    enum class Family { direct, dual };

    static PolishTopology direct(WaningFn f) {
      return PolishTopology(Family::direct, std::move(f));
    }

    static PolishTopology dual(WaningFn f) {
      if (f == WaningFn::zero()) {
        return direct(std::move(f));
      }
      return PolishTopology(Family::dual, std::move(f));
    }

    Family family() const noexcept {
      return family_;
    }

    WaningFn const& function() const noexcept {
      return f_;
    }

    bool is_i4() const noexcept {
      return f_ == WaningFn::zero();
    }

    friend bool operator==(PolishTopology const&, PolishTopology const&) = default;

   private:
    PolishTopology(Family family, WaningFn f) : family_(family), f_(std::move(f)) {}

    Family   family_;
    WaningFn f_;
  };

  // Containment s <= t.  Within a family it is preceq.  Across families the
  // only containments are into I_4: a topology above both I_2 and I_3 is I_4.
  inline bool contained_in(PolishTopology const& s, PolishTopology const& t) {
    if (t.is_i4()) {
      return true;
    }
    if (s.family() != t.family()) {
      return false;
    }
    return preceq(s.function(), t.function());
  }

  enum class Comparison { equal, finer_strict, coarser_strict, incomparable };

  inline std::string to_string(Comparison c) {
    switch (c) {
      case Comparison::equal:
        return "equal";
      case Comparison::finer_strict:
        return "finer";
      case Comparison::coarser_strict:
        return "coarser";
      case Comparison::incomparable:
        return "incomparable";
    }
    return "incomparable";
  }

  // How t1 relates to t2: coarser_strict means t1 is a proper subset of t2.
  inline Comparison compare(PolishTopology const& t1, PolishTopology const& t2) {
    bool const below = contained_in(t1, t2);
    bool const above = contained_in(t2, t1);
    if (below && above) {
      return Comparison::equal;
    }
    if (below) {
      return Comparison::coarser_strict;
    }
    if (above) {
      return Comparison::finer_strict;
    }
    return Comparison::incomparable;
  }

  inline PolishTopology join_topology(PolishTopology const& t1, PolishTopology const& t2) {
    if (t1.family() != t2.family()) {
      return PolishTopology::direct(WaningFn::zero());
    }
    WaningFn j = join(t1.function(), t2.function());
    return t1.family() == PolishTopology::Family::direct ? PolishTopology::direct(std::move(j))
                                                         : PolishTopology::dual(std::move(j));
  }

}  // namespace waning

#pragma once

#include <algorithm>   // for sort, min
#include <chrono>      // for steady_clock, milliseconds
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <span>        // for span
#include <stdexcept>   // for logic_error
#include <string>      // for string
#include <thread>      // for thread
#include <tuple>       // for tie
#include <utility>     // for move
#include <vector>      // for vector

#include "waning/descriptors.hpp"
#include "waning/errors.hpp"
#include "waning/io.hpp"
#include "waning/partial_bijection.hpp"
#include "waning/waning_function.hpp"
#include "waning/witnesses.hpp"

namespace waning {

  inline constexpr Nat kDefaultMaxBound = 7;

  // |I_B| = sum_k C(B,k)^2 k!
  inline Nat universe_size(Nat bound) {
    Nat total = 0;
    for (Nat k = 0; k <= bound; ++k) {
      Nat binom = 1;
      for (Nat i = 0; i < k; ++i) {
        binom = binom * (bound - i) / (i + 1);
      }
      Nat fact = 1;
      for (Nat i = 2; i <= k; ++i) {
        fact *= i;
      }
      total += binom * binom * fact;
    }
    return total;
  }

  namespace detail {
    inline bool within(PartialBijection const& h, Nat bound) {
      auto m = h.max_point();
      return !m || *m < bound;
    }

    inline void extend_universe(Nat                     bound,
                                Nat                     x,
                                std::vector<bool>&      used,
                                std::vector<Pair>&      pairs,
                                std::vector<PartialBijection>& out) {
      if (x == bound) {
        out.push_back(PartialBijection::from_sorted_unchecked(pairs));
        return;
      }
      extend_universe(bound, x + 1, used, pairs, out);
      for (Nat y = 0; y < bound; ++y) {
        if (!used[y]) {
          used[y] = true;
          pairs.emplace_back(x, y);
          extend_universe(bound, x + 1, used, pairs, out);
          pairs.pop_back();
          used[y] = false;
        }
      }
    }
  }  // namespace detail

  // Every partial bijection with dom u im inside {0, ..., B - 1}, each exactly
  // once, in lexicographic order of the pair sequence.
  inline std::vector<PartialBijection> enumerate_universe(Nat bound,
                                                          Nat max_bound = kDefaultMaxBound) {
    if (bound > max_bound) {
      throw BoundTooLarge("bound " + std::to_string(bound) + " exceeds the maximum "
                          + std::to_string(max_bound));
    }
    std::vector<PartialBijection> out;
    out.reserve(universe_size(bound));
    std::vector<bool> used(bound, false);
    std::vector<Pair> pairs;
    detail::extend_universe(bound, 0, used, pairs, out);
    std::sort(out.begin(), out.end());
    if (out.size() != universe_size(bound)) {
      throw std::logic_error("universe enumeration miscounted");
    }
    // Closure of I_B under the inverse-monoid operations.
    for (size_t i = 0; i < out.size(); ++i) {
      auto const& h    = out[i];
      auto const& next = out[(i + 1) % out.size()];
      if (!detail::within(invert(h), bound) || !detail::within(compose(h, next), bound)
          || !detail::within(restrict_below(h, bound / 2), bound)) {
        throw std::logic_error("universe not closed under the monoid operations");
      }
    }
    return out;
  }

  class BoundedUniverse {
   public:
    explicit BoundedUniverse(Nat bound, Nat max_bound = kDefaultMaxBound)
        : bound_(bound), elements_(enumerate_universe(bound, max_bound)) {}

    Nat bound() const noexcept {
      return bound_;
    }

    std::span<PartialBijection const> elements() const noexcept {
      return elements_;
    }

    size_t size() const noexcept {
      return elements_.size();
    }

    PartialBijection const& operator[](size_t i) const {
      return elements_[i];
    }

   private:
    Nat                           bound_;
    std::vector<PartialBijection> elements_;
  };

  struct Counterexample {
    std::string      inputs;
    PartialBijection witness;

    friend bool operator==(Counterexample const&, Counterexample const&) = default;
  };

  struct CheckReport {
    std::string                 name;
    Nat                         cases = 0;
    std::vector<Counterexample> counterexamples;
    std::chrono::milliseconds   elapsed{0};

    bool passed() const noexcept {
      return counterexamples.empty();
    }

    // Ordered by serialized witness, then by inputs.
    void canonicalize() {
      std::sort(counterexamples.begin(),
                counterexamples.end(),
                [](Counterexample const& a, Counterexample const& b) {
                  auto wa = a.witness.to_string(), wb = b.witness.to_string();
                  return std::tie(wa, a.inputs) < std::tie(wb, b.inputs);
                });
    }

    void absorb(CheckReport const& other) {
      cases += other.cases;
      counterexamples.insert(
          counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    }

    void fail(std::string inputs, PartialBijection witness = {}) {
      counterexamples.push_back(Counterexample{std::move(inputs), std::move(witness)});
    }

    io::Json to_json(bool with_timing = true) const {
      io::Json j       = io::Json::object();
      j["suite"]       = name;
      j["cases"]       = cases;
      io::Json counter = io::Json::array();
      for (auto const& c : counterexamples) {
        io::Json item   = io::Json::object();
        item["inputs"]  = c.inputs;
        item["witness"] = io::to_json(c.witness);
        counter.push_back(std::move(item));
      }
      j["counterexamples"] = std::move(counter);
      j["ms"]              = with_timing ? elapsed.count() : 0;
      return j;
    }

    std::string to_text(bool with_timing = true) const {
      std::string out = name + ": " + (passed() ? "PASS" : "FAIL") + " ("
                        + std::to_string(cases) + " cases, "
                        + std::to_string(counterexamples.size()) + " counterexamples)\n";
      for (auto const& c : counterexamples) {
        out += "  counterexample " + c.witness.to_string() + "  <- " + c.inputs + "\n";
      }
      if (with_timing) {
        out += "  elapsed " + std::to_string(elapsed.count()) + " ms\n";
      }
      return out;
    }
  };

  inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) {
      return jobs;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

  // Runs body(begin, end, report) over contiguous slices of [0, count) on up to
  // `jobs` threads, then merges the partial reports in canonical order, so the
  // result does not depend on the worker count.
  inline void parallel_slices(size_t                                           count,
                              unsigned                                         jobs,
                              CheckReport&                                     report,
                              std::function<void(size_t, size_t, CheckReport&)> const& body) {
    jobs = std::min<unsigned>(resolve_jobs(jobs), count == 0 ? 1 : static_cast<unsigned>(count));
    std::vector<CheckReport> partial(jobs);
    if (jobs == 1) {
      body(0, count, partial[0]);
    } else {
      std::vector<std::thread> workers;
      size_t const             chunk = (count + jobs - 1) / jobs;
      for (unsigned w = 0; w < jobs; ++w) {
        size_t begin = std::min(count, w * chunk), end = std::min(count, begin + chunk);
        workers.emplace_back([&, w, begin, end] { body(begin, end, partial[w]); });
      }
      for (auto& t : workers) {
        t.join();
      }
    }
    for (auto const& p : partial) {
      report.absorb(p);
    }
    report.canonicalize();
  }

  namespace detail {
    class Stopwatch {
     public:
      std::chrono::milliseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
      }

     private:
      std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };
  }  // namespace detail

  // Every h in the universe with h in lhs but not in rhs.
  inline CheckReport subset_check(SetDescriptor const&   lhs,
                                  SetDescriptor const&   rhs,
                                  BoundedUniverse const& universe,
                                  unsigned               jobs = 1) {
    detail::Stopwatch clock;
    CheckReport       report;
    report.name = "subset";
    parallel_slices(universe.size(), jobs, report, [&](size_t b, size_t e, CheckReport& out) {
      for (size_t i = b; i < e; ++i) {
        auto const& h = universe[i];
        ++out.cases;
        if (lhs.contains(h) && !rhs.contains(h)) {
          out.fail("lhs \\ rhs", h);
        }
      }
    });
    report.elapsed = clock.elapsed();
    return report;
  }

  inline CheckReport subset_check(SetDescriptor const& lhs, SetDescriptor const& rhs, Nat bound) {
    return subset_check(lhs, rhs, BoundedUniverse(bound));
  }

  inline CheckReport equality_check(SetDescriptor const&   lhs,
                                    SetDescriptor const&   rhs,
                                    BoundedUniverse const& universe,
                                    unsigned               jobs = 1) {
    detail::Stopwatch clock;
    CheckReport       report;
    report.name = "equality";
    parallel_slices(universe.size(), jobs, report, [&](size_t b, size_t e, CheckReport& out) {
      for (size_t i = b; i < e; ++i) {
        auto const& h = universe[i];
        ++out.cases;
        bool const in_l = lhs.contains(h), in_r = rhs.contains(h);
        if (in_l != in_r) {
          out.fail(in_l ? "lhs \\ rhs" : "rhs \\ lhs", h);
        }
      }
    });
    report.elapsed = clock.elapsed();
    return report;
  }

  inline CheckReport equality_check(SetDescriptor const& lhs, SetDescriptor const& rhs, Nat bound) {
    return equality_check(lhs, rhs, BoundedUniverse(bound));
  }

  // With c = ab, r = valid_r_min(f, c) and p = continuity_p(f, a, b, r):
  // every product de with d in W_{f,a,p}, e in W_{f,b,p} lies in W_{f,c,r}.
  inline CheckReport product_containment_check(WaningFn const&         f,
                                               PartialBijection const& a,
                                               PartialBijection const& b,
                                               BoundedUniverse const&  universe,
                                               unsigned                jobs = 1) {
    detail::Stopwatch clock;
    CheckReport       report;
    report.name = "product-containment";

    PartialBijection const c = compose(a, b);
    Nat const              r = valid_r_min(f, c);
    Nat const              p = continuity_p(f, a, b, r);
    auto const             wa = SetDescriptor::w_nbhd(f, a, p);
    auto const             wb = SetDescriptor::w_nbhd(f, b, p);
    auto const             wc = SetDescriptor::w_nbhd(f, c, r);

    std::vector<PartialBijection const*> left, right;
    for (auto const& h : universe.elements()) {
      if (wa.contains(h)) {
        left.push_back(&h);
      }
      if (wb.contains(h)) {
        right.push_back(&h);
      }
    }
    std::string const context = "f=" + io::to_json(f).dump() + " a=" + a.to_string()
                                + " b=" + b.to_string() + " p=" + std::to_string(p)
                                + " r=" + std::to_string(r);
    parallel_slices(left.size(), jobs, report, [&](size_t lo, size_t hi, CheckReport& out) {
      for (size_t i = lo; i < hi; ++i) {
        for (auto const* e : right) {
          ++out.cases;
          auto de = compose(*left[i], *e);
          if (!wc.contains(de)) {
            out.fail(context + " d=" + left[i]->to_string() + " e=" + e->to_string(),
                     std::move(de));
          }
        }
      }
    });
    report.elapsed = clock.elapsed();
    return report;
  }

}  // namespace waning

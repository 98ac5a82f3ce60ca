#pragma once

#include <algorithm>  // for find, sort, unique
#include <cstddef>    // for size_t
#include <map>        // for map
#include <set>        // for set
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "waning/errors.hpp"
#include "waning/io.hpp"
#include "waning/waning_function.hpp"

namespace waning {

  // A finite partial order on labelled elements; leq holds ordered pairs.
  class FinitePoset {
   public:
    FinitePoset(std::vector<std::string>                         elements,
                std::vector<std::pair<std::string, std::string>> leq)
        : elements_(std::move(elements)), leq_(elements_.size(), std::vector<bool>(elements_.size())) {
      std::vector<std::string> sorted = elements_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidPoset("duplicate element label");
      }
      for (auto const& [a, b] : leq) {
        leq_[index_of(a)][index_of(b)] = true;
      }
      size_t const n = elements_.size();
      for (size_t i = 0; i < n; ++i) {
        if (!leq_[i][i]) {
          throw InvalidPoset("not reflexive at " + elements_[i]);
        }
        for (size_t j = 0; j < n; ++j) {
          if (i != j && leq_[i][j] && leq_[j][i]) {
            throw InvalidPoset("not antisymmetric: " + elements_[i] + ", " + elements_[j]);
          }
          for (size_t k = 0; k < n; ++k) {
            if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) {
              throw InvalidPoset("not transitive: " + elements_[i] + " <= " + elements_[j]
                                 + " <= " + elements_[k]);
            }
          }
        }
      }
    }

    size_t size() const noexcept {
      return elements_.size();
    }

    std::vector<std::string> const& elements() const noexcept {
      return elements_;
    }

    bool leq(size_t i, size_t j) const {
      return leq_[i][j];
    }

    size_t index_of(std::string const& label) const {
      auto it = std::find(elements_.begin(), elements_.end(), label);
      if (it == elements_.end()) {
        throw InvalidPoset("unknown element \"" + label + "\"");
      }
      return static_cast<size_t>(it - elements_.begin());
    }

   private:
    std::vector<std::string>       elements_;
    std::vector<std::vector<bool>> leq_;
  };

  // x -> f_x with f_x(i) = 3(n - i) + 1 + [element i is not below x] for i < n
  // and 0 afterwards.  Down-sets grow as x grows, so x <= y iff f_x precedes
  // f_y.
  inline std::map<std::string, WaningFn> embed_poset(FinitePoset const& poset) {
    size_t const n = poset.size();
    if (n == 0) {
      throw InvalidPoset("embedding needs at least one element");
    }
    std::map<std::string, WaningFn> out;
    for (size_t x = 0; x < n; ++x) {
      std::vector<Nat> drops;
      for (size_t i = 0; i < n; ++i) {
        drops.push_back(3 * (n - i) + 1 + (poset.leq(i, x) ? 0 : 1));
      }
      out.emplace(poset.elements()[x], WaningFn::tail(0, std::move(drops)));
    }
    return out;
  }

  inline FinitePoset poset_from_json(io::Json const& j) {
    auto const& elements = io::detail::field(j, "elements");
    auto const& leq      = io::detail::field(j, "leq");
    if (!elements.is_array() || !leq.is_array()) {
      throw FormatError("poset needs arrays \"elements\" and \"leq\"");
    }
    std::vector<std::string> labels;
    for (auto const& e : elements) {
      if (!e.is_string()) {
        throw FormatError("element labels are strings");
      }
      labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto const& p : leq) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw FormatError("leq entries are pairs of labels, got " + p.dump());
      }
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return FinitePoset(std::move(labels), std::move(pairs));
  }

  // Covering pairs (i, j), i.e. fs[i] strictly precedes fs[j] with nothing
  // strictly between them.
  inline std::vector<std::pair<size_t, size_t>> covering_pairs(std::vector<WaningFn> const& fs) {
    size_t const                   k = fs.size();
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k));
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        lt[i][j] = i != j && preceq(fs[i], fs[j]) && fs[i] != fs[j];
      }
    }
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        if (!lt[i][j]) {
          continue;
        }
        bool covered = true;
        for (size_t m = 0; m < k && covered; ++m) {
          covered = !(lt[i][m] && lt[m][j]);
        }
        if (covered) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  // DOT digraph of the Hasse diagram under preceq; an edge a -> b means b
  // covers a.  Nodes are deduplicated and emitted in canonical order.
  inline std::string hasse_dot(std::vector<WaningFn> fs) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::string out = "digraph waning {\n";
    for (size_t i = 0; i < fs.size(); ++i) {
      std::string label = io::to_json(fs[i]).dump();
      std::string escaped;
      for (char c : label) {
        if (c == '"' || c == '\\') {
          escaped += '\\';
        }
        escaped += c;
      }
      out += "  n" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
    }
    for (auto const& [i, j] : covering_pairs(fs)) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
    return out + "}\n";
  }

}  // namespace waning

#ifndef PARASTD_STAIRCASE_HPP
#define PARASTD_STAIRCASE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "parastd/exponent.hpp"

namespace parastd {

/// Monomial ideal E = union of (e + N^n), kept as its antichain of minimal
/// generators in lexicographic order, so equal staircases compare equal.
class Staircase {
 public:
  Staircase() = default;
  explicit Staircase(std::size_t n) : n_(n) {}
  Staircase(std::size_t n, std::vector<Exponent> gens) : n_(n) {
    for (auto& g : gens) {
      if (g.size() != n_) throw Error(ErrorCode::DimensionMismatch, "staircase generator length");
      insert(std::move(g));
    }
  }

  /// Adds a cone, dropping generators it absorbs.
  void insert(Exponent e) {
    for (const auto& g : gens_)
      if (g.divides(e)) return;
    std::erase_if(gens_, [&](const Exponent& g) { return e.divides(g); });
    gens_.insert(std::upper_bound(gens_.begin(), gens_.end(), e), std::move(e));
  }

  bool contains(const Exponent& a) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.divides(a); });
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  bool empty() const noexcept { return gens_.empty(); }

  friend bool operator==(const Staircase&, const Staircase&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t k = 0; k < gens_[i].size(); ++k) {
        if (k) s += ",";
        s += std::to_string(gens_[i][k]);
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> gens_;
};

}  // namespace parastd

#endif  // PARASTD_STAIRCASE_HPP

#ifndef PARASTD_ORDER_HPP
#define PARASTD_ORDER_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "parastd/errors.hpp"
#include "parastd/exponent.hpp"

namespace parastd {

enum class OrderKind { Global, Local, Mixed };

inline const char* kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Global: return "global";
    case OrderKind::Local: return "local";
    case OrderKind::Mixed: return "mixed";
  }
  return "?";
}

/// Integer weight-matrix order on N^n.
///
/// Exponents are compared by the dot products with each row in turn; ties
/// left by the rows are broken lexicographically (x1 > x2 > ... > xn), so
/// the order is total for any matrix, including the empty one.
class MonomialOrder {
 public:
  using Row = std::vector<std::int64_t>;

  MonomialOrder() = default;
  MonomialOrder(std::size_t nvars, std::vector<Row> rows) : n_(nvars), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != n_)
        throw Error(ErrorCode::DimensionMismatch,
                    "weight row has length " + std::to_string(r.size()) + ", expected " +
                        std::to_string(n_));
  }

  static MonomialOrder lex(std::size_t n) { return MonomialOrder(n, {}); }

  static MonomialOrder grevlex(std::size_t n) {
    std::vector<Row> rows;
    if (n == 0) return MonomialOrder(0, {});
    rows.push_back(Row(n, 1));
    for (std::size_t k = 1; k < n; ++k) {
      Row r(n, 0);
      r[n - k] = -1;
      rows.push_back(std::move(r));
    }
    return MonomialOrder(n, std::move(rows));
  }

  /// Local degree-reverse-lexicographic order: lower total degree wins.
  static MonomialOrder neg_grevlex(std::size_t n) {
    std::vector<Row> rows;
    if (n == 0) return MonomialOrder(0, {});
    rows.push_back(Row(n, -1));
    for (std::size_t k = 1; k < n; ++k) {
      Row r(n, 0);
      r[n - k] = -1;
      rows.push_back(std::move(r));
    }
    return MonomialOrder(n, std::move(rows));
  }

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const {
    if (a.size() != n_ || b.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "exponent length does not match order dimension");
    for (const auto& row : rows_) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < n_; ++i)
        d += row[i] * (static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]));
      if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

  /// global iff every x_i > 1, local iff every x_i < 1.
  OrderKind kind() const {
    bool all_up = true, all_down = true;
    const Exponent one(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      auto c = compare(Exponent::unit(n_, i), one);
      if (c > 0) all_down = false;
      if (c < 0) all_up = false;
    }
    if (all_up) return OrderKind::Global;
    if (all_down) return OrderKind::Local;
    return OrderKind::Mixed;
  }
  bool is_global() const { return kind() == OrderKind::Global; }

  /// |a| < |b| implies x^a > x^b, checked on the first weight row.
  bool is_degree_compatible_local() const {
    if (rows_.empty() || n_ == 0) return false;
    const auto& r = rows_.front();
    for (auto w : r)
      if (w != r.front() || w >= 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "matrix [";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k) s += ",";
      s += "[";
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows_[k][i]);
      }
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Row> rows_;
};

/// The order on (x, z) used for Lazard homogenization: total degree in
/// x and z first, then `main` on the x-part. Always a well order.
inline MonomialOrder homogenized_order(const MonomialOrder& main) {
  const std::size_t n = main.nvars();
  std::vector<MonomialOrder::Row> rows;
  rows.push_back(MonomialOrder::Row(n + 1, 1));
  for (const auto& r : main.rows()) {
    auto ext = r;
    ext.push_back(0);
    rows.push_back(std::move(ext));
  }
  return MonomialOrder(n + 1, std::move(rows));
}

enum class CompositeVariant { Block, Homogenized };

/// Order on monomials a^gamma x^alpha (z^k): the x-part (or (x,z)-part)
/// decides first, then parameters lexicographically.
struct CompositeOrder {
  MonomialOrder main;
  std::size_t nparams = 0;
  CompositeVariant variant = CompositeVariant::Block;

  /// Number of x-side slots: n, or n + 1 with the homogenizing variable.
  std::size_t main_slots() const {
    return main.nvars() + (variant == CompositeVariant::Homogenized ? 1 : 0);
  }

  /// Order on x (z) first-variable slots of the combined layout.
  MonomialOrder x_order() const {
    return variant == CompositeVariant::Homogenized ? homogenized_order(main) : main;
  }

  /// The same order as a weight matrix on the concatenated layout
  /// (x, [z,] a), so the generic engine can run on it.
  MonomialOrder as_matrix() const {
    const MonomialOrder xo = x_order();
    const std::size_t s = xo.nvars();
    const std::size_t total = s + nparams;
    std::vector<MonomialOrder::Row> rows;
    for (const auto& r : xo.rows()) {
      auto ext = r;
      ext.resize(total, 0);
      rows.push_back(std::move(ext));
    }
    for (std::size_t i = 0; i < s; ++i) {
      MonomialOrder::Row r(total, 0);
      r[i] = 1;
      rows.push_back(std::move(r));
    }
    return MonomialOrder(total, std::move(rows));
  }
};

/// Compares a^gamma x^alpha against a^gamma' x^alpha'.
inline std::strong_ordering composite_compare(const CompositeOrder& order, const Exponent& gamma,
                                              const Exponent& alpha, const Exponent& gamma2,
                                              const Exponent& alpha2) {
  if (gamma.size() != order.nparams || gamma2.size() != order.nparams)
    throw Error(ErrorCode::DimensionMismatch, "parameter exponent length mismatch");
  auto c = order.x_order().compare(alpha, alpha2);
  if (c != 0) return c;
  return MonomialOrder::lex(order.nparams).compare(gamma, gamma2);
}

}  // namespace parastd

#endif  // PARASTD_ORDER_HPP

#pragma once

// Enumerated finite *-rings: Z_n with the identity involution and M_k(Z_p)
// (k <= 2, p in {2,3}) with the transpose. Elements are canonical integer
// encodings; for M_k(Z_p) the encoding reads the entries row-major as base-p
// digits, first entry most significant, so code order is row-major
// lexicographic order.

#include "bccore/linalg.hpp"
#include "bccore/ring.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

namespace bccore {

struct FiniteElement {
  std::uint32_t code = 0;
  friend auto operator<=>(const FiniteElement&, const FiniteElement&) = default;
};

/// Sorted, duplicate-free set of element encodings of one finite ring.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<std::uint32_t> codes) : codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
    codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  }

  bool contains(FiniteElement x) const { return std::binary_search(codes_.begin(), codes_.end(), x.code); }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  const std::vector<std::uint32_t>& codes() const { return codes_; }
  auto begin() const { return codes_.begin(); }
  auto end() const { return codes_.end(); }

  std::vector<FiniteElement> elements() const {
    std::vector<FiniteElement> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back({c});
    return out;
  }

  friend ElementSet intersection(const ElementSet& x, const ElementSet& y) {
    std::vector<std::uint32_t> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return ElementSet(std::move(out));
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint32_t> codes_;
};

class FiniteRing {
 public:
  using element_type = FiniteElement;

  /// Operation tables are precomputed up to this order.
  static constexpr std::uint32_t kTableLimit = 256;

  static FiniteRing integers_mod(std::uint32_t n) {
    RingDescriptor d;
    d.kind = RingDescriptor::Kind::zn;
    d.modulus = n;
    d.involution = Involution::identity;
    return FiniteRing(d);
  }

  static FiniteRing matrices_mod(std::uint32_t p, std::uint32_t k) {
    RingDescriptor d;
    d.kind = RingDescriptor::Kind::matzp;
    d.characteristic = p;
    d.dimension = k;
    d.involution = Involution::transpose;
    return FiniteRing(d);
  }

  explicit FiniteRing(const RingDescriptor& d) : desc_(d) {
    desc_.validate();
    if (d.kind == RingDescriptor::Kind::matrix) throw std::invalid_argument("not a finite ring descriptor");
    if (d.kind == RingDescriptor::Kind::zn) {
      order_ = d.modulus;
    } else {
      order_ = 1;
      for (std::uint32_t i = 0; i < d.dimension * d.dimension; ++i) order_ *= d.characteristic;
    }
    if (order_ <= kTableLimit) build_tables();
  }

  RingDescriptor descriptor() const { return desc_; }
  std::uint32_t order() const { return order_; }

  bool contains(FiniteElement x) const { return x.code < order_; }

  FiniteElement element(std::uint32_t code) const {
    if (code >= order_) throw RingMismatch("encoding " + std::to_string(code) + " outside " + desc_.to_string());
    return {code};
  }

  /// All elements in canonical order.
  auto elements() const {
    return std::views::iota(std::uint32_t{0}, order_) | std::views::transform([](std::uint32_t c) { return FiniteElement{c}; });
  }

  FiniteElement zero() const { return {0}; }
  FiniteElement one() const { return one_; }

  FiniteElement add(FiniteElement x, FiniteElement y) const {
    if (tables_) return {tables_->add[x.code * order_ + y.code]};
    return raw_add(x, y);
  }
  FiniteElement neg(FiniteElement x) const {
    if (tables_) return {tables_->neg[x.code]};
    return raw_neg(x);
  }
  FiniteElement sub(FiniteElement x, FiniteElement y) const { return add(x, neg(y)); }
  FiniteElement mul(FiniteElement x, FiniteElement y) const {
    if (tables_) return {tables_->mul[x.code * order_ + y.code]};
    return raw_mul(x, y);
  }
  FiniteElement star(FiniteElement x) const {
    if (tables_) return {tables_->star[x.code]};
    return raw_star(x);
  }

  /// Entries of an M_k(Z_p) element, row-major; a single entry for Z_n.
  std::vector<std::uint32_t> entries(FiniteElement x) const {
    if (desc_.kind == RingDescriptor::Kind::zn) return {x.code};
    const auto d = digits(x.code);
    return {d.begin(), d.begin() + desc_.dimension * desc_.dimension};
  }

  FiniteElement from_entries(const std::vector<std::uint32_t>& values) const {
    if (desc_.kind == RingDescriptor::Kind::zn) {
      if (values.size() != 1) throw RingMismatch("Zn element takes one entry");
      return {values[0] % order_};
    }
    const std::uint32_t kk = desc_.dimension * desc_.dimension;
    if (values.size() != kk) throw RingMismatch("entry count does not match MatZp dimension");
    std::array<std::uint32_t, 4> d{};
    for (std::uint32_t i = 0; i < kk; ++i) d[i] = values[i] % desc_.characteristic;
    return {encode(d)};
  }

  // -- decision hooks (exhaustive) -----------------------------------------

  /// Smallest x (in code order) with x·m = target.
  std::optional<FiniteElement> solve_left(FiniteElement m, FiniteElement target) const {
    for (auto x : elements())
      if (mul(x, m) == target) return x;
    return std::nullopt;
  }

  /// Smallest x with m·x = target.
  std::optional<FiniteElement> solve_right(FiniteElement m, FiniteElement target) const {
    for (auto x : elements())
      if (mul(m, x) == target) return x;
    return std::nullopt;
  }

  /// Smallest g with a·g·a = a; absent when a is not regular.
  std::optional<FiniteElement> inner_inverse(FiniteElement a) const {
    for (auto g : elements())
      if (mul(mul(a, g), a) == a) return g;
    return std::nullopt;
  }

  ElementSet inner_inverses(FiniteElement a) const {
    return solve_all([&](FiniteElement g) { return mul(mul(a, g), a) == a; });
  }

  /// x ∈ Rc (equivalently Rx ⊆ Rc, the ring being unital).
  bool left_ideal_contains(FiniteElement x, FiniteElement c) const { return solve_left(c, x).has_value(); }
  /// x ∈ bR.
  bool right_ideal_contains(FiniteElement x, FiniteElement b) const { return solve_right(b, x).has_value(); }

  /// l(x) ⊆ l(y)
  bool left_annihilator_contained(FiniteElement x, FiniteElement y) const {
    for (auto r : elements())
      if (mul(r, x) == zero() && mul(r, y) != zero()) return false;
    return true;
  }

  /// R = uR ⊕ r(b)
  DirectSumTest direct_sum_right_ideals(FiniteElement u, FiniteElement b) const {
    return set_direct_sum(right_ideal(u), right_annihilator(b));
  }
  /// R = Ru ⊕ l(c)
  DirectSumTest direct_sum_left_ideals(FiniteElement u, FiniteElement c) const {
    return set_direct_sum(left_ideal(u), left_annihilator(c));
  }

  // -- element sets ---------------------------------------------------------

  template <class Pred>
  ElementSet solve_all(Pred&& pred) const {
    std::vector<std::uint32_t> out;
    for (auto x : elements())
      if (pred(x)) out.push_back(x.code);
    return ElementSet(std::move(out));
  }

  /// Rc
  ElementSet left_ideal(FiniteElement c) const {
    std::vector<std::uint32_t> out;
    for (auto r : elements()) out.push_back(mul(r, c).code);
    return ElementSet(std::move(out));
  }
  /// bR
  ElementSet right_ideal(FiniteElement b) const {
    std::vector<std::uint32_t> out;
    for (auto r : elements()) out.push_back(mul(b, r).code);
    return ElementSet(std::move(out));
  }
  /// r(b) = {x : b·x = 0}
  ElementSet right_annihilator(FiniteElement b) const {
    return solve_all([&](FiniteElement x) { return mul(b, x) == zero(); });
  }
  /// l(x) = {r : r·x = 0}
  ElementSet left_annihilator(FiniteElement x) const {
    return solve_all([&](FiniteElement r) { return mul(r, x) == zero(); });
  }

  /// Both sets must be additive subgroups, so |A + B| = |A||B| / |A ∩ B|.
  DirectSumTest set_direct_sum(const ElementSet& a, const ElementSet& b) const {
    const auto common = intersection(a, b).size();
    DirectSumTest out;
    out.is_sum = std::uint64_t{a.size()} * b.size() == std::uint64_t{common} * order_;
    out.is_direct = out.is_sum && common == 1;
    return out;
  }

  std::string format(FiniteElement x) const {
    if (desc_.kind == RingDescriptor::Kind::zn) return std::to_string(x.code);
    const auto e = entries(x);
    const auto k = desc_.dimension;
    std::string out = "[";
    for (std::uint32_t i = 0; i < k; ++i) {
      out += i ? ",[" : "[";
      for (std::uint32_t j = 0; j < k; ++j) out += (j ? "," : "") + std::to_string(e[i * k + j]);
      out += "]";
    }
    return out + "]";
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> add, mul, neg, star;
  };

  std::array<std::uint32_t, 4> digits(std::uint32_t code) const {
    std::array<std::uint32_t, 4> d{};
    const std::uint32_t kk = desc_.dimension * desc_.dimension;
    for (std::uint32_t i = kk; i-- > 0;) {
      d[i] = code % desc_.characteristic;
      code /= desc_.characteristic;
    }
    return d;
  }

  std::uint32_t encode(const std::array<std::uint32_t, 4>& d) const {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < desc_.dimension * desc_.dimension; ++i) code = code * desc_.characteristic + d[i];
    return code;
  }

  FiniteElement raw_add(FiniteElement x, FiniteElement y) const {
    if (desc_.kind == RingDescriptor::Kind::zn) return {(x.code + y.code) % order_};
    auto a = digits(x.code);
    const auto b = digits(y.code);
    for (std::size_t i = 0; i < 4; ++i) a[i] = (a[i] + b[i]) % desc_.characteristic;
    return {encode(a)};
  }

  FiniteElement raw_neg(FiniteElement x) const {
    if (desc_.kind == RingDescriptor::Kind::zn) return {(order_ - x.code) % order_};
    auto a = digits(x.code);
    for (auto& v : a) v = (desc_.characteristic - v) % desc_.characteristic;
    return {encode(a)};
  }

  FiniteElement raw_mul(FiniteElement x, FiniteElement y) const {
    if (desc_.kind == RingDescriptor::Kind::zn) return {static_cast<std::uint32_t>(std::uint64_t{x.code} * y.code % order_)};
    const auto a = digits(x.code);
    const auto b = digits(y.code);
    const auto k = desc_.dimension;
    std::array<std::uint32_t, 4> c{};
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) {
        std::uint32_t s = 0;
        for (std::uint32_t t = 0; t < k; ++t) s += a[i * k + t] * b[t * k + j];
        c[i * k + j] = s % desc_.characteristic;
      }
    return {encode(c)};
  }

  FiniteElement raw_star(FiniteElement x) const {
    if (desc_.kind == RingDescriptor::Kind::zn) return x;
    const auto a = digits(x.code);
    const auto k = desc_.dimension;
    std::array<std::uint32_t, 4> t{};
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) t[j * k + i] = a[i * k + j];
    return {encode(t)};
  }

  void build_tables() {
    auto t = std::make_shared<Tables>();
    t->add.resize(std::size_t{order_} * order_);
    t->mul.resize(std::size_t{order_} * order_);
    t->neg.resize(order_);
    t->star.resize(order_);
    for (std::uint32_t x = 0; x < order_; ++x) {
      t->neg[x] = raw_neg({x}).code;
      t->star[x] = raw_star({x}).code;
      for (std::uint32_t y = 0; y < order_; ++y) {
        t->add[x * order_ + y] = raw_add({x}, {y}).code;
        t->mul[x * order_ + y] = raw_mul({x}, {y}).code;
      }
    }
    tables_ = std::move(t);
  }

  RingDescriptor desc_;
  std::uint32_t order_ = 0;
  FiniteElement one_{compute_one()};
  std::shared_ptr<const Tables> tables_;

  FiniteElement compute_one() const {
    if (desc_.kind == RingDescriptor::Kind::zn) return {desc_.modulus > 1 ? 1u : 0u};
    std::array<std::uint32_t, 4> d{};
    for (std::uint32_t i = 0; i < desc_.dimension; ++i) d[i * desc_.dimension + i] = 1;
    return {encode(d)};
  }
};

}  // namespace bccore

#pragma once

#include "bccore/linalg.hpp"
#include "bccore/ring.hpp"

#include <optional>
#include <string>
#include <type_traits>

namespace bccore {

/// M_n(F) with transpose or conjugate-transpose as involution.
template <class Field>
class MatrixRing {
 public:
  using field_type = Field;
  using scalar_type = typename Field::value_type;
  using element_type = Matrix<scalar_type>;

  MatrixRing(Field field, std::size_t n, Involution involution = Involution::transpose)
      : field_(std::move(field)), n_(n), involution_(involution) {
    if (n_ == 0) throw std::invalid_argument("matrix ring dimension must be >= 1");
    if (involution_ == Involution::identity) throw std::invalid_argument("matrix rings need transpose or conjugate-transpose");
    if (involution_ == Involution::conjugate_transpose && !Field::is_complex)
      throw std::invalid_argument("conjugate-transpose requires gaussian-rationals");
  }

  const Field& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  Involution involution() const { return involution_; }

  RingDescriptor descriptor() const {
    RingDescriptor d;
    d.kind = RingDescriptor::Kind::matrix;
    d.dimension = static_cast<std::uint32_t>(n_);
    d.involution = involution_;
    if constexpr (std::is_same_v<Field, RationalField>) {
      d.scalar = ScalarKind::rational;
    } else if constexpr (std::is_same_v<Field, GaussianRationalField>) {
      d.scalar = ScalarKind::gaussian_rational;
    } else {
      d.scalar = ScalarKind::prime_field;
      d.characteristic = field_.characteristic();
    }
    return d;
  }

  bool contains(const element_type& x) const { return x.rows() == n_ && x.cols() == n_; }

  element_type zero() const { return zeros(field_, n_, n_); }
  element_type one() const { return identity(field_, n_); }
  element_type add(const element_type& x, const element_type& y) const { return bccore::add(field_, x, y); }
  element_type sub(const element_type& x, const element_type& y) const { return subtract(field_, x, y); }
  element_type neg(const element_type& x) const { return negate(field_, x); }
  element_type mul(const element_type& x, const element_type& y) const { return multiply(field_, x, y); }
  element_type star(const element_type& x) const {
    return involution_ == Involution::conjugate_transpose ? conjugate_transpose(field_, x) : transpose(x);
  }

  /// Builds an element from row-major entries.
  element_type make(std::initializer_list<std::initializer_list<long>> rows) const {
    auto m = zero();
    if (rows.size() != n_) throw RingMismatch("row count does not match ring dimension");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw RingMismatch("column count does not match ring dimension");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = field_.from_int(v);
      ++i;
    }
    return m;
  }

  std::optional<element_type> solve_left(const element_type& m, const element_type& target) const {
    return bccore::solve_left(field_, m, target);
  }
  std::optional<element_type> solve_right(const element_type& m, const element_type& target) const {
    return bccore::solve_right(field_, m, target);
  }
  /// Every matrix over a field is regular.
  std::optional<element_type> inner_inverse(const element_type& a) const { return bccore::inner_inverse(field_, a); }

  bool left_ideal_contains(const element_type& x, const element_type& c) const {
    return bccore::left_ideal_contains(field_, x, c);
  }
  bool right_ideal_contains(const element_type& x, const element_type& b) const {
    return bccore::right_ideal_contains(field_, x, b);
  }
  bool left_annihilator_contained(const element_type& x, const element_type& y) const {
    return bccore::left_annihilator_contained(field_, x, y);
  }
  DirectSumTest direct_sum_right_ideals(const element_type& u, const element_type& b) const {
    return bccore::direct_sum_right_ideals(field_, u, b);
  }
  DirectSumTest direct_sum_left_ideals(const element_type& u, const element_type& c) const {
    return bccore::direct_sum_left_ideals(field_, u, c);
  }

  std::string format(const element_type& x) const {
    std::string out = "[";
    for (std::size_t i = 0; i < x.rows(); ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < x.cols(); ++j) out += (j ? "," : "") + field_.format(x(i, j));
      out += "]";
    }
    return out + "]";
  }

 private:
  Field field_;
  std::size_t n_;
  Involution involution_;
};

}  // namespace bccore

#pragma once

// The *-ring contract shared by every instantiable ring, plus the predicates
// and the Pierce decomposition that only need that contract.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bccore {

/// Elements of two different rings were combined.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element that was required to be idempotent is not.
class NotIdempotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class ScalarKind { rational, gaussian_rational, prime_field };
enum class Involution { identity, transpose, conjugate_transpose };

/// Identifies one concrete *-ring from the closed catalogue:
///   matrix  M_n over Q, Q(i) or GF(p), involution transpose or conjugate-transpose
///   zn      Z_n, identity involution
///   matzp   M_k(Z_p), p in {2,3}, k in {1,2}, transpose
struct RingDescriptor {
  enum class Kind { matrix, zn, matzp };

  Kind kind = Kind::zn;
  ScalarKind scalar = ScalarKind::rational;  // matrix only
  std::uint32_t characteristic = 0;          // prime-field matrix rings and matzp
  std::uint32_t dimension = 1;               // n for matrix, k for matzp
  std::uint32_t modulus = 2;                 // zn only
  Involution involution = Involution::identity;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

  /// Throws std::invalid_argument when the combination is outside the catalogue.
  void validate() const;

  /// Canonical descriptor string, e.g. "Zn:6", "MatZp:2x2:p2", "Mat:Q:3",
  /// "Mat:QI:2:ct", "Mat:GF7:2".
  std::string to_string() const;
};

inline void RingDescriptor::validate() const {
  switch (kind) {
    case Kind::zn:
      if (modulus < 2) throw std::invalid_argument("Zn modulus must be >= 2");
      if (involution != Involution::identity) throw std::invalid_argument("Zn carries the identity involution");
      return;
    case Kind::matzp:
      if (characteristic != 2 && characteristic != 3) throw std::invalid_argument("MatZp supports p in {2,3}");
      if (dimension != 1 && dimension != 2) throw std::invalid_argument("MatZp supports k in {1,2}");
      if (involution != Involution::transpose) throw std::invalid_argument("MatZp carries the transpose involution");
      return;
    case Kind::matrix:
      if (dimension < 1) throw std::invalid_argument("matrix dimension must be >= 1");
      if (involution == Involution::identity) throw std::invalid_argument("matrix rings use transpose or conjugate-transpose");
      if (involution == Involution::conjugate_transpose && scalar != ScalarKind::gaussian_rational)
        throw std::invalid_argument("conjugate-transpose requires gaussian-rationals");
      if (scalar == ScalarKind::prime_field) {
        bool prime = characteristic >= 2;
        for (std::uint32_t d = 2; prime && std::uint64_t{d} * d <= characteristic; ++d) prime = characteristic % d != 0;
        if (!prime) throw std::invalid_argument("prime field characteristic must be prime");
      }
      return;
  }
}

inline std::string RingDescriptor::to_string() const {
  switch (kind) {
    case Kind::zn:
      return "Zn:" + std::to_string(modulus);
    case Kind::matzp: {
      const auto k = std::to_string(dimension);
      return "MatZp:" + k + "x" + k + ":p" + std::to_string(characteristic);
    }
    case Kind::matrix: {
      std::string field = scalar == ScalarKind::rational            ? "Q"
                          : scalar == ScalarKind::gaussian_rational ? "QI"
                                                                    : "GF" + std::to_string(characteristic);
      std::string out = "Mat:" + field + ":" + std::to_string(dimension);
      if (scalar == ScalarKind::gaussian_rational) out += involution == Involution::conjugate_transpose ? ":ct" : ":t";
      return out;
    }
  }
  return {};
}

/// What an algorithm in this library needs from a ring.
///
/// Besides the *-ring operations, a ring supplies the decision procedures
/// that the generic algorithms quantify over: one-sided linear equations,
/// a deterministic inner inverse, principal-ideal and annihilator
/// containment, and the two direct-sum tests. Matrix rings answer these
/// with subspace computations, finite rings by enumeration.
template <class R>
concept StarRing = requires(const R& r, const typename R::element_type& x) {
  typename R::element_type;
  { r.descriptor() } -> std::convertible_to<RingDescriptor>;
  { r.contains(x) } -> std::convertible_to<bool>;
  { r.zero() } -> std::same_as<typename R::element_type>;
  { r.one() } -> std::same_as<typename R::element_type>;
  { r.add(x, x) } -> std::same_as<typename R::element_type>;
  { r.sub(x, x) } -> std::same_as<typename R::element_type>;
  { r.neg(x) } -> std::same_as<typename R::element_type>;
  { r.mul(x, x) } -> std::same_as<typename R::element_type>;
  { r.star(x) } -> std::same_as<typename R::element_type>;
  { x == x } -> std::convertible_to<bool>;
  { r.solve_left(x, x) } -> std::same_as<std::optional<typename R::element_type>>;
  { r.solve_right(x, x) } -> std::same_as<std::optional<typename R::element_type>>;
  { r.inner_inverse(x) } -> std::same_as<std::optional<typename R::element_type>>;
  { r.left_ideal_contains(x, x) } -> std::convertible_to<bool>;
  { r.right_ideal_contains(x, x) } -> std::convertible_to<bool>;
  { r.left_annihilator_contained(x, x) } -> std::convertible_to<bool>;
  { r.direct_sum_right_ideals(x, x).is_direct } -> std::convertible_to<bool>;
  { r.direct_sum_left_ideals(x, x).is_sum } -> std::convertible_to<bool>;
  { r.format(x) } -> std::convertible_to<std::string>;
};

template <StarRing R>
using Elem = typename R::element_type;

template <StarRing R, class... Es>
void require_members(const R& ring, const Es&... xs) {
  if (!(ring.contains(xs) && ...)) throw RingMismatch("element does not belong to ring " + ring.descriptor().to_string());
}

template <StarRing R>
Elem<R> mul(const R& r, const Elem<R>& x, const Elem<R>& y, const Elem<R>& z) {
  return r.mul(r.mul(x, y), z);
}

template <StarRing R>
Elem<R> mul(const R& r, const Elem<R>& x, const Elem<R>& y, const Elem<R>& z, const Elem<R>& w) {
  return r.mul(r.mul(r.mul(x, y), z), w);
}

/// x^k, with x^0 = 1.
template <StarRing R>
Elem<R> power(const R& r, const Elem<R>& x, unsigned k) {
  Elem<R> out = r.one();
  for (unsigned i = 0; i < k; ++i) out = r.mul(out, x);
  return out;
}

template <StarRing R>
bool is_idempotent(const R& r, const Elem<R>& e) {
  return r.mul(e, e) == e;
}

/// p·p = p = p*
template <StarRing R>
bool is_projection(const R& r, const Elem<R>& p) {
  return is_idempotent(r, p) && r.star(p) == p;
}

template <StarRing R>
bool is_symmetric(const R& r, const Elem<R>& x) {
  return r.star(x) == x;
}

/// Blocks of a relative to an idempotent p:
///   a1 = p a p, a2 = p a (1-p), a3 = (1-p) a p, a4 = (1-p) a (1-p).
template <class E>
struct PierceBlocks {
  E p;
  E a1, a2, a3, a4;
};

/// Block split without the idempotency check; the blocks only reconstruct a
/// when p is idempotent.
template <StarRing R>
PierceBlocks<Elem<R>> formal_pierce_blocks(const R& r, const Elem<R>& a, const Elem<R>& p) {
  const auto q = r.sub(r.one(), p);
  return {p, mul(r, p, a, p), mul(r, p, a, q), mul(r, q, a, p), mul(r, q, a, q)};
}

template <StarRing R>
PierceBlocks<Elem<R>> pierce_blocks(const R& r, const Elem<R>& a, const Elem<R>& p) {
  require_members(r, a, p);
  if (!is_idempotent(r, p)) throw NotIdempotent("pierce_blocks: p is not idempotent");
  return formal_pierce_blocks(r, a, p);
}

template <StarRing R>
Elem<R> reconstruct(const R& r, const PierceBlocks<Elem<R>>& blocks) {
  return r.add(r.add(blocks.a1, blocks.a2), r.add(blocks.a3, blocks.a4));
}

}  // namespace bccore

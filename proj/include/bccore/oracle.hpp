#pragma once

// Brute-force ground truth on finite rings and the theorem batteries.
//
// A battery runs one theorem check over a corpus of tuples: every tuple of a
// finite ring (exhaustive), seeded random tuples of a finite ring (sampled),
// or seeded random matrix tuples over Q. Checks call the ginverse operations
// and, on finite rings, compare against literal evaluation of the defining
// quantifiers.

#include "bccore/finite_ring.hpp"
#include "bccore/ginverse.hpp"
#include "bccore/matrix_ring.hpp"
#include "bccore/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace bccore {

class CorpusTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Bit sets over element codes

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Principal ideals and annihilators of every element of a finite ring,
/// tabulated once.
class FiniteOracle {
 public:
  using E = FiniteElement;

  explicit FiniteOracle(const FiniteRing& r) : r_(r), n_(r.order()) {
    left_.assign(n_, Bits(n_));
    right_.assign(n_, Bits(n_));
    lann_.assign(n_, Bits(n_));
    rann_.assign(n_, Bits(n_));
    for (std::uint32_t x = 0; x < n_; ++x) {
      for (std::uint32_t y = 0; y < n_; ++y) {
        const auto p = r.mul({x}, {y}).code;
        left_[y].set(p);   // x·y ∈ Ry
        right_[x].set(p);  // x·y ∈ xR
        if (p == 0) {
          lann_[y].set(x);  // x ∈ l(y)
          rann_[x].set(y);  // y ∈ r(x)
        }
      }
      const E e{x};
      if (r.mul(e, e) == e) {
        idempotents_.push_back(e);
        if (r.star(e) == e) projections_.push_back(e);
      }
    }
  }

  const FiniteRing& ring() const { return r_; }
  std::uint32_t order() const { return n_; }

  /// Rc
  const Bits& left_ideal(E c) const { return left_[c.code]; }
  /// bR
  const Bits& right_ideal(E b) const { return right_[b.code]; }
  /// l(x)
  const Bits& left_annihilator(E x) const { return lann_[x.code]; }
  /// r(b)
  const Bits& right_annihilator(E b) const { return rann_[b.code]; }

  bool in_left(E x, E c) const { return left_[c.code].test(x.code); }
  bool in_right(E x, E b) const { return right_[b.code].test(x.code); }

  const std::vector<E>& idempotents() const { return idempotents_; }
  const std::vector<E>& projections() const { return projections_; }

  template <class Pred>
  ElementSet solutions(Pred&& pred) const {
    return r_.solve_all(std::forward<Pred>(pred));
  }

  /// R = A + B and A ∩ B = 0 for additive subgroups given as bit sets.
  DirectSumTest direct_sum(const Bits& a, const Bits& b) const {
    std::size_t common = 0;
    for (std::uint32_t i = 0; i < n_; ++i) common += a.test(i) && b.test(i);
    DirectSumTest out;
    out.is_sum = std::uint64_t{a.count()} * b.count() == std::uint64_t{common} * n_;
    out.is_direct = out.is_sum && common == 1;
    return out;
  }

 private:
  const FiniteRing& r_;
  std::uint32_t n_;
  std::vector<Bits> left_, right_, lann_, rann_;
  std::vector<E> idempotents_, projections_;
};

// ---------------------------------------------------------------------------
// Literal definitions

/// Tests the defining conditions of `kind` for x, with every ideal and
/// annihilator taken from the oracle's tables.
inline bool satisfies(const FiniteOracle& o, InverseKind kind, const InverseInputs<FiniteElement>& in,
                      FiniteElement x) {
  const auto& r = o.ring();
  const auto a = in.a;
  auto m = [&](FiniteElement p, FiniteElement q) { return r.mul(p, q); };
  auto sym = [&](FiniteElement p) { return r.star(p) == p; };
  switch (kind) {
    case InverseKind::inner:
      return m(m(a, x), a) == a;
    case InverseKind::inv13:
      return m(m(a, x), a) == a && sym(m(a, x));
    case InverseKind::inv14:
      return m(m(a, x), a) == a && sym(m(x, a));
    case InverseKind::moore_penrose:
      return m(m(a, x), a) == a && m(m(x, a), x) == x && sym(m(a, x)) && sym(m(x, a));
    case InverseKind::left_bc:
      return o.in_left(x, *in.c) && m(m(x, a), *in.b) == *in.b;
    case InverseKind::right_bc:
      return o.in_right(x, *in.b) && m(m(*in.c, a), x) == *in.c;
    case InverseKind::strongly_left_bc:
      return m(m(x, a), x) == x && o.right_ideal(x) == o.right_ideal(*in.b) && o.in_left(x, *in.c);
    case InverseKind::left_dual_bc_core: {
      const auto b = *in.b;
      const auto xab = m(m(x, a), b);
      return o.in_left(x, *in.c) && m(b, xab) == b && sym(xab);
    }
    case InverseKind::dual_bc_core: {
      const auto b = *in.b, c = *in.c;
      return m(m(m(b, x), a), b) == b && o.right_ideal(x) == o.right_ideal(r.star(b)) &&
             o.left_ideal(x) == o.left_ideal(c);
    }
    case InverseKind::bc_core: {
      const auto b = *in.b, c = *in.c;
      return m(m(m(c, a), x), c) == c && o.right_ideal(x) == o.right_ideal(b) &&
             o.left_ideal(x) == o.left_ideal(r.star(c));
    }
    case InverseKind::right_bc_core: {
      const auto b = *in.b, c = *in.c;
      const auto cax = m(m(c, a), x);
      return o.in_right(x, b) && m(cax, c) == c && sym(cax);
    }
    case InverseKind::left_dual_core:
      return m(m(a, x), a) == a && sym(m(x, a)) && m(m(x, x), a) == x;
    case InverseKind::left_dual_pseudo_core: {
      if (!(sym(m(x, a)) && m(m(x, x), a) == x)) return false;
      const unsigned bound = in.k_max ? in.k_max : o.order();
      auto ak = a;
      for (unsigned k = 1; k <= bound; ++k, ak = m(ak, a))
        if (m(m(ak, x), a) == ak) return true;
      return false;
    }
    case InverseKind::left_dual_v_core: {
      const auto xva = m(m(x, *in.v), a);
      return m(a, xva) == a && sym(xva) && m(x, xva) == x;
    }
    case InverseKind::left_invertible:
      return m(x, a) == r.one();
  }
  return false;
}

template <class E>
struct SolutionSet {
  RingDescriptor ring;
  InverseKind kind{};
  InverseInputs<E> inputs;
  ElementSet witnesses;
};

inline SolutionSet<FiniteElement> brute_force(const FiniteOracle& o, InverseKind kind,
                                              const InverseInputs<FiniteElement>& in) {
  return {o.ring().descriptor(), kind, in, o.solutions([&](FiniteElement x) { return satisfies(o, kind, in, x); })};
}

/// Complete witness set for `kind` by scanning the ring.
inline SolutionSet<FiniteElement> brute_force(const FiniteRing& r, InverseKind kind,
                                              const InverseInputs<FiniteElement>& in) {
  FiniteOracle o(r);
  return brute_force(o, kind, in);
}

/// Pseudo core witnesses at a fixed index k.
inline ElementSet pseudo_core_witnesses_at(const FiniteOracle& o, FiniteElement a, unsigned k) {
  const auto& r = o.ring();
  const auto ak = power(r, a, k);
  return o.solutions([&](FiniteElement x) {
    const auto xa = r.mul(x, a);
    return mul(r, ak, x, a) == ak && r.star(xa) == xa && mul(r, x, x, a) == x;
  });
}

// ---------------------------------------------------------------------------
// Theorem tags

enum class Theorem {
  seven_condition,
  existence_criteria,
  equivalence_14,
  formulas,
  power_identity,
  direct_sum,
  pierce,
  specialization,
  v_core,
  pseudo_core,
  decomposition,
  mp_equivalence,
  coincidence,
  one_sided_duality,
  mixed_inverse,
  final_equivalence,
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::seven_condition, Theorem::existence_criteria, Theorem::equivalence_14, Theorem::formulas,
    Theorem::power_identity,  Theorem::direct_sum,         Theorem::pierce,         Theorem::specialization,
    Theorem::v_core,          Theorem::pseudo_core,        Theorem::decomposition,  Theorem::mp_equivalence,
    Theorem::coincidence,     Theorem::one_sided_duality,  Theorem::mixed_inverse,  Theorem::final_equivalence,
};

inline std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::seven_condition: return "seven-condition";
    case Theorem::existence_criteria: return "existence-criteria";
    case Theorem::equivalence_14: return "equivalence-14";
    case Theorem::formulas: return "formulas";
    case Theorem::power_identity: return "power-identity";
    case Theorem::direct_sum: return "direct-sum";
    case Theorem::pierce: return "pierce";
    case Theorem::specialization: return "specialization";
    case Theorem::v_core: return "v-core";
    case Theorem::pseudo_core: return "pseudo-core";
    case Theorem::decomposition: return "decomposition";
    case Theorem::mp_equivalence: return "mp-equivalence";
    case Theorem::coincidence: return "coincidence";
    case Theorem::one_sided_duality: return "one-sided-duality";
    case Theorem::mixed_inverse: return "mixed-inverse";
    case Theorem::final_equivalence: return "final-equivalence";
  }
  return "?";
}

inline std::optional<Theorem> parse_theorem(std::string_view s) {
  for (auto t : kAllTheorems)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

/// Number of ring elements in one tuple.
inline unsigned arity(Theorem t) {
  switch (t) {
    case Theorem::specialization:
    case Theorem::pseudo_core:
    case Theorem::mp_equivalence:
      return 1;
    case Theorem::v_core:
    case Theorem::decomposition:
      return 2;
    case Theorem::mixed_inverse:
      return 4;
    default:
      return 3;
  }
}

// ---------------------------------------------------------------------------
// Per-tuple checks

/// Result of one tuple: failed expectations, or not applicable.
struct Outcome {
  bool applicable = true;
  std::vector<std::string> failed;
  std::vector<std::string> printed;  // literal readings known to differ; reported, not failed

  void note_printed(bool ok, std::string_view label) {
    if (!ok) printed.emplace_back(label);
  }

  void expect(bool ok, std::string_view label) {
    if (!ok) failed.emplace_back(label);
  }
  void skip() { applicable = false; }
  bool agrees() const { return failed.empty(); }
};

namespace checks {

template <StarRing R>
constexpr bool is_finite = std::is_same_v<R, FiniteRing>;

template <StarRing R>
using Tuple = std::vector<Elem<R>>;

inline bool nonempty(const FiniteOracle& o, InverseKind kind, const InverseInputs<FiniteElement>& in) {
  for (std::uint32_t x = 0; x < o.order(); ++x)
    if (satisfies(o, kind, in, {x})) return true;
  return false;
}

template <class Pred>
bool exists_element(const FiniteOracle& o, Pred&& pred) {
  for (std::uint32_t x = 0; x < o.order(); ++x)
    if (pred(FiniteElement{x})) return true;
  return false;
}

template <StarRing R>
bool verifies(const R& r, InverseKind kind, const InverseInputs<Elem<R>>& in, const std::optional<Elem<R>>& x) {
  return x && verify(r, kind, in, *x).overall;
}

template <StarRing R>
void existence_criteria(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto items = exists_by_criteria(r, a, b, c);
  const auto canonical = left_dual_bc_core(r, a, b, c);
  out.expect(all_agree(items), "criteria disagree: " + describe(items));
  out.expect(items.front().holds == canonical.has_value(), "decision differs from compute");
  if (canonical) out.expect(verifies(r, InverseKind::left_dual_bc_core, InverseInputs<Elem<R>>::bc(a, b, c), canonical), "canonical fails verify");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto sols = brute_force(o, InverseKind::left_dual_bc_core, InverseInputs<FiniteElement>::bc(a, b, c));
    out.expect(sols.witnesses.empty() != items.front().holds, "oracle differs from decision");
    if (canonical) out.expect(sols.witnesses.contains(*canonical), "canonical outside oracle set");
  }
}

template <StarRing R>
void equivalence_14(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto in = InverseInputs<Elem<R>>::bc(a, b, c);
  const bool left_bc = left_bc_inverse(r, a, b, c).has_value();
  const bool items[] = {left_bc && inv_14(r, b).has_value(), left_bc && inv_14(r, r.mul(a, b)).has_value(),
                        left_bc && inv_14(r, mul(r, c, a, b)).has_value()};
  out.expect(items[0] == items[1] && items[1] == items[2], "items 2-4 disagree");
  const auto canonical = left_dual_bc_core(r, a, b, c);
  out.expect(canonical.has_value() == items[0], "compute differs from item 2");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const bool brute = nonempty(o, InverseKind::left_dual_bc_core, in);
    out.expect(brute == items[0], "oracle differs from items");
    // {1,4}-inverses and left (b,c)-inverses are each decided by literal scans
    const bool b14 = nonempty(o, InverseKind::inv14, InverseInputs<FiniteElement>::element(b));
    const bool ab14 = nonempty(o, InverseKind::inv14, InverseInputs<FiniteElement>::element(r.mul(a, b)));
    const bool cab14 = nonempty(o, InverseKind::inv14, InverseInputs<FiniteElement>::element(mul(r, c, a, b)));
    const bool lbc = nonempty(o, InverseKind::left_bc, in);
    out.expect((lbc && b14) == brute && (lbc && ab14) == brute && (lbc && cab14) == brute, "literal items disagree");
  }
  if (!canonical) return;
  for (const auto& f : left_dual_bc_core_all_formulas(r, a, b, c)) {
    if (f.tag == FormulaTag::b14_al || f.tag == FormulaTag::ab14_a_al || f.tag == FormulaTag::cab14_c)
      out.expect(verify(r, InverseKind::left_dual_bc_core, in, f.value).overall, "closed form " + f.tag + " fails");
  }
}

template <StarRing R>
void formulas(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto in = InverseInputs<Elem<R>>::bc(a, b, c);
  const auto canonical = left_dual_bc_core(r, a, b, c);
  if (!canonical) {
    bool threw = false;
    try {
      left_dual_bc_core_all_formulas(r, a, b, c);
    } catch (const NotInvertible&) {
      threw = true;
    }
    out.expect(threw, "formulas did not reject a non-invertible tuple");
    out.skip();
    return;
  }
  for (const auto& f : left_dual_bc_core_all_formulas(r, a, b, c))
    out.expect(verify(r, InverseKind::left_dual_bc_core, in, f.value).overall, "formula " + f.tag + " fails");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto ab = r.mul(a, b);
    const auto cab = r.mul(c, ab);
    const auto ab_inner = r.inner_inverses(ab);
    const auto cab_inner = r.inner_inverses(cab);
    const auto b14s = brute_force(o, InverseKind::inv14, InverseInputs<FiniteElement>::element(b)).witnesses;
    const auto als = brute_force(o, InverseKind::left_bc, in).witnesses;
    const auto cores = brute_force(o, InverseKind::left_dual_bc_core, in).witnesses;
    for (auto x : cores)
      for (auto g : ab_inner)
        out.expect(satisfies(o, InverseKind::left_dual_bc_core, in, q_inner_p(r, a, b, {x}, {g})),
                   "q(ab)^-p fails for some witness and inner inverse");
    for (auto s : b14s) {
      for (auto g : cab_inner)
        out.expect(satisfies(o, InverseKind::left_dual_bc_core, in, mul(r, {s}, b, {g}, c)),
                   "b14*b*(cab)^-*c fails for some choice");
      for (auto al : als)
        out.expect(satisfies(o, InverseKind::left_dual_bc_core, in, r.mul({s}, {al})), "b14*al fails for some choice");
    }
  }
}

template <StarRing R>
void power_identity(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto in = InverseInputs<Elem<R>>::bc(a, b, c);
  std::vector<Elem<R>> witnesses;
  const auto canonical = left_dual_bc_core(r, a, b, c);
  if (canonical) {
    witnesses.push_back(*canonical);
    for (const auto& f : left_dual_bc_core_all_formulas(r, a, b, c)) witnesses.push_back(f.value);
  }
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    for (auto x : brute_force(o, InverseKind::left_dual_bc_core, in).witnesses) witnesses.push_back({x});
    // the converse at n = 2: a witness of the squared conditions yields one of the definition
    const auto squared = o.solutions([&](FiniteElement x) {
      if (!o.in_left(x, c)) return false;
      const auto q = mul(r, x, a, b);
      const auto q2 = r.mul(q, q);
      return r.mul(b, q2) == b && r.star(q2) == q2;
    });
    out.expect(squared.empty() == !canonical.has_value(), "n=2 criterion differs from existence");
    for (auto x : squared) {
      const auto y = r.mul(mul(r, {x}, a, b), {x});
      out.expect(satisfies(o, InverseKind::left_dual_bc_core, in, y), "(xab)x from n=2 witness fails");
    }
  }
  if (witnesses.empty()) {
    out.skip();
    return;
  }
  for (const auto& x : witnesses) {
    const auto q = mul(r, x, a, b);
    auto qn = q;
    for (int n = 1; n <= 4; ++n, qn = r.mul(qn, q)) {
      out.expect(r.mul(b, qn) == b, "b(xab)^n != b");
      out.expect(is_symmetric(r, qn), "(xab)^n not symmetric");
    }
  }
}

template <StarRing R>
void direct_sum(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto cab_star = r.star(mul(r, c, a, b));
  const auto ds = r.direct_sum_right_ideals(cab_star, b);
  const bool exists = left_dual_bc_core(r, a, b, c).has_value();
  out.expect(ds.is_direct == exists, "direct sum differs from existence");
  out.expect(ds.is_sum == exists, "sum differs from existence");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto literal = o.direct_sum(o.right_ideal(cab_star), o.right_annihilator(b));
    out.expect(literal.is_direct == ds.is_direct && literal.is_sum == ds.is_sum, "set-level sum differs");
  }
}

template <StarRing R>
void seven_condition(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto ab = r.mul(a, b);
  const auto bs = r.star(b);
  const auto canonical = left_dual_bc_core(r, a, b, c);
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto in = InverseInputs<FiniteElement>::bc(a, b, c);
    auto eq = [&](FiniteElement x) { return mul(r, b, x, ab) == b; };
    const bool item[8] = {
        false,
        nonempty(o, InverseKind::left_dual_bc_core, in),
        exists_element(o,
                       [&](FiniteElement x) {
                         const auto xab = r.mul(x, ab);
                         return o.in_left(x, c) && eq(x) && is_symmetric(r, xab) && r.mul(xab, x) == x;
                       }),
        exists_element(o, [&](FiniteElement x) { return eq(x) && o.right_ideal(x) == o.right_ideal(bs) && o.in_left(x, c); }),
        exists_element(o, [&](FiniteElement x) {
          return eq(x) && o.left_annihilator(x) == o.left_annihilator(bs) && o.in_left(x, c);
        }),
        exists_element(o, [&](FiniteElement x) { return eq(x) && o.in_left(x, c) && o.in_right(x, bs); }),
        exists_element(o, [&](FiniteElement x) {
          return eq(x) && o.in_left(x, c) && o.left_annihilator(bs).subset_of(o.left_annihilator(x));
        }),
        std::any_of(o.projections().begin(), o.projections().end(),
                    [&](FiniteElement q) { return o.in_left(b, q) && o.in_left(q, ab); }) &&
            std::any_of(o.idempotents().begin(), o.idempotents().end(),
                        [&](FiniteElement p) { return o.in_left(p, c) && o.in_right(ab, p); }),
    };
    for (int i = 2; i <= 7; ++i) out.expect(item[i] == item[1], "item " + std::to_string(i) + " differs from item 1");
    out.expect(item[1] == canonical.has_value(), "oracle differs from compute");
    const auto inner = r.inner_inverses(ab);
    for (auto x : brute_force(o, InverseKind::left_dual_bc_core, in).witnesses)
      for (auto g : inner)
        out.expect(satisfies(o, InverseKind::left_dual_bc_core, in, q_inner_p(r, a, b, {x}, {g})), "q(ab)^-p fails");
  } else {
    // Walk the chain 1 => 2 => ... => 7 => 1 on the canonical witness.
    if (!canonical) {
      out.skip();
      return;
    }
    const auto y = *canonical;
    const auto x = r.mul(r.mul(y, ab), y);
    const auto xab = r.mul(x, ab);
    const bool eq = r.mul(b, xab) == b;
    out.expect(r.left_ideal_contains(x, c) && eq && is_symmetric(r, xab) && r.mul(xab, x) == x, "item 2");
    out.expect(eq && r.right_ideal_contains(x, bs) && r.right_ideal_contains(bs, x) && r.left_ideal_contains(x, c), "item 3");
    out.expect(r.left_annihilator_contained(x, bs) && r.left_annihilator_contained(bs, x), "item 4");
    out.expect(r.left_annihilator_contained(bs, x), "item 6");
    const auto q = xab;
    const auto p = r.mul(ab, x);
    out.expect(is_projection(r, q) && is_idempotent(r, p), "item 7 q/p");
    out.expect(r.left_ideal_contains(b, q) && r.left_ideal_contains(q, ab) && r.left_ideal_contains(p, c) &&
                   r.right_ideal_contains(ab, p),
               "item 7 containments");
    const auto back = mul(r, q, *r.inner_inverse(ab), p);
    out.expect(verify(r, InverseKind::left_dual_bc_core, InverseInputs<Elem<R>>::bc(a, b, c), back).overall, "q(ab)^-p fails");
  }
}

template <StarRing R>
Elem<R> corruption(const R& r, const Elem<R>& x, int which) {
  if constexpr (is_finite<R>) {
    const auto n = r.order();
    return r.add(x, FiniteElement{static_cast<std::uint32_t>(which == 0 ? 1 : n - 1)});
  } else {
    auto e = r.zero();
    const std::size_t n = e.rows();
    e(which % n, (which * 7 + 1) % n) = r.field().one();
    return r.add(x, which == 0 ? r.one() : e);
  }
}

template <StarRing R>
void pierce(const R& r, const void*, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto in = InverseInputs<Elem<R>>::bc(a, b, c);
  const auto canonical = left_dual_bc_core(r, a, b, c);
  if (!canonical) {
    out.skip();
    return;
  }
  std::vector<Elem<R>> candidates{*canonical};
  for (const auto& f : left_dual_bc_core_all_formulas(r, a, b, c)) candidates.push_back(f.value);
  for (int k = 0; k < 2; ++k) candidates.push_back(corruption(r, *canonical, k));
  for (const auto& x : candidates) {
    const bool direct = verify(r, InverseKind::left_dual_bc_core, in, x).overall;
    try {
      const auto rep = pierce_representation_check(r, a, b, c, x);
      out.expect(rep.overall == direct, "representation differs from verify");
    } catch (const NotIdempotent&) {
      out.expect(false, "non-projection q from a verified witness");
    }
  }
}

template <StarRing R>
void specialization(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto& a = t[0];
  const auto one = r.one();
  const auto as = r.star(a);
  const auto li = left_invertible(r, a);
  out.expect(li.has_value() == r.solve_left(a, one).has_value(), "left invertible differs from (1,1)");
  if (li) out.expect(r.mul(*li, a) == one, "left inverse fails xa=1");

  const auto core = left_dual_core(r, a);
  const bool routes[] = {
      left_dual_bc_core(r, a, a, a).has_value(),       left_dual_bc_core(r, a, a, one).has_value(),
      left_dual_bc_core(r, one, a, a).has_value(),     left_dual_v_core(r, a, a).has_value(),
      left_dual_v_core(r, a, one).has_value(),         left_bc_inverse(r, a, as, a).has_value(),
      left_dual_bc_core(r, r.mul(a, a), a, a).has_value(), left_dual_bc_core(r, a, a, r.mul(a, a)).has_value(),
  };
  for (bool x : routes) out.expect(x == core.has_value(), "core route differs");
  if (core) out.expect(verify(r, InverseKind::left_dual_core, InverseInputs<Elem<R>>::element(a), *core).overall, "core witness fails");

  const auto a2 = r.mul(a, a);
  const bool strong[] = {strongly_left_bc_inverse(r, a2, as, a).has_value(),
                         strongly_left_bc_inverse(r, a2, as, one).has_value(),
                         strongly_left_bc_inverse(r, a, as, a).has_value()};
  for (bool x : strong) out.expect(x == core.has_value(), "strongly left route differs");

  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto el = InverseInputs<FiniteElement>::element(a);
    out.expect(nonempty(o, InverseKind::left_invertible, el) == li.has_value(), "oracle differs on left invertible");
    const bool brute = nonempty(o, InverseKind::left_dual_core, el);
    out.expect(brute == core.has_value(), "oracle differs on core");
    if (core) out.expect(satisfies(o, InverseKind::left_dual_core, el, *core), "core outside oracle set");
    auto eq = [&](FiniteElement x) { return mul(r, a, x, a) == a; };
    const bool items[] = {
        exists_element(o, [&](FiniteElement x) {
          return o.in_left(x, a) && eq(x) && is_symmetric(r, r.mul(x, a)) && mul(r, x, a, x) == x;
        }),
        exists_element(o, [&](FiniteElement x) { return eq(x) && o.in_left(x, a) && o.in_right(as, x); }),
        // containment read as Rx ⊆ Ra
        exists_element(o, [&](FiniteElement x) {
          return eq(x) && o.in_left(x, a) && o.left_annihilator(x) == o.left_annihilator(as);
        }),
        exists_element(o, [&](FiniteElement x) { return eq(x) && o.in_left(x, a) && o.in_right(x, as); }),
        exists_element(o, [&](FiniteElement x) {
          return eq(x) && o.in_left(x, a) && o.left_annihilator(as).subset_of(o.left_annihilator(x));
        }),
        std::any_of(o.projections().begin(), o.projections().end(),
                    [&](FiniteElement q) { return o.left_ideal(q) == o.left_ideal(a); }) &&
            std::any_of(o.idempotents().begin(), o.idempotents().end(),
                        [&](FiniteElement p) { return o.in_left(p, a) && o.in_right(a, p); }),
    };
    for (std::size_t i = 0; i < std::size(items); ++i)
      out.expect(items[i] == brute, "corollary item " + std::to_string(i + 2) + " differs");
    if (core) {
      const auto q = r.mul(*core, a);
      const auto p = r.mul(a, *core);
      for (auto g : r.inner_inverses(a))
        out.expect(satisfies(o, InverseKind::left_dual_core, el, mul(r, q, {g}, p)), "q a^- p fails");
    }
  }
}

template <StarRing R>
void v_core(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &v = t[1];
  const auto in = InverseInputs<Elem<R>>::with_v(a, v);
  const auto x = left_dual_v_core(r, a, v);
  if (x) out.expect(verify(r, InverseKind::left_dual_v_core, in, *x).overall, "v-core witness fails");
  const auto va = r.mul(v, a);
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto as = r.star(a);
    const bool brute = nonempty(o, InverseKind::left_dual_v_core, in);
    out.expect(brute == x.has_value(), "oracle differs from compute");
    auto eq = [&](FiniteElement y) { return mul(r, a, y, va) == a; };
    const bool items[] = {
        exists_element(o, [&](FiniteElement y) {
          const auto yva = r.mul(y, va);
          return o.in_left(y, a) && eq(y) && is_symmetric(r, yva) && r.mul(yva, y) == y;
        }),
        exists_element(o, [&](FiniteElement y) { return eq(y) && o.in_left(y, a) && o.in_right(as, y); }),
        // containment read as Rx ⊆ Ra
        exists_element(o, [&](FiniteElement y) {
          return eq(y) && o.in_left(y, a) && o.left_annihilator(y) == o.left_annihilator(as);
        }),
        exists_element(o, [&](FiniteElement y) { return eq(y) && o.in_left(y, a) && o.in_right(y, as); }),
        exists_element(o, [&](FiniteElement y) {
          return eq(y) && o.in_left(y, a) && o.left_annihilator(as).subset_of(o.left_annihilator(y));
        }),
        std::any_of(o.projections().begin(), o.projections().end(),
                    [&](FiniteElement q) { return o.in_left(a, q) && o.in_left(q, va); }) &&
            std::any_of(o.idempotents().begin(), o.idempotents().end(),
                        [&](FiniteElement p) { return o.in_left(p, a) && o.in_right(va, p); }),
    };
    for (std::size_t i = 0; i < std::size(items); ++i)
      out.expect(items[i] == brute, "corollary item " + std::to_string(i + 2) + " differs");
    if (x) {
      out.expect(satisfies(o, InverseKind::left_dual_v_core, in, *x), "witness outside oracle set");
      const auto q = r.mul(*x, va);
      const auto p = r.mul(va, *x);
      for (auto g : r.inner_inverses(va))
        out.expect(satisfies(o, InverseKind::left_dual_v_core, in, mul(r, q, {g}, p)), "q(va)^-p fails");
    }
  } else {
    if (!x) {
      out.skip();
      return;
    }
    const auto q = r.mul(*x, va);
    const auto p = r.mul(va, *x);
    out.expect(is_projection(r, q) && is_idempotent(r, p), "q/p");
    out.expect(r.left_ideal_contains(a, q) && r.left_ideal_contains(q, va) && r.left_ideal_contains(p, a) &&
                   r.right_ideal_contains(va, p),
               "item 7 containments");
    out.expect(verify(r, InverseKind::left_dual_v_core, in, mul(r, q, *r.inner_inverse(va), p)).overall, "q(va)^-p fails");
  }
}

template <StarRing R>
void pseudo_core(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto& a = t[0];
  const auto res = left_dual_pseudo_core(r, a);
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const bool brute = nonempty(o, InverseKind::left_dual_pseudo_core, InverseInputs<FiniteElement>::element(a));
    out.expect(brute == res.has_value(), "oracle differs from compute");
    if (res) {
      for (unsigned k = 1; k < res->index; ++k)
        out.expect(pseudo_core_witnesses_at(o, a, k).empty(), "a smaller index admits a witness");
      out.expect(pseudo_core_witnesses_at(o, a, res->index).contains(res->x), "witness outside oracle set at k");
    }
  } else {
    if (res && res->index > 1)
      out.expect(!left_dual_bc_core(r, a, power(r, a, res->index - 1), r.one()), "index k-1 admits a witness");
  }
  if (!res) {
    out.skip();
    return;
  }
  const unsigned k = res->index;
  auto in = InverseInputs<Elem<R>>::element(a);
  const auto rep = verify(r, InverseKind::left_dual_pseudo_core, in, res->x);
  out.expect(rep.overall && rep.index == k, "pseudo core witness fails at its index");
  const std::pair<unsigned, unsigned> mn[] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}};
  for (auto [m, n] : mn) {
    const auto z = pseudo_core_from_power_core(r, a, k, m, n);
    out.expect(z.has_value(), "a^m not left dual (a^k,a^n)-core invertible");
    if (z) {
      const auto zr = verify(r, InverseKind::left_dual_pseudo_core, in, *z);
      out.expect(zr.overall && zr.index == k, "(a^m)_(a^k,a^n) a^(k+m-1) fails");
    }
    // (a_D)^(k+m) is a left dual (a^k,a^n)-core inverse of a^m
    const auto pw = power(r, res->x, k + m);
    if (m > 0 || n > 0)
      out.expect(verify(r, InverseKind::left_dual_bc_core,
                        InverseInputs<Elem<R>>::bc(power(r, a, m), power(r, a, k), power(r, a, n)), pw)
                     .overall,
                 "(a_D)^(k+m) fails");
  }
  // a^k = a1 + a2 with a1 = a_D a^(k+1) left dual core, inverse (a_D)^k
  const auto ak = power(r, a, k);
  const auto a1 = r.mul(res->x, r.mul(ak, a));
  const auto a2 = r.sub(ak, a1);
  const auto zero = r.zero();
  out.expect(r.mul(a2, a2) == zero && r.mul(r.star(a2), a1) == zero && r.mul(a1, a2) == zero, "a^k decomposition");
  out.expect(verify(r, InverseKind::left_dual_core, InverseInputs<Elem<R>>::element(a1), power(r, res->x, k)).overall,
             "a_D a^(k+1) core with (a_D)^k fails");
}

template <StarRing R>
void decomposition(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &v = t[1];
  auto check = [&](const DecompositionResult<Elem<R>>& d) {
    for (const auto& vd : decomposition_verdicts(r, d)) out.expect(vd.holds, vd.name);
  };
  bool any = false;
  if (const auto d = nilpotent_decomposition(r, a, v)) {
    any = true;
    check(*d);
    if constexpr (is_finite<R>) {
      const auto& o = *static_cast<const FiniteOracle*>(oracle);
      for (auto x : brute_force(o, InverseKind::left_dual_v_core, InverseInputs<FiniteElement>::with_v(a, v)).witnesses)
        check(decompose_with(r, a, v, {x}));
    }
  }
  // Moore-Penrose instance: aa* = a1 + a2, and a*a core with inverse a†a†*
  if (const auto mp = moore_penrose(r, a)) {
    any = true;
    const auto d = nilpotent_decomposition(r, r.star(a), a);
    out.expect(d.has_value(), "a* not left dual a-core invertible");
    if (d) check(*d);
    out.expect(verify(r, InverseKind::left_dual_core, InverseInputs<Elem<R>>::element(r.mul(r.star(a), a)),
                      r.mul(*mp, r.star(*mp)))
                   .overall,
               "a*a core with a+a+* fails");
  }
  if (!any) out.skip();
}

template <StarRing R>
void mp_equivalence(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto& a = t[0];
  const auto items = mp_equivalences(r, a);
  out.expect(all_agree(items), "items disagree: " + describe(items));
  const auto mp = moore_penrose(r, a);
  if (mp) out.expect(verify(r, InverseKind::moore_penrose, InverseInputs<Elem<R>>::element(a), *mp).overall, "a+ fails Penrose");
  const auto as = r.star(a);
  out.expect(strongly_left_bc_inverse(r, r.mul(as, a), as, a).has_value() == mp.has_value(), "a*a strongly left (a*,a)");
  out.expect(strongly_left_bc_inverse(r, r.mul(a, as), a, as).has_value() == mp.has_value(), "aa* strongly left (a,a*)");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto sols = brute_force(o, InverseKind::moore_penrose, InverseInputs<FiniteElement>::element(a)).witnesses;
    out.expect(sols.size() <= 1, "Moore-Penrose inverse not unique");
    out.expect(sols.empty() != mp.has_value(), "oracle differs from compute");
    if (mp && !sols.empty()) out.expect(sols.contains(*mp), "a+ differs from the oracle");
    out.expect(nonempty(o, InverseKind::left_dual_v_core, InverseInputs<FiniteElement>::with_v(a, as)) == mp.has_value(),
               "item 2 by definition");
    out.expect(nonempty(o, InverseKind::left_dual_v_core, InverseInputs<FiniteElement>::with_v(as, a)) == mp.has_value(),
               "item 3 by definition");
  }
}

template <StarRing R>
void coincidence(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto rep = coincidence_check(r, a, b, c);
  out.expect(rep.consistent(), "coincidence report inconsistent");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto ab = r.mul(a, b);
    const auto core = brute_force(o, InverseKind::left_dual_bc_core, InverseInputs<FiniteElement>::bc(a, b, c));
    const auto left = brute_force(o, InverseKind::left_bc, InverseInputs<FiniteElement>::bc(ab, r.star(b), c));
    const auto strong =
        brute_force(o, InverseKind::strongly_left_bc, InverseInputs<FiniteElement>::bc(ab, r.star(b), c));
    out.expect(core.witnesses == left.witnesses, "witness sets differ");
    out.expect(core.witnesses.empty() == strong.witnesses.empty(), "strongly left oracle differs");
    out.expect(core.witnesses.empty() != rep.core_invertible, "oracle differs from compute");
  }
}

template <StarRing R>
void one_sided_duality(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto z = right_bc_inverse(r, a, b, c);
  const auto as = r.star(a), bs = r.star(b), cs = r.star(c);
  const auto y = left_bc_inverse(r, as, cs, bs);
  out.expect(z.has_value() == y.has_value(), "existence differs under duality");
  out.expect(z.has_value() == r.solve_right(mul(r, c, a, b), c).has_value(), "c in cabR differs");
  if (z) {
    out.expect(verify(r, InverseKind::right_bc, InverseInputs<Elem<R>>::bc(a, b, c), *z).overall, "right inverse fails");
    out.expect(verify(r, InverseKind::left_bc, InverseInputs<Elem<R>>::bc(as, cs, bs), r.star(*z)).overall, "star fails as left");
  }
  if (const auto x = left_bc_inverse(r, a, b, c))
    out.expect(verify(r, InverseKind::left_bc, InverseInputs<Elem<R>>::bc(a, b, c), *x).overall, "left inverse fails");
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto right = brute_force(o, InverseKind::right_bc, InverseInputs<FiniteElement>::bc(a, b, c)).witnesses;
    const auto left = brute_force(o, InverseKind::left_bc, InverseInputs<FiniteElement>::bc(as, cs, bs)).witnesses;
    std::vector<std::uint32_t> starred;
    for (auto w : left) starred.push_back(r.star({w}).code);
    out.expect(right == ElementSet(starred), "right set is not the star of the left set");
    out.expect(right.empty() != z.has_value(), "oracle differs from compute");
  }
}

template <StarRing R>
void mixed_inverse(const R& r, const void*, const Tuple<R>& t, Outcome& out) {
  const auto rep = mixed_inverse_identities(r, t[0], t[1], t[2], t[3]);
  if (!rep.left_applicable) {
    out.skip();
    return;
  }
  out.expect(rep.all_hold(), "a composite fails verify");
}

template <StarRing R>
void final_equivalence(const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  const auto &a = t[0], &b = t[1], &c = t[2];
  const auto items = final_equivalences(r, a, b, c);
  out.expect(all_agree(items), "items disagree: " + describe(items));
  if constexpr (is_finite<R>) {
    const auto& o = *static_cast<const FiniteOracle*>(oracle);
    const auto in = InverseInputs<FiniteElement>::bc(a, b, c);
    const bool item1 = nonempty(o, InverseKind::left_dual_bc_core, in) && nonempty(o, InverseKind::right_bc_core, in);
    const bool item2 = nonempty(o, InverseKind::dual_bc_core, in) && nonempty(o, InverseKind::bc_core, in);
    out.expect(item1 == items.front().holds, "item 1 oracle differs");
    out.expect(item2 == items.front().holds, "item 2 oracle differs");
  }
  for (const auto& p : final_equivalences_as_printed(r, a, b, c))
    out.note_printed(p.holds == items.front().holds, "printed item " + p.tag);
}

template <StarRing R>
void run(Theorem th, const R& r, const void* oracle, const Tuple<R>& t, Outcome& out) {
  switch (th) {
    case Theorem::seven_condition: return seven_condition(r, oracle, t, out);
    case Theorem::existence_criteria: return existence_criteria(r, oracle, t, out);
    case Theorem::equivalence_14: return equivalence_14(r, oracle, t, out);
    case Theorem::formulas: return formulas(r, oracle, t, out);
    case Theorem::power_identity: return power_identity(r, oracle, t, out);
    case Theorem::direct_sum: return direct_sum(r, oracle, t, out);
    case Theorem::pierce: return pierce(r, oracle, t, out);
    case Theorem::specialization: return specialization(r, oracle, t, out);
    case Theorem::v_core: return v_core(r, oracle, t, out);
    case Theorem::pseudo_core: return pseudo_core(r, oracle, t, out);
    case Theorem::decomposition: return decomposition(r, oracle, t, out);
    case Theorem::mp_equivalence: return mp_equivalence(r, oracle, t, out);
    case Theorem::coincidence: return coincidence(r, oracle, t, out);
    case Theorem::one_sided_duality: return one_sided_duality(r, oracle, t, out);
    case Theorem::mixed_inverse: return mixed_inverse(r, oracle, t, out);
    case Theorem::final_equivalence: return final_equivalence(r, oracle, t, out);
  }
}

}  // namespace checks

/// Runs one theorem check on one tuple; `oracle` must be given for finite rings.
template <StarRing R>
Outcome check_tuple(Theorem th, const R& r, const std::vector<Elem<R>>& tuple, const FiniteOracle* oracle = nullptr) {
  if (tuple.size() != arity(th)) throw std::invalid_argument("tuple size does not match theorem arity");
  if constexpr (std::is_same_v<R, FiniteRing>) {
    if (!oracle) throw std::invalid_argument("finite-ring checks need an oracle");
  }
  Outcome out;
  try {
    checks::run(th, r, oracle, tuple, out);
  } catch (const std::exception& e) {
    out.applicable = true;
    out.failed.push_back(std::string("exception: ") + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpora

/// Deterministic 64-bit stream; one independent stream per tuple index.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::uint64_t s_;
};

inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed);
  const auto base = mix.next();
  return SplitMix64(base ^ (index * 0xd1b54a32d192ed03ull + 0x8cb92ba72f3d8dd7ull));
}

enum class MatrixFamily { general, nilpotent };

struct MatrixCorpusSpec {
  unsigned dim_min = 1;
  unsigned dim_max = 4;
  long bound = 3;
  std::uint64_t count = 500;
  std::uint64_t seed = 1;
  MatrixFamily family = MatrixFamily::general;

  std::string describe() const {
    return std::string(family == MatrixFamily::nilpotent ? "nilpotent " : "") + "Mat:Q dims=" +
           std::to_string(dim_min) + ".." + std::to_string(dim_max) + " bound=" + std::to_string(bound) +
           " count=" + std::to_string(count);
  }
};

enum class MatrixShape { full_rank, rank_deficient, zero };

/// One random n×n rational matrix of the requested shape.
inline Matrix<mpq_class> random_matrix(const RationalField& f, std::size_t n, long bound, MatrixShape shape,
                                       SplitMix64& rng) {
  auto entries = [&](std::size_t rows, std::size_t cols) {
    Matrix<mpq_class> m(rows, cols, f.zero());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(rng.between(-bound, bound));
    return m;
  };
  switch (shape) {
    case MatrixShape::zero:
      return zeros(f, n, n);
    case MatrixShape::rank_deficient: {
      if (n == 1) return zeros(f, 1, 1);
      const auto r = static_cast<std::size_t>(rng.between(1, static_cast<long>(n) - 1));
      for (;;) {
        auto m = multiply(f, entries(n, r), entries(r, n));
        if (rank(f, m) == r) return m;
      }
    }
    case MatrixShape::full_rank:
      for (;;) {
        auto m = entries(n, n);
        if (rank(f, m) == n) return m;
      }
  }
  return zeros(f, n, n);
}

/// Shape mix: 45% full rank, 40% rank deficient, 15% zero.
inline MatrixShape draw_shape(SplitMix64& rng) {
  const auto u = rng.below(100);
  return u < 45 ? MatrixShape::full_rank : u < 85 ? MatrixShape::rank_deficient : MatrixShape::zero;
}

/// Strictly upper triangular, so nilpotent; superdiagonal entries are kept
/// nonzero with probability 3/4 to spread the nilpotency index.
inline Matrix<mpq_class> random_nilpotent(const RationalField& f, std::size_t n, long bound, SplitMix64& rng) {
  Matrix<mpq_class> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long v = rng.between(-bound, bound);
      if (j == i + 1 && v == 0 && rng.below(4) != 0) v = 1;
      m(i, j) = f.from_int(v);
    }
  return m;
}

/// Tuple `index` of a matrix corpus: one dimension, `arity` matrices.
inline std::vector<Matrix<mpq_class>> matrix_tuple(const MatrixCorpusSpec& spec, unsigned arity, std::uint64_t index) {
  RationalField f;
  auto rng = stream_for(spec.seed, index);
  const auto n = static_cast<std::size_t>(rng.between(spec.dim_min, spec.dim_max));
  std::vector<Matrix<mpq_class>> out;
  for (unsigned i = 0; i < arity; ++i) {
    if (spec.family == MatrixFamily::nilpotent && i == 0)
      out.push_back(random_nilpotent(f, n, spec.bound, rng));
    else
      out.push_back(random_matrix(f, n, spec.bound, draw_shape(rng), rng));
  }
  return out;
}

/// The first `spec.count` tuples of the corpus, in order.
inline std::vector<std::vector<Matrix<mpq_class>>> random_matrix_corpus(const MatrixCorpusSpec& spec, unsigned arity) {
  std::vector<std::vector<Matrix<mpq_class>>> out;
  out.reserve(spec.count);
  for (std::uint64_t i = 0; i < spec.count; ++i) out.push_back(matrix_tuple(spec, arity, i));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct Disagreement {
  std::uint64_t index = 0;
  std::string tuple;
  std::vector<std::string> failed;
};

struct TheoremBatteryReport {
  std::string theorem;
  std::string corpus;
  std::uint64_t drawn = 0;       // tuples visited
  std::uint64_t tuples = 0;      // tuples where the theorem applied and was checked
  std::uint64_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::map<std::string, std::uint64_t> printed_mismatches;  // literal readings that differ, by label
  std::optional<std::uint64_t> seed;
  double wall_ms = 0;

  bool clean() const { return disagreements.empty() && agreements == tuples; }
};

struct BatteryOptions {
  unsigned workers = 1;
  std::uint64_t budget = 10'000'000;  // exhaustive: |R|^arity · |R|
  std::uint64_t max_draw_factor = 50;  // randomized: give up after count·factor draws
};

namespace detail {

struct IndexedOutcome {
  Outcome outcome;
  std::string tuple;
};

/// Evaluates fn(i) for i in [begin, end) on `workers` threads; results by index.
template <class Fn>
std::vector<IndexedOutcome> parallel_map(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn&& fn) {
  std::vector<IndexedOutcome> results(end - begin);
  workers = std::max(1u, workers);
  if (workers == 1 || end - begin < 2) {
    for (auto i = begin; i < end; ++i) results[i - begin] = fn(i);
    return results;
  }
  std::atomic<std::uint64_t> next{begin};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (auto i = next.fetch_add(64); i < end; i = next.fetch_add(64))
        for (auto j = i; j < std::min(end, i + 64); ++j) results[j - begin] = fn(j);
    });
  for (auto& th : pool) th.join();
  return results;
}

inline void tally(TheoremBatteryReport& rep, std::uint64_t index, IndexedOutcome&& r) {
  ++rep.drawn;
  for (const auto& p : r.outcome.printed) ++rep.printed_mismatches[p];
  if (!r.outcome.applicable) return;
  ++rep.tuples;
  if (r.outcome.agrees())
    ++rep.agreements;
  else
    rep.disagreements.push_back({index, std::move(r.tuple), std::move(r.outcome.failed)});
}

template <StarRing R>
std::string format_tuple(const R& r, const std::vector<Elem<R>>& t) {
  static constexpr const char* names[] = {"a", "b", "c"};
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string name = t.size() == 4 ? std::string(i == 0 ? "a" : i == 1 ? "d" : i == 2 ? "b" : "c")
                       : t.size() == 2 ? std::string(i == 0 ? "a" : "v")
                                       : std::string(names[i]);
    out += (i ? " " : "") + name + "=" + r.format(t[i]);
  }
  return out;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

inline TheoremBatteryReport run_battery(Theorem th, const FiniteRing& ring, std::optional<std::uint64_t> samples,
                                        std::uint64_t seed, const BatteryOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned k = arity(th);
  const std::uint64_t n = ring.order();
  TheoremBatteryReport rep;
  rep.theorem = std::string(to_string(th));
  rep.corpus = ring.descriptor().to_string() + (samples ? " sampled n=" + std::to_string(*samples) : " exhaustive");

  std::uint64_t total = 1;
  if (!samples) {
    for (unsigned i = 0; i < k; ++i) {
      total *= n;
      if (total > opt.budget) break;
    }
    if (total > opt.budget || total * n > opt.budget)
      throw CorpusTooLarge(rep.corpus + " for " + rep.theorem + ": " + std::to_string(n) + "^" + std::to_string(k) +
                           " tuples times " + std::to_string(n) + " exceeds budget " + std::to_string(opt.budget));
  } else {
    total = *samples;
    rep.seed = seed;
  }

  const FiniteOracle oracle(ring);
  auto tuple_at = [&](std::uint64_t i) {
    std::vector<FiniteElement> t(k);
    if (samples) {
      auto rng = stream_for(seed, i);
      for (auto& e : t) e = {static_cast<std::uint32_t>(rng.below(n))};
    } else {
      // first component most significant, so tuples come in lexicographic order
      for (unsigned j = k; j-- > 0;) {
        t[j] = {static_cast<std::uint32_t>(i % n)};
        i /= n;
      }
    }
    return t;
  };
  auto results = detail::parallel_map(0, total, opt.workers, [&](std::uint64_t i) {
    const auto t = tuple_at(i);
    detail::IndexedOutcome r{check_tuple(th, ring, t, &oracle), {}};
    if (!r.outcome.agrees()) r.tuple = detail::format_tuple(ring, t);
    return r;
  });
  for (std::uint64_t i = 0; i < total; ++i) detail::tally(rep, i, std::move(results[i]));
  rep.wall_ms = detail::elapsed_ms(start);
  return rep;
}

/// Draws tuples in index order until `spec.count` applicable tuples were checked.
inline TheoremBatteryReport run_battery(Theorem th, const MatrixCorpusSpec& spec, const BatteryOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned k = arity(th);
  TheoremBatteryReport rep;
  rep.theorem = std::string(to_string(th));
  rep.corpus = spec.describe();
  rep.seed = spec.seed;
  const RationalField f;
  const std::uint64_t limit = spec.count * opt.max_draw_factor;
  std::uint64_t next = 0;
  while (rep.tuples < spec.count && next < limit) {
    const std::uint64_t batch = std::min<std::uint64_t>(limit - next, std::max<std::uint64_t>(spec.count - rep.tuples, 16));
    auto results = detail::parallel_map(next, next + batch, opt.workers, [&](std::uint64_t i) {
      const auto t = matrix_tuple(spec, k, i);
      const MatrixRing<RationalField> ring(f, t.front().rows());
      detail::IndexedOutcome r{check_tuple(th, ring, t), {}};
      if (!r.outcome.agrees()) r.tuple = detail::format_tuple(ring, t);
      return r;
    });
    for (std::uint64_t i = 0; i < batch && rep.tuples < spec.count; ++i) detail::tally(rep, next + i, std::move(results[i]));
    next += batch;
  }
  rep.wall_ms = detail::elapsed_ms(start);
  return rep;
}

}  // namespace bccore

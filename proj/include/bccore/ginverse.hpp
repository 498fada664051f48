#pragma once

// Generalized inverses in a *-ring: left (b,c)-inverses, {1,3}/{1,4}/
// Moore-Penrose inverses and the left dual (b,c)-core family. Every kind has
// a verify path (definitional axioms, one verdict per axiom). Kinds the
// library can construct also have a compute path returning a canonical
// representative, and the (b,c) kinds have an existence path through
// independent membership and direct-sum criteria.
//
// Canonical representatives:
//   left (b,c)-inverse            b·(cab)⁻·c            (r·c when cab is not regular)
//   left dual (b,c)-core inverse  b^(1,4)·a_l^(b,c)
// with (cab)⁻ and b^(1,4) produced by the ring's deterministic solvers.
// Left dual (b,c)-core inverses are not unique; other valid witnesses are
// produced by left_dual_bc_core_all_formulas.

#include "bccore/ring.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bccore {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class InverseKind {
  inner,
  inv13,
  inv14,
  moore_penrose,
  left_bc,
  right_bc,
  strongly_left_bc,
  left_dual_bc_core,
  dual_bc_core,   // verify only
  bc_core,        // verify only
  right_bc_core,  // verify only
  left_dual_core,
  left_dual_pseudo_core,
  left_dual_v_core,
  left_invertible,
};

inline constexpr InverseKind kAllInverseKinds[] = {
    InverseKind::inner,           InverseKind::inv13,           InverseKind::inv14,
    InverseKind::moore_penrose,   InverseKind::left_bc,         InverseKind::right_bc,
    InverseKind::strongly_left_bc, InverseKind::left_dual_bc_core, InverseKind::dual_bc_core,
    InverseKind::bc_core,         InverseKind::right_bc_core,   InverseKind::left_dual_core,
    InverseKind::left_dual_pseudo_core, InverseKind::left_dual_v_core, InverseKind::left_invertible,
};

inline std::string_view to_string(InverseKind k) {
  switch (k) {
    case InverseKind::inner: return "inner";
    case InverseKind::inv13: return "inv13";
    case InverseKind::inv14: return "inv14";
    case InverseKind::moore_penrose: return "moore-penrose";
    case InverseKind::left_bc: return "left-bc";
    case InverseKind::right_bc: return "right-bc";
    case InverseKind::strongly_left_bc: return "strongly-left-bc";
    case InverseKind::left_dual_bc_core: return "left-dual-bc-core";
    case InverseKind::dual_bc_core: return "dual-bc-core";
    case InverseKind::bc_core: return "bc-core";
    case InverseKind::right_bc_core: return "right-bc-core";
    case InverseKind::left_dual_core: return "left-dual-core";
    case InverseKind::left_dual_pseudo_core: return "left-dual-pseudo-core";
    case InverseKind::left_dual_v_core: return "left-dual-v-core";
    case InverseKind::left_invertible: return "left-invertible";
  }
  return "?";
}

inline std::optional<InverseKind> parse_inverse_kind(std::string_view s) {
  for (auto k : kAllInverseKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// Parameters each kind takes besides a.
enum class Arity { element, element_bc, element_v };

inline Arity arity(InverseKind k) {
  switch (k) {
    case InverseKind::left_bc:
    case InverseKind::right_bc:
    case InverseKind::strongly_left_bc:
    case InverseKind::left_dual_bc_core:
    case InverseKind::dual_bc_core:
    case InverseKind::bc_core:
    case InverseKind::right_bc_core:
      return Arity::element_bc;
    case InverseKind::left_dual_v_core:
      return Arity::element_v;
    default:
      return Arity::element;
  }
}

inline bool has_compute_path(InverseKind k) {
  return k != InverseKind::dual_bc_core && k != InverseKind::bc_core && k != InverseKind::right_bc_core;
}

template <class E>
struct InverseInputs {
  E a;
  std::optional<E> b;
  std::optional<E> c;
  std::optional<E> v;
  unsigned k_max = 0;  // pseudo-core index search bound; 0 means ring default

  static InverseInputs element(E a) { return {std::move(a), {}, {}, {}, 0}; }
  static InverseInputs bc(E a, E b, E c) { return {std::move(a), std::move(b), std::move(c), {}, 0}; }
  static InverseInputs with_v(E a, E v) { return {std::move(a), {}, {}, std::move(v), 0}; }
};

struct Verdict {
  std::string name;
  bool holds = false;
};

template <class E>
struct WitnessReport {
  InverseKind kind{};
  std::vector<std::pair<std::string, E>> inputs;
  std::optional<E> candidate;
  std::vector<Verdict> verdicts;
  std::optional<unsigned> index;  // pseudo-core only: the k that satisfied a^k x a = a^k
  bool overall = false;

  /// Value of the named verdict; throws when the name is unknown.
  bool verdict(std::string_view name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return v.holds;
    throw std::out_of_range("no verdict named " + std::string(name));
  }

  void finalize() {
    overall = candidate.has_value() &&
              std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
  }
};

/// Default pseudo-core index bound for a ring: the matrix dimension, or the
/// ring order for finite rings.
template <StarRing R>
unsigned default_index_bound(const R& r) {
  const auto d = r.descriptor();
  if (d.kind == RingDescriptor::Kind::matrix) return d.dimension;
  if (d.kind == RingDescriptor::Kind::zn) return d.modulus;
  unsigned order = 1;
  for (unsigned i = 0; i < d.dimension * d.dimension; ++i) order *= d.characteristic;
  return order;
}

// ---------------------------------------------------------------------------
// {1}, {1,3}, {1,4} and Moore-Penrose

template <StarRing R>
std::optional<Elem<R>> inner_inverse(const R& r, const Elem<R>& a) {
  require_members(r, a);
  return r.inner_inverse(a);
}

/// a^(1,4) exists iff a ∈ aa*R; from aa*y = a it is y*.
template <StarRing R>
std::optional<Elem<R>> inv_14(const R& r, const Elem<R>& a) {
  require_members(r, a);
  auto y = r.solve_right(r.mul(a, r.star(a)), a);
  if (!y) return std::nullopt;
  return r.star(*y);
}

/// a^(1,3) = (a*^(1,4))*
template <StarRing R>
std::optional<Elem<R>> inv_13(const R& r, const Elem<R>& a) {
  auto g = inv_14(r, r.star(a));
  if (!g) return std::nullopt;
  return r.star(*g);
}

/// a† = a^(1,4)·a·a^(1,3)
template <StarRing R>
std::optional<Elem<R>> moore_penrose(const R& r, const Elem<R>& a) {
  auto g14 = inv_14(r, a);
  if (!g14) return std::nullopt;
  auto g13 = inv_13(r, a);
  if (!g13) return std::nullopt;
  return mul(r, *g14, a, *g13);
}

// ---------------------------------------------------------------------------
// One-sided (b,c)-inverses

/// x ∈ Rc with xab = b. Exists iff b ∈ Rcab.
template <StarRing R>
std::optional<Elem<R>> left_bc_inverse(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  require_members(r, a, b, c);
  const auto cab = mul(r, c, a, b);
  const auto s = r.solve_left(cab, b);
  if (!s) return std::nullopt;
  if (auto g = r.inner_inverse(cab)) return mul(r, b, *g, c);
  return r.mul(*s, c);
}

/// z ∈ bR with caz = c, obtained as the star of a left (c*,b*)-inverse of a*.
template <StarRing R>
std::optional<Elem<R>> right_bc_inverse(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  auto y = left_bc_inverse(r, r.star(a), r.star(c), r.star(b));
  if (!y) return std::nullopt;
  return r.star(*y);
}

/// b ∈ Rcab and cab regular; the witness x0·a·x0 satisfies xax = x,
/// xR = bR and Rx ⊆ Rc.
template <StarRing R>
std::optional<Elem<R>> strongly_left_bc_inverse(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  require_members(r, a, b, c);
  const auto cab = mul(r, c, a, b);
  if (!r.solve_left(cab, b)) return std::nullopt;
  const auto g = r.inner_inverse(cab);
  if (!g) return std::nullopt;
  const auto x0 = mul(r, b, *g, c);
  return mul(r, x0, a, x0);
}

// ---------------------------------------------------------------------------
// Left dual (b,c)-core inverses

/// Decided as: a left (b,c)-invertible and b {1,4}-invertible.
template <StarRing R>
std::optional<Elem<R>> left_dual_bc_core(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  auto al = left_bc_inverse(r, a, b, c);
  if (!al) return std::nullopt;
  auto b14 = inv_14(r, b);
  if (!b14) return std::nullopt;
  return r.mul(*b14, *al);
}

/// Right (b,c)-core inverse (y ∈ bR, cayc = c, (cay)* = cay), reached by
/// duality: y* is a left dual (c*,b*)-core inverse of a*.
template <StarRing R>
std::optional<Elem<R>> right_bc_core_by_duality(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  auto x = left_dual_bc_core(r, r.star(a), r.star(c), r.star(b));
  if (!x) return std::nullopt;
  return r.star(*x);
}

struct FormulaTag {
  static constexpr std::string_view b14_al = "b14*al";
  static constexpr std::string_view ab14_a_al = "(ab)14*a*al";
  static constexpr std::string_view cab14_c = "(cab)14*c";
  static constexpr std::string_view b14_b_cabinner_c = "b14*b*(cab)^-*c";
  static constexpr std::string_view q_abinner_p = "q*(ab)^-*p";
};

template <class E>
struct TaggedElement {
  std::string tag;
  E value;
};

/// q·(ab)⁻·p with q = xab and p = abx for a witness x.
template <StarRing R>
Elem<R> q_inner_p(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& x, const Elem<R>& ab_inner) {
  const auto ab = r.mul(a, b);
  return mul(r, r.mul(x, ab), ab_inner, r.mul(ab, x));
}

/// The five closed forms for a left dual (b,c)-core inverse. q and p come
/// from `witness` when given, else from the canonical representative.
template <StarRing R>
std::vector<TaggedElement<Elem<R>>> left_dual_bc_core_all_formulas(const R& r, const Elem<R>& a, const Elem<R>& b,
                                                                   const Elem<R>& c,
                                                                   const std::optional<Elem<R>>& witness = std::nullopt) {
  const auto canonical = left_dual_bc_core(r, a, b, c);
  if (!canonical) throw NotInvertible("a is not left dual (b,c)-core invertible");
  const auto al = *left_bc_inverse(r, a, b, c);
  const auto ab = r.mul(a, b);
  const auto cab = r.mul(c, ab);
  const auto b14 = inv_14(r, b);
  const auto ab14 = inv_14(r, ab);
  const auto cab14 = inv_14(r, cab);
  const auto cab_inner = r.inner_inverse(cab);
  const auto ab_inner = r.inner_inverse(ab);
  if (!b14 || !ab14 || !cab14 || !cab_inner || !ab_inner)
    throw std::logic_error("left dual (b,c)-core invertible but a required {1}/{1,4}-inverse is missing");
  const auto x = witness.value_or(*canonical);
  std::vector<TaggedElement<Elem<R>>> out;
  out.push_back({std::string(FormulaTag::b14_al), r.mul(*b14, al)});
  out.push_back({std::string(FormulaTag::ab14_a_al), mul(r, *ab14, a, al)});
  out.push_back({std::string(FormulaTag::cab14_c), r.mul(*cab14, c)});
  out.push_back({std::string(FormulaTag::b14_b_cabinner_c), mul(r, *b14, b, *cab_inner, c)});
  out.push_back({std::string(FormulaTag::q_abinner_p), q_inner_p(r, a, b, x, *ab_inner)});
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace detail {

template <StarRing R>
std::vector<std::pair<std::string, Elem<R>>> echo_inputs(InverseKind kind, const InverseInputs<Elem<R>>& in) {
  std::vector<std::pair<std::string, Elem<R>>> out{{"a", in.a}};
  if (arity(kind) == Arity::element_bc) {
    out.emplace_back("b", *in.b);
    out.emplace_back("c", *in.c);
  } else if (arity(kind) == Arity::element_v) {
    out.emplace_back("v", *in.v);
  }
  return out;
}

}  // namespace detail

/// Evaluates every definitional axiom of `kind` for `x` independently.
template <StarRing R>
WitnessReport<Elem<R>> verify(const R& r, InverseKind kind, const InverseInputs<Elem<R>>& in, const Elem<R>& x) {
  const auto& a = in.a;
  if (arity(kind) == Arity::element_bc && (!in.b || !in.c))
    throw std::invalid_argument(std::string(to_string(kind)) + " needs b and c");
  if (arity(kind) == Arity::element_v && !in.v) throw std::invalid_argument("left-dual-v-core needs v");
  require_members(r, a, x);
  if (in.b) require_members(r, *in.b);
  if (in.c) require_members(r, *in.c);
  if (in.v) require_members(r, *in.v);

  WitnessReport<Elem<R>> rep;
  rep.kind = kind;
  rep.inputs = detail::echo_inputs<R>(kind, in);
  rep.candidate = x;
  auto add = [&](std::string name, bool holds) { rep.verdicts.push_back({std::move(name), holds}); };
  const auto axa = mul(r, a, x, a);
  const auto xa = r.mul(x, a);
  const auto ax = r.mul(a, x);

  switch (kind) {
    case InverseKind::inner:
      add("axa=a", axa == a);
      break;
    case InverseKind::inv13:
      add("axa=a", axa == a);
      add("(ax)*=ax", is_symmetric(r, ax));
      break;
    case InverseKind::inv14:
      add("axa=a", axa == a);
      add("(xa)*=xa", is_symmetric(r, xa));
      break;
    case InverseKind::moore_penrose:
      add("axa=a", axa == a);
      add("xax=x", mul(r, x, a, x) == x);
      add("(ax)*=ax", is_symmetric(r, ax));
      add("(xa)*=xa", is_symmetric(r, xa));
      break;
    case InverseKind::left_bc: {
      const auto &b = *in.b, &c = *in.c;
      add("x in Rc", r.left_ideal_contains(x, c));
      add("xab=b", mul(r, x, a, b) == b);
      break;
    }
    case InverseKind::right_bc: {
      const auto &b = *in.b, &c = *in.c;
      add("x in bR", r.right_ideal_contains(x, b));
      add("cax=c", mul(r, c, a, x) == c);
      break;
    }
    case InverseKind::strongly_left_bc: {
      const auto &b = *in.b, &c = *in.c;
      add("xax=x", mul(r, x, a, x) == x);
      add("xR=bR", r.right_ideal_contains(x, b) && r.right_ideal_contains(b, x));
      add("Rx in Rc", r.left_ideal_contains(x, c));
      break;
    }
    case InverseKind::left_dual_bc_core: {
      const auto &b = *in.b, &c = *in.c;
      const auto xab = mul(r, x, a, b);
      add("x in Rc", r.left_ideal_contains(x, c));
      add("bxab=b", r.mul(b, xab) == b);
      add("(xab)*=xab", is_symmetric(r, xab));
      break;
    }
    case InverseKind::dual_bc_core: {
      const auto &b = *in.b, &c = *in.c;
      const auto bs = r.star(b);
      add("bxab=b", mul(r, b, x, a, b) == b);
      add("xR=b*R", r.right_ideal_contains(x, bs) && r.right_ideal_contains(bs, x));
      add("Rx=Rc", r.left_ideal_contains(x, c) && r.left_ideal_contains(c, x));
      break;
    }
    case InverseKind::bc_core: {
      const auto &b = *in.b, &c = *in.c;
      const auto cs = r.star(c);
      add("caxc=c", mul(r, c, a, x, c) == c);
      add("xR=bR", r.right_ideal_contains(x, b) && r.right_ideal_contains(b, x));
      add("Rx=Rc*", r.left_ideal_contains(x, cs) && r.left_ideal_contains(cs, x));
      break;
    }
    case InverseKind::right_bc_core: {
      const auto &b = *in.b, &c = *in.c;
      const auto cax = mul(r, c, a, x);
      add("x in bR", r.right_ideal_contains(x, b));
      add("caxc=c", r.mul(cax, c) == c);
      add("(cax)*=cax", is_symmetric(r, cax));
      break;
    }
    case InverseKind::left_dual_core:
      add("axa=a", axa == a);
      add("(xa)*=xa", is_symmetric(r, xa));
      add("x^2a=x", mul(r, x, x, a) == x);
      break;
    case InverseKind::left_dual_pseudo_core: {
      const unsigned bound = in.k_max ? in.k_max : default_index_bound(r);
      auto ak = a;
      for (unsigned k = 1; k <= bound; ++k, ak = r.mul(ak, a)) {
        if (mul(r, ak, x, a) == ak) {
          rep.index = k;
          break;
        }
      }
      add("a^kxa=a^k", rep.index.has_value());
      add("(xa)*=xa", is_symmetric(r, xa));
      add("x^2a=x", mul(r, x, x, a) == x);
      break;
    }
    case InverseKind::left_dual_v_core: {
      const auto& v = *in.v;
      const auto xva = mul(r, x, v, a);
      add("axva=a", r.mul(a, xva) == a);
      add("(xva)*=xva", is_symmetric(r, xva));
      add("x^2va=x", r.mul(x, xva) == x);
      break;
    }
    case InverseKind::left_invertible:
      add("xa=1", xa == r.one());
      break;
  }
  rep.finalize();
  return rep;
}

/// A report with no candidate (overall false).
template <StarRing R>
WitnessReport<Elem<R>> empty_report(InverseKind kind, const InverseInputs<Elem<R>>& in) {
  WitnessReport<Elem<R>> rep;
  rep.kind = kind;
  rep.inputs = detail::echo_inputs<R>(kind, in);
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------
// Existence criteria

struct Criterion {
  std::string tag;
  bool holds = false;
};

inline bool all_agree(const std::vector<Criterion>& items) {
  return std::all_of(items.begin(), items.end(), [&](const Criterion& c) { return c.holds == items.front().holds; });
}

inline std::string describe(const std::vector<Criterion>& items) {
  std::string out;
  for (const auto& c : items) out += (out.empty() ? "" : ", ") + c.tag + "=" + (c.holds ? "1" : "0");
  return out;
}

/// Every independent route to left dual (b,c)-core invertibility. The first
/// entry is the decision used by left_dual_bc_core; the rest are cross-checks
/// and must agree with it.
template <StarRing R>
std::vector<Criterion> exists_by_criteria(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  require_members(r, a, b, c);
  const auto ab = r.mul(a, b);
  const auto cab = r.mul(c, ab);
  const auto cab_star = r.star(cab);
  const bool left_bc = r.solve_left(cab, b).has_value();
  const auto direct = r.direct_sum_right_ideals(cab_star, b);
  return {
      {"left-bc & b in R(1,4)", left_bc && inv_14(r, b).has_value()},
      {"b in b(cab)*R", r.solve_right(r.mul(b, cab_star), b).has_value()},
      {"b in Rcab & bb*R", left_bc && r.solve_right(r.mul(b, r.star(b)), b).has_value()},
      {"left-bc & ab in R(1,4)", left_bc && inv_14(r, ab).has_value()},
      {"left-bc & cab in R(1,4)", left_bc && inv_14(r, cab).has_value()},
      {"R=(cab)*R (+) r(b)", direct.is_direct},
      {"R=(cab)*R + r(b)", direct.is_sum},
      {"ab left (b*,c)-invertible", r.solve_left(r.mul(c, r.mul(ab, r.star(b))), r.star(b)).has_value()},
  };
}

// ---------------------------------------------------------------------------
// Specializations

/// Left inverse through the (1,1) specialization.
template <StarRing R>
std::optional<Elem<R>> left_invertible(const R& r, const Elem<R>& a) {
  return left_dual_bc_core(r, a, r.one(), r.one());
}

/// x with axa = a, (xa)* = xa, x²a = x: y·a for y a left dual (a,a)-core inverse of a.
template <StarRing R>
std::optional<Elem<R>> left_dual_core(const R& r, const Elem<R>& a) {
  auto y = left_dual_bc_core(r, a, a, a);
  if (!y) return std::nullopt;
  return r.mul(*y, a);
}

/// Left dual v-core inverse of a: a left dual (a,a)-core inverse of v.
template <StarRing R>
std::optional<Elem<R>> left_dual_v_core(const R& r, const Elem<R>& a, const Elem<R>& v) {
  return left_dual_bc_core(r, v, a, a);
}

template <class E>
struct PseudoCoreResult {
  E x;
  unsigned index = 0;
};

/// Smallest k <= k_max such that a is left dual (a^k,1)-core invertible;
/// the pseudo core inverse is then y·a^k.
template <StarRing R>
std::optional<PseudoCoreResult<Elem<R>>> left_dual_pseudo_core(const R& r, const Elem<R>& a, unsigned k_max = 0) {
  require_members(r, a);
  if (k_max == 0) k_max = default_index_bound(r);
  auto ak = a;
  for (unsigned k = 1; k <= k_max; ++k, ak = r.mul(ak, a)) {
    if (auto y = left_dual_bc_core(r, a, ak, r.one())) return PseudoCoreResult<Elem<R>>{r.mul(*y, ak), k};
  }
  return std::nullopt;
}

/// (a^m)_{l,#(a^k,a^n)}·a^(k+m-1), the pseudo core inverse built from a left
/// dual (a^k,a^n)-core inverse of a^m. Needs k >= 1 and m + n >= 1.
template <StarRing R>
std::optional<Elem<R>> pseudo_core_from_power_core(const R& r, const Elem<R>& a, unsigned k, unsigned m, unsigned n) {
  if (k == 0 || m + n == 0) throw std::invalid_argument("need k >= 1 and m + n >= 1");
  auto y = left_dual_bc_core(r, power(r, a, m), power(r, a, k), power(r, a, n));
  if (!y) return std::nullopt;
  return r.mul(*y, power(r, a, k + m - 1));
}

/// Canonical representative of `kind` for the given inputs, verified; the
/// report has no candidate when none exists. Verify-only kinds throw.
template <StarRing R>
WitnessReport<Elem<R>> compute(const R& r, InverseKind kind, const InverseInputs<Elem<R>>& in) {
  if (!has_compute_path(kind)) throw std::invalid_argument(std::string(to_string(kind)) + " has no compute path");
  if (arity(kind) == Arity::element_bc && (!in.b || !in.c))
    throw std::invalid_argument(std::string(to_string(kind)) + " needs b and c");
  if (arity(kind) == Arity::element_v && !in.v) throw std::invalid_argument("left-dual-v-core needs v");
  const auto& a = in.a;
  std::optional<Elem<R>> x;
  switch (kind) {
    case InverseKind::inner: x = inner_inverse(r, a); break;
    case InverseKind::inv13: x = inv_13(r, a); break;
    case InverseKind::inv14: x = inv_14(r, a); break;
    case InverseKind::moore_penrose: x = moore_penrose(r, a); break;
    case InverseKind::left_bc: x = left_bc_inverse(r, a, *in.b, *in.c); break;
    case InverseKind::right_bc: x = right_bc_inverse(r, a, *in.b, *in.c); break;
    case InverseKind::strongly_left_bc: x = strongly_left_bc_inverse(r, a, *in.b, *in.c); break;
    case InverseKind::left_dual_bc_core: x = left_dual_bc_core(r, a, *in.b, *in.c); break;
    case InverseKind::left_dual_core: x = left_dual_core(r, a); break;
    case InverseKind::left_dual_pseudo_core:
      if (auto p = left_dual_pseudo_core(r, a, in.k_max)) x = p->x;
      break;
    case InverseKind::left_dual_v_core: x = left_dual_v_core(r, a, *in.v); break;
    case InverseKind::left_invertible: x = left_invertible(r, a); break;
    default: break;
  }
  return x ? verify(r, kind, in, *x) : empty_report<R>(kind, in);
}

// ---------------------------------------------------------------------------
// Decomposition va = a1 + a2

template <class E>
struct DecompositionResult {
  E a;
  E v;
  E x;  // the left dual v-core inverse used
  E a1;
  E a2;
};

/// a1 = x(va)², a2 = (1 - xva)va for a given left dual v-core inverse x.
template <StarRing R>
DecompositionResult<Elem<R>> decompose_with(const R& r, const Elem<R>& a, const Elem<R>& v, const Elem<R>& x) {
  const auto va = r.mul(v, a);
  const auto xva = r.mul(x, va);
  return {a, v, x, r.mul(xva, va), r.mul(r.sub(r.one(), xva), va)};
}

template <StarRing R>
std::optional<DecompositionResult<Elem<R>>> nilpotent_decomposition(const R& r, const Elem<R>& a, const Elem<R>& v) {
  auto x = left_dual_v_core(r, a, v);
  if (!x) return std::nullopt;
  return decompose_with(r, a, v, *x);
}

template <StarRing R>
std::vector<Verdict> decomposition_verdicts(const R& r, const DecompositionResult<Elem<R>>& d) {
  const auto zero = r.zero();
  return {
      {"a1+a2=va", r.add(d.a1, d.a2) == r.mul(d.v, d.a)},
      {"a2^2=0", r.mul(d.a2, d.a2) == zero},
      {"a2*a1=0", r.mul(r.star(d.a2), d.a1) == zero},
      {"a1a2=0", r.mul(d.a1, d.a2) == zero},
      {"a1 left dual core with inverse x",
       verify(r, InverseKind::left_dual_core, InverseInputs<Elem<R>>::element(d.a1), d.x).overall},
  };
}

// ---------------------------------------------------------------------------
// Coincidence with left (b*,c)-inverses of ab

template <class E>
struct CoincidenceReport {
  bool core_invertible = false;      // a left dual (b,c)-core invertible
  bool ab_left_invertible = false;   // ab left (b*,c)-invertible
  bool ab_strongly_left = false;     // ab strongly left (b*,c)-invertible
  WitnessReport<E> core_as_left;     // canonical core witness checked as left (b*,c)-inverse of ab
  WitnessReport<E> left_as_core;     // canonical left (b*,c)-inverse of ab checked as core witness
  WitnessReport<E> strong_witness;   // canonical strongly left (b*,c)-inverse of ab

  bool consistent() const {
    if (core_invertible != ab_left_invertible || core_invertible != ab_strongly_left) return false;
    if (!core_invertible) return true;
    return core_as_left.overall && left_as_core.overall && strong_witness.overall;
  }
};

template <StarRing R>
CoincidenceReport<Elem<R>> coincidence_check(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  using E = Elem<R>;
  const auto ab = r.mul(a, b);
  const auto bs = r.star(b);
  const auto core_in = InverseInputs<E>::bc(a, b, c);
  const auto left_in = InverseInputs<E>::bc(ab, bs, c);
  const auto core = left_dual_bc_core(r, a, b, c);
  const auto left = left_bc_inverse(r, ab, bs, c);
  const auto strong = strongly_left_bc_inverse(r, ab, bs, c);

  CoincidenceReport<E> out;
  out.core_invertible = core.has_value();
  out.ab_left_invertible = left.has_value();
  out.ab_strongly_left = strong.has_value();
  out.core_as_left = core ? verify(r, InverseKind::left_bc, left_in, *core) : empty_report<R>(InverseKind::left_bc, left_in);
  out.left_as_core = left ? verify(r, InverseKind::left_dual_bc_core, core_in, *left)
                          : empty_report<R>(InverseKind::left_dual_bc_core, core_in);
  out.strong_witness = strong ? verify(r, InverseKind::strongly_left_bc, left_in, *strong)
                              : empty_report<R>(InverseKind::strongly_left_bc, left_in);
  return out;
}

// ---------------------------------------------------------------------------
// Mixed-inverse identities for two elements sharing (b,c)

template <class E>
struct MixedIdentityReport {
  bool left_applicable = false;  // a and d both left (b,c)-invertible
  bool core_applicable = false;  // a and d both left dual (b,c)-core invertible
  std::vector<WitnessReport<E>> reports;

  bool all_hold() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& rep) { return rep.overall; });
  }
};

/// Checks that y·d·x and x·a·y are again left (b,c)-inverses (x = a_l, y = d_l),
/// and that d_core·d·x and a_core·a·y are left dual (b,c)-core inverses.
template <StarRing R>
MixedIdentityReport<Elem<R>> mixed_inverse_identities(const R& r, const Elem<R>& a, const Elem<R>& d, const Elem<R>& b,
                                                      const Elem<R>& c) {
  using E = Elem<R>;
  MixedIdentityReport<E> out;
  const auto x = left_bc_inverse(r, a, b, c);
  const auto y = left_bc_inverse(r, d, b, c);
  out.left_applicable = x && y;
  if (!out.left_applicable) return out;
  const auto for_a = InverseInputs<E>::bc(a, b, c);
  const auto for_d = InverseInputs<E>::bc(d, b, c);
  out.reports.push_back(verify(r, InverseKind::left_bc, for_a, mul(r, *y, d, *x)));
  out.reports.push_back(verify(r, InverseKind::left_bc, for_d, mul(r, *x, a, *y)));

  const auto a_core = left_dual_bc_core(r, a, b, c);
  const auto d_core = left_dual_bc_core(r, d, b, c);
  out.core_applicable = a_core && d_core;
  if (!out.core_applicable) return out;
  out.reports.push_back(verify(r, InverseKind::left_dual_bc_core, for_a, mul(r, *d_core, d, *x)));
  out.reports.push_back(verify(r, InverseKind::left_dual_bc_core, for_d, mul(r, *a_core, a, *y)));
  return out;
}

// ---------------------------------------------------------------------------
// Moore-Penrose and two-sided equivalences

/// Seven routes to Moore-Penrose invertibility of a; all must agree.
template <StarRing R>
std::vector<Criterion> mp_equivalences(const R& r, const Elem<R>& a) {
  const auto as = r.star(a);
  return {
      {"1 moore-penrose", moore_penrose(r, a).has_value()},
      {"2 a left dual a*-core", left_dual_v_core(r, a, as).has_value()},
      {"3 a* left dual a-core", left_dual_v_core(r, as, a).has_value()},
      {"4 a left dual (a*,a*)-core", left_dual_bc_core(r, a, as, as).has_value()},
      {"5 a left (a*,a*)-invertible", left_bc_inverse(r, a, as, as).has_value()},
      {"6 a* left dual (a,a)-core", left_dual_bc_core(r, as, a, a).has_value()},
      {"7 a* left (a,a)-invertible", left_bc_inverse(r, as, a, a).has_value()},
  };
}

/// Items of the two-sided equivalence for (a,b,c), in the form that holds in
/// every ring: item 1 pairs the left dual (b,c)-core inverse with a right
/// (b,c)-core inverse found by duality and checked with the right-bc-core
/// axioms; item 3 carries the (b,c)-invertibility of a; item 4 uses
/// b ∈ b(cab)*R, the star-dual of c ∈ R(cab)*c.
template <StarRing R>
std::vector<Criterion> final_equivalences(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  require_members(r, a, b, c);
  const auto cab = mul(r, c, a, b);
  const auto cab_star = r.star(cab);
  const auto left = left_dual_bc_core(r, a, b, c);
  const auto right = right_bc_core_by_duality(r, a, b, c);
  const bool right_ok =
      right && verify(r, InverseKind::right_bc_core, InverseInputs<Elem<R>>::bc(a, b, c), *right).overall;
  const bool bc_invertible = left_bc_inverse(r, a, b, c) && right_bc_inverse(r, a, b, c);
  const auto rs = r.direct_sum_right_ideals(cab_star, b);
  const auto ls = r.direct_sum_left_ideals(cab_star, c);
  return {
      {"1 left dual & right (b,c)-core", left.has_value() && right_ok},
      {"3 a (b,c)-invertible & cab moore-penrose", bc_invertible && moore_penrose(r, cab).has_value()},
      {"4 b in b(cab)*R & c in R(cab)*c",
       r.right_ideal_contains(b, r.mul(b, cab_star)) && r.left_ideal_contains(c, r.mul(cab_star, c))},
      {"5 R=R(cab)*(+)l(c)=(cab)*R(+)r(b)", ls.is_direct && rs.is_direct},
      {"6 R=R(cab)*+l(c)=(cab)*R+r(b)", ls.is_sum && rs.is_sum},
  };
}

/// Items 3 and 4 read literally, without the (b,c)-invertibility of a and
/// with b ∈ (cab)*R. Neither is equivalent to item 1 in general: for a = b = 0,
/// c = 1 item 3 holds while no right (0,1)-core inverse exists.
template <StarRing R>
std::vector<Criterion> final_equivalences_as_printed(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c) {
  require_members(r, a, b, c);
  const auto cab = mul(r, c, a, b);
  const auto cab_star = r.star(cab);
  return {
      {"3 cab moore-penrose", moore_penrose(r, cab).has_value()},
      {"4 b in (cab)*R & c in R(cab)*c",
       r.right_ideal_contains(b, cab_star) && r.left_ideal_contains(c, r.mul(cab_star, c))},
  };
}

// ---------------------------------------------------------------------------
// Pierce representation at q = xab

struct PierceVerdict {
  static constexpr std::string_view q_projection = "q=xab projection";
  static constexpr std::string_view b2_zero = "b2=0";
  static constexpr std::string_view b4_zero = "b4=0";
  static constexpr std::string_view top = "(x1a1+x2a3)b1+(x1a2+x2a4)b3=q";
  static constexpr std::string_view bottom = "(x3a1+x4a3)b1+(x3a2+x4a4)b3=0";
  static constexpr std::string_view x_in_rc = "x in Rc";
  static constexpr std::string_view c_b1_zero = "p-form b1=0";
  static constexpr std::string_view c_b3_zero = "p-form b3=0";
  static constexpr std::string_view c_top = "p-form (x1a1+x2a3)b2+(x1a2+x2a4)b4=0";
  static constexpr std::string_view c_bottom = "p-form (x3a1+x4a3)b2+(x3a2+x4a4)b4=1-p";
};

/// The block equations of the representation (everything except the
/// projection and membership conditions).
inline constexpr std::string_view kPierceBlockEquations[] = {
    PierceVerdict::b2_zero, PierceVerdict::b4_zero,   PierceVerdict::top,   PierceVerdict::bottom,
    PierceVerdict::c_b1_zero, PierceVerdict::c_b3_zero, PierceVerdict::c_top, PierceVerdict::c_bottom,
};

/// Splits a, b, x at q = xab and at p = 1 - q and evaluates the block
/// equations literally from the blocks. Blocks are formed even when q is not
/// idempotent, so a corrupted x still gets every verdict. Throws
/// NotIdempotent if x passes verify but q is not a projection.
template <StarRing R>
WitnessReport<Elem<R>> pierce_representation_check(const R& r, const Elem<R>& a, const Elem<R>& b, const Elem<R>& c,
                                                   const Elem<R>& x) {
  using E = Elem<R>;
  require_members(r, a, b, c, x);
  const auto in = InverseInputs<E>::bc(a, b, c);
  const bool direct = verify(r, InverseKind::left_dual_bc_core, in, x).overall;
  const auto q = mul(r, x, a, b);
  const bool projection = is_projection(r, q);
  if (direct && !projection) throw NotIdempotent("verified witness gives a non-projection xab");

  WitnessReport<E> rep;
  rep.kind = InverseKind::left_dual_bc_core;
  rep.inputs = detail::echo_inputs<R>(rep.kind, in);
  rep.candidate = x;
  auto add = [&](std::string_view name, bool holds) { rep.verdicts.push_back({std::string(name), holds}); };
  const auto zero = r.zero();

  // Row sums of the block product x·a·b: top row uses x1,x2, bottom row x3,x4.
  auto block_row = [&](const E& xl, const E& xr, const PierceBlocks<E>& ab, const E& b_top, const E& b_bottom) {
    const auto left = r.add(r.mul(xl, ab.a1), r.mul(xr, ab.a3));
    const auto right = r.add(r.mul(xl, ab.a2), r.mul(xr, ab.a4));
    return r.add(r.mul(left, b_top), r.mul(right, b_bottom));
  };

  add(PierceVerdict::q_projection, projection);
  {
    const auto ab = formal_pierce_blocks(r, a, q);
    const auto bb = formal_pierce_blocks(r, b, q);
    const auto xb = formal_pierce_blocks(r, x, q);
    add(PierceVerdict::b2_zero, bb.a2 == zero);
    add(PierceVerdict::b4_zero, bb.a4 == zero);
    add(PierceVerdict::top, block_row(xb.a1, xb.a2, ab, bb.a1, bb.a3) == q);
    add(PierceVerdict::bottom, block_row(xb.a3, xb.a4, ab, bb.a1, bb.a3) == zero);
  }
  add(PierceVerdict::x_in_rc, r.left_ideal_contains(x, c));
  {
    const auto p = r.sub(r.one(), q);
    const auto ab = formal_pierce_blocks(r, a, p);
    const auto bb = formal_pierce_blocks(r, b, p);
    const auto xb = formal_pierce_blocks(r, x, p);
    add(PierceVerdict::c_b1_zero, bb.a1 == zero);
    add(PierceVerdict::c_b3_zero, bb.a3 == zero);
    add(PierceVerdict::c_top, block_row(xb.a1, xb.a2, ab, bb.a2, bb.a4) == zero);
    add(PierceVerdict::c_bottom, block_row(xb.a3, xb.a4, ab, bb.a2, bb.a4) == r.sub(r.one(), p));
  }
  rep.finalize();
  return rep;
}

template <class E>
bool some_block_equation_fails(const WitnessReport<E>& rep) {
  for (auto name : kPierceBlockEquations)
    if (!rep.verdict(name)) return true;
  return false;
}

}  // namespace bccore

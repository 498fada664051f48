#pragma once

// Exact linear algebra over RationalField, GaussianRationalField and
// PrimeField. Everything is deterministic: pivots are taken in ascending
// column order and free variables are set to zero, so two calls on equal
// inputs always return equal outputs.

#include "bccore/matrix.hpp"
#include "bccore/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bccore {

template <class F>
using MatrixOf = Matrix<typename F::value_type>;

// ---------------------------------------------------------------------------
// Elementary operations

template <class F>
MatrixOf<F> zeros(const F& f, std::size_t rows, std::size_t cols) {
  return MatrixOf<F>(rows, cols, f.zero());
}

template <class F>
MatrixOf<F> identity(const F& f, std::size_t n) {
  auto m = zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
MatrixOf<F> add(const F& f, const MatrixOf<F>& x, const MatrixOf<F>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("add: shape mismatch");
  auto out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = f.add(x(i, j), y(i, j));
  return out;
}

template <class F>
MatrixOf<F> subtract(const F& f, const MatrixOf<F>& x, const MatrixOf<F>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("subtract: shape mismatch");
  auto out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = f.sub(x(i, j), y(i, j));
  return out;
}

template <class F>
MatrixOf<F> negate(const F& f, const MatrixOf<F>& x) {
  auto out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = f.neg(x(i, j));
  return out;
}

template <class F>
MatrixOf<F> multiply(const F& f, const MatrixOf<F>& x, const MatrixOf<F>& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  auto out = zeros(f, x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (f.is_zero(x(i, k))) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x(i, k), y(k, j)));
    }
  }
  return out;
}

/// Plain transpose, no conjugation.
template <class T>
Matrix<T> transpose(const Matrix<T>& x) {
  std::vector<T> data;
  data.reserve(x.rows() * x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < x.rows(); ++i) data.push_back(x(i, j));
  return Matrix<T>(x.cols(), x.rows(), std::move(data));
}

template <class F>
MatrixOf<F> conjugate_transpose(const F& f, const MatrixOf<F>& x) {
  auto t = transpose(x);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = f.conj(t(i, j));
  return t;
}

template <class F>
bool is_zero_matrix(const F& f, const MatrixOf<F>& x) {
  return std::all_of(x.data().begin(), x.data().end(), [&](const auto& v) { return f.is_zero(v); });
}

/// [x | y]
template <class T>
Matrix<T> hstack(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("hstack: row counts differ");
  std::vector<T> data;
  data.reserve(x.rows() * (x.cols() + y.cols()));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) data.push_back(x(i, j));
    for (std::size_t j = 0; j < y.cols(); ++j) data.push_back(y(i, j));
  }
  return Matrix<T>(x.rows(), x.cols() + y.cols(), std::move(data));
}

/// [x ; y]
template <class T>
Matrix<T> vstack(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.cols() != y.cols()) throw std::invalid_argument("vstack: column counts differ");
  std::vector<T> data = x.data();
  data.insert(data.end(), y.data().begin(), y.data().end());
  return Matrix<T>(x.rows() + y.rows(), x.cols(), std::move(data));
}

// ---------------------------------------------------------------------------
// Row reduction

template <class F>
struct EchelonForm {
  MatrixOf<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i, ascending

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Unique for a given input.
template <class F>
EchelonForm<F> rref(const F& f, MatrixOf<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const auto scale = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(scale, m(row, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& f, const MatrixOf<F>& m) {
  return rref(f, m).rank();
}

// ---------------------------------------------------------------------------
// Linear matrix equations

/// Solves m·x = target. Free variables are zero.
template <class F>
std::optional<MatrixOf<F>> solve_right(const F& f, const MatrixOf<F>& m, const MatrixOf<F>& target) {
  if (m.rows() != target.rows()) throw std::invalid_argument("solve_right: row counts differ");
  const std::size_t n = m.cols();
  const auto ech = rref(f, hstack(m, target));
  if (!ech.pivots.empty() && ech.pivots.back() >= n) return std::nullopt;
  auto x = zeros(f, n, target.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    for (std::size_t j = 0; j < target.cols(); ++j) x(ech.pivots[r], j) = ech.reduced(r, n + j);
  return x;
}

/// Solves x·m = target by transposing to m^T·x^T = target^T.
template <class F>
std::optional<MatrixOf<F>> solve_left(const F& f, const MatrixOf<F>& m, const MatrixOf<F>& target) {
  if (m.cols() != target.cols()) throw std::invalid_argument("solve_left: column counts differ");
  auto xt = solve_right(f, transpose(m), transpose(target));
  if (!xt) return std::nullopt;
  return transpose(*xt);
}

// ---------------------------------------------------------------------------
// Rank factorization and inner inverses

template <class F>
struct RankFactorization {
  MatrixOf<F> left;   // n×r, full column rank (pivot columns of the input)
  MatrixOf<F> right;  // r×n, full row rank (nonzero rows of the RREF)
  std::size_t rank = 0;
};

template <class F>
RankFactorization<F> rank_factorization(const F& f, const MatrixOf<F>& a) {
  const auto ech = rref(f, a);
  const std::size_t r = ech.rank();
  auto left = zeros(f, a.rows(), r);
  auto right = zeros(f, r, a.cols());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) left(i, k) = a(i, ech.pivots[k]);
    for (std::size_t j = 0; j < a.cols(); ++j) right(k, j) = ech.reduced(k, j);
  }
  return {std::move(left), std::move(right), r};
}

/// Returns g with a·g·a = a, built as (right inverse of G)·(left inverse of F)
/// for a = F·G. The one-sided inverses come from the solvers, never from
/// (F*F)^{-1}F*, which can be singular over prime fields.
template <class F>
MatrixOf<F> inner_inverse(const F& f, const MatrixOf<F>& a) {
  const auto fac = rank_factorization(f, a);
  if (fac.rank == 0) return zeros(f, a.cols(), a.rows());
  const auto eye = identity(f, fac.rank);
  const auto right_inv = solve_right(f, fac.right, eye);
  const auto left_inv = solve_left(f, fac.left, eye);
  if (!right_inv || !left_inv) throw std::logic_error("inner_inverse: rank factorization is not full rank");
  return multiply(f, *right_inv, *left_inv);
}

// ---------------------------------------------------------------------------
// Subspaces, principal ideals and annihilators of M_n(F)

/// Linearly independent vectors in RREF-canonical form; equal subspaces give
/// equal bases.
template <class F>
struct SubspaceBasis {
  std::vector<std::vector<typename F::value_type>> vectors;
  std::size_t dimension() const { return vectors.size(); }
  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

template <class F>
SubspaceBasis<F> row_space(const F& f, const MatrixOf<F>& m) {
  const auto ech = rref(f, m);
  SubspaceBasis<F> basis;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    std::vector<typename F::value_type> v;
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(ech.reduced(r, j));
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

template <class F>
SubspaceBasis<F> column_space(const F& f, const MatrixOf<F>& m) {
  return row_space(f, transpose(m));
}

/// Basis of {v : m·v = 0}, returned as the columns of an n×(n-rank) matrix.
template <class F>
MatrixOf<F> null_space(const F& f, const MatrixOf<F>& m) {
  const auto ech = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  auto basis = zeros(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = f.one();
    for (std::size_t r = 0; r < ech.rank(); ++r) basis(ech.pivots[r], k) = f.neg(ech.reduced(r, free_cols[k]));
  }
  return basis;
}

/// Rx ⊆ Rc, i.e. row(x) ⊆ row(c).
template <class F>
bool left_ideal_contains(const F& f, const MatrixOf<F>& x, const MatrixOf<F>& c) {
  return rank(f, vstack(c, x)) == rank(f, c);
}

/// xR ⊆ bR, i.e. col(x) ⊆ col(b).
template <class F>
bool right_ideal_contains(const F& f, const MatrixOf<F>& x, const MatrixOf<F>& b) {
  return rank(f, hstack(b, x)) == rank(f, b);
}

/// l(x) ⊆ l(y). A row vector kills x iff it kills col(x), so this is col(y) ⊆ col(x).
template <class F>
bool left_annihilator_contained(const F& f, const MatrixOf<F>& x, const MatrixOf<F>& y) {
  return right_ideal_contains(f, y, x);
}

struct DirectSumTest {
  bool is_sum = false;
  bool is_direct = false;
  friend bool operator==(const DirectSumTest&, const DirectSumTest&) = default;
};

/// R = uR ⊕ r(b): col(u) + null(b) must span F^n, directly when the
/// dimensions add up.
template <class F>
DirectSumTest direct_sum_right_ideals(const F& f, const MatrixOf<F>& u, const MatrixOf<F>& b) {
  const std::size_t n = u.rows();
  const auto kernel = null_space(f, b);
  const std::size_t ru = rank(f, u);
  const std::size_t span = rank(f, hstack(u, kernel));
  DirectSumTest out;
  out.is_sum = span == n;
  out.is_direct = out.is_sum && ru + kernel.cols() == n;
  return out;
}

/// R = Ru ⊕ l(c): row(u) + left-null(c) must span F^n.
template <class F>
DirectSumTest direct_sum_left_ideals(const F& f, const MatrixOf<F>& u, const MatrixOf<F>& c) {
  return direct_sum_right_ideals(f, transpose(u), transpose(c));
}

}  // namespace bccore

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lbeval/poly.hpp"

namespace lbeval {

/// Dense row-major matrix of field element codes.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<felem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  felem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  felem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

template <class F>
std::vector<felem> mat_vec(const F& f, const Mat& m, std::span<const felem> v) {
  std::vector<felem> r(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
  return r;
}

template <class F>
Mat mat_mul(const F& f, const Mat& x, const Mat& y) {
  Mat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const felem xv = x.at(i, k);
      if (xv == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return r;
}

inline Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

/// In-place reduced row echelon form with fixed pivot order (first nonzero
/// entry scanning columns left to right). Returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    const felem piv_inv = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const felem factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Mat m) {
  return rref(f, m).size();
}

/// Solves A x = b; returns the solution with all free variables zero,
/// or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<felem>> solve(const F& f, Mat a, std::span<const felem> b) {
  Mat aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  std::vector<felem> x(a.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
  return x;
}

template <class F>
std::optional<std::vector<felem>> solve(const F& f, Mat a, const std::vector<felem>& b) {
  return solve(f, std::move(a), std::span<const felem>(b));
}

/// Basis of {x : A x = 0}, one vector per free column, deterministic order.
template <class F>
std::vector<std::vector<felem>> kernel_basis(const F& f, Mat a) {
  const std::size_t n = a.cols;
  auto pivots = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<felem>> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<felem> v(n, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a.at(r, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat> inverse(const F& f, const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  const std::size_t n = m.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(f, aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace lbeval

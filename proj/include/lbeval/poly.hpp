#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "lbeval/errors.hpp"

namespace lbeval {

using felem = std::uint32_t;

/// Univariate polynomial, coefficients low-to-high, canonical form
/// (no trailing zero coefficients; the zero polynomial is an empty vector).
struct Poly {
  std::vector<felem> c;

  Poly() = default;
  explicit Poly(std::vector<felem> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly constant(felem v) {
    return v == 0 ? Poly{} : Poly(std::vector<felem>{v});
  }
  static Poly monomial(std::size_t e, felem coef = 1) {
    if (coef == 0) return Poly{};
    Poly p;
    p.c.assign(e + 1, 0);
    p.c[e] = coef;
    return p;
  }

  bool is_zero() const { return c.empty(); }
  // degree of the zero polynomial reported as -1
  long degree() const { return static_cast<long>(c.size()) - 1; }
  felem coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

inline std::set<long> deg_set(const Poly& p) {
  std::set<long> s;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) s.insert(static_cast<long>(i));
  return s;
}

template <class F>
Poly poly_add(const F& f, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.add(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

template <class F>
Poly poly_sub(const F& f, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.sub(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

template <class F>
Poly poly_scale(const F& f, const Poly& a, felem s) {
  if (s == 0) return Poly{};
  Poly r = a;
  for (auto& x : r.c) x = f.mul(x, s);
  r.trim();
  return r;
}

template <class F>
Poly poly_mul(const F& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

/// Quotient and remainder with deg(rem) < deg(m).
template <class F>
std::pair<Poly, Poly> poly_divmod(const F& f, const Poly& a, const Poly& m) {
  if (m.is_zero()) fail(Errc::ZeroModulus, "division by the zero polynomial");
  Poly rem = a;
  Poly quo;
  const long dm = m.degree();
  const felem lead_inv = f.inv(m.c.back());
  if (rem.degree() >= dm) quo.c.assign(rem.c.size() - m.c.size() + 1, 0);
  while (rem.degree() >= dm) {
    const long shift = rem.degree() - dm;
    const felem factor = f.mul(rem.c.back(), lead_inv);
    quo.c[shift] = factor;
    for (long i = 0; i <= dm; ++i) {
      const auto idx = static_cast<std::size_t>(i + shift);
      rem.c[idx] = f.sub(rem.c[idx], f.mul(factor, m.c[static_cast<std::size_t>(i)]));
    }
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

template <class F>
Poly poly_mod_reduce(const F& f, const Poly& a, const Poly& m) {
  return poly_divmod(f, a, m).second;
}

template <class F>
felem poly_eval(const F& f, const Poly& p, felem x) {
  felem acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.c[i]);
  return acc;
}

/// X^e mod m by square-and-multiply; residues stay below deg(m).
template <class F>
Poly poly_powmod_x(const F& f, std::uint64_t e, const Poly& m) {
  if (m.is_zero()) fail(Errc::ZeroModulus, "powmod with zero modulus");
  Poly result = poly_mod_reduce(f, Poly::constant(1), m);
  Poly base = poly_mod_reduce(f, Poly::monomial(1), m);
  while (e > 0) {
    if (e & 1) result = poly_mod_reduce(f, poly_mul(f, result, base), m);
    base = poly_mod_reduce(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

/// Monic-divisor scan up to half degree; exhaustive, desk scale only.
template <class F>
bool is_irreducible(const F& f, const Poly& candidate) {
  const felem q = f.order();
  const long deg = candidate.degree();
  if (deg <= 0) return false;
  for (long dd = 1; dd * 2 <= deg; ++dd) {
    std::uint64_t count = 1;
    for (long i = 0; i < dd; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly div;
      div.c.assign(static_cast<std::size_t>(dd) + 1, 0);
      std::uint64_t c = code;
      for (long i = 0; i < dd; ++i) {
        div.c[static_cast<std::size_t>(i)] = static_cast<felem>(c % q);
        c /= q;
      }
      div.c.back() = 1;
      if (poly_mod_reduce(f, candidate, div).is_zero()) return false;
    }
  }
  return true;
}

/// Unique polynomial of degree < #points through the given points (Lagrange).
template <class F>
Poly interpolate(const F& f, std::span<const std::pair<felem, felem>> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        fail(Errc::DuplicatePoint, "repeated x in interpolation input");
  if (points.empty()) return Poly{};

  // master = prod (X - x_i), built incrementally
  Poly master = Poly::constant(1);
  for (const auto& [x, y] : points) {
    Poly lin;
    lin.c = {f.neg(x), 1};
    master = poly_mul(f, master, lin);
  }

  Poly r;
  Poly lin;
  for (const auto& [x, y] : points) {
    if (y == 0) continue;
    lin.c = {f.neg(x), 1};
    auto [quot, rem] = poly_divmod(f, master, lin);
    const felem den = poly_eval(f, quot, x);
    r = poly_add(f, r, poly_scale(f, quot, f.div(y, den)));
  }
  return r;
}

template <class F>
Poly interpolate(const F& f, const std::vector<std::pair<felem, felem>>& points) {
  return interpolate(f, std::span<const std::pair<felem, felem>>(points));
}

}  // namespace lbeval

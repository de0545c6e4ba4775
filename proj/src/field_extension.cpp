#include "lbeval/field_extension.hpp"

#include <string>

#include "lbeval/errors.hpp"

namespace lbeval {

namespace {
constexpr std::uint64_t kMaxOrder = 1u << 20;
}

FieldExtension::FieldExtension(felem q, int t,
                               std::optional<std::vector<felem>> modulus,
                               std::optional<std::vector<felem>> basis)
    : base_(q), t_(t) {
  if (t < 2) fail(Errc::ParamConstraintViolated, "extension degree t must be >= 2");
  std::uint64_t Q = 1;
  for (int i = 0; i < t; ++i) {
    Q *= q;
    if (Q > kMaxOrder) fail(Errc::FieldTooLarge, "q^t exceeds 2^20");
  }
  Q_ = static_cast<felem>(Q);
  bits_ = ceil_log2(Q_);

  if (modulus) {
    Poly m(*modulus);
    if (m.degree() != t)
      fail(Errc::LengthMismatch, "modulus degree " + std::to_string(m.degree()) +
                                     ", expected " + std::to_string(t));
    for (felem c : m.c)
      if (!base_.is_element(c))
        fail(Errc::CoefficientNotInBase, "modulus coefficient out of range");
    if (m.c.back() != 1) {
      const felem s = base_.inv(m.c.back());
      for (auto& c : m.c) c = base_.mul(c, s);
    }
    if (!is_irreducible(base_, m))
      fail(Errc::ReducibleModulus, "modulus factors over the base field");
    modulus_ = m.c;
  } else {
    for (felem code = Q_; code < 2 * Q_; ++code) {
      Poly cand;
      cand.c.resize(static_cast<std::size_t>(t) + 1);
      felem c = code;
      for (auto& digit : cand.c) {
        digit = c % q;
        c /= q;
      }
      cand.trim();
      if (cand.degree() == t && is_irreducible(base_, cand)) {
        modulus_ = cand.c;
        break;
      }
    }
  }

  // discrete log tables for multiplication
  exp_.assign(Q_ - 1, 0);
  log_.assign(Q_, 0);
  bool have_tables = false;
  for (felem cand = 2; cand < Q_ && !have_tables; ++cand) {
    exp_[0] = 1;
    felem x = 1;
    bool primitive = true;
    for (felem i = 1; i < Q_ - 1; ++i) {
      x = mul_slow(x, cand);
      if (x == 1) {
        primitive = false;
        break;
      }
      exp_[i] = x;
    }
    if (primitive && mul_slow(x, cand) == 1) {
      for (felem i = 0; i < Q_ - 1; ++i) log_[exp_[i]] = i;
      have_tables = true;
    }
  }
  if (!have_tables) fail(Errc::NotPrimePower, "no generator found (internal)");

  trace_.assign(Q_, 0);
  for (felem x = 1; x < Q_; ++x) {
    felem acc = 0;
    std::uint64_t e = log_[x];
    for (int i = 0; i < t_; ++i) {
      acc = add(acc, exp_[e]);
      e = (e * q) % (Q_ - 1);
    }
    if (!in_base(acc)) fail(Errc::NotPrimePower, "trace left the base field (internal)");
    trace_[x] = acc;
  }

  if (basis) {
    if (basis->size() != static_cast<std::size_t>(t))
      fail(Errc::BadBasis, "basis must have t elements");
    for (felem b : *basis)
      if (!is_element(b)) fail(Errc::BadBasis, "basis element out of range");
    basis_ = *basis;
  } else {
    basis_.resize(static_cast<std::size_t>(t));
    felem p = 1;
    for (auto& b : basis_) {
      b = p;
      p *= q;
    }
  }

  // digits -> basis coordinates; singular matrix means a dependent basis
  Mat bm(static_cast<std::size_t>(t_), static_cast<std::size_t>(t_));
  for (int i = 0; i < t_; ++i) {
    auto d = digits(basis_[static_cast<std::size_t>(i)]);
    for (int j = 0; j < t_; ++j)
      bm.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
          d[static_cast<std::size_t>(j)];
  }
  auto binv = inverse(base_, bm);
  if (!binv) fail(Errc::BadBasis, "basis elements are linearly dependent over the base");
  basis_matrix_inv_ = std::move(*binv);

  // trace coordinates tr(zeta_i x) as a base-linear map of the digits of x
  Mat tm(static_cast<std::size_t>(t_), static_cast<std::size_t>(t_));
  felem xpow = 1;
  for (int j = 0; j < t_; ++j) {
    for (int i = 0; i < t_; ++i)
      tm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          trace(mul(basis_[static_cast<std::size_t>(i)], xpow));
    xpow *= q;
  }
  auto tinv = inverse(base_, tm);
  if (!tinv) fail(Errc::BadBasis, "trace pairing degenerate (internal)");
  trace_matrix_inv_ = std::move(*tinv);
}

felem FieldExtension::mul_slow(felem a, felem b) const {
  Poly pa(digits(a)), pb(digits(b));
  Poly r = poly_mod_reduce(base_, poly_mul(base_, pa, pb), Poly(modulus_));
  felem code = 0;
  const felem q = base_.order();
  for (std::size_t i = r.c.size(); i-- > 0;) code = code * q + r.c[i];
  return code;
}

felem FieldExtension::add(felem a, felem b) const {
  if (base_.characteristic() == 2) return a ^ b;
  const felem q = base_.order();
  felem r = 0, mult = 1;
  for (int i = 0; i < t_; ++i) {
    r += base_.add(a % q, b % q) * mult;
    a /= q;
    b /= q;
    mult *= q;
  }
  return r;
}

felem FieldExtension::neg(felem a) const {
  if (base_.characteristic() == 2) return a;
  const felem q = base_.order();
  felem r = 0, mult = 1;
  for (int i = 0; i < t_; ++i) {
    r += base_.neg(a % q) * mult;
    a /= q;
    mult *= q;
  }
  return r;
}

felem FieldExtension::inv(felem a) const {
  if (a == 0) fail(Errc::DegenerateArgument, "inverse of zero");
  return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
}

felem FieldExtension::pow(felem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t le = (log_[a] * (e % (Q_ - 1))) % (Q_ - 1);
  return exp_[le];
}

felem FieldExtension::recover_from_traces(std::span<const felem> coords) const {
  auto d = mat_vec(base_, trace_matrix_inv_, coords);
  return from_digits(d);
}

std::vector<felem> FieldExtension::digits(felem x) const {
  const felem q = base_.order();
  std::vector<felem> d(static_cast<std::size_t>(t_), 0);
  for (auto& digit : d) {
    digit = x % q;
    x /= q;
  }
  return d;
}

felem FieldExtension::from_digits(std::span<const felem> d) const {
  const felem q = base_.order();
  felem code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * q + d[i];
  return code;
}

std::vector<felem> FieldExtension::basis_coords(felem x) const {
  auto d = digits(x);
  return mat_vec(base_, basis_matrix_inv_, d);
}

felem FieldExtension::from_basis_coords(std::span<const felem> coords) const {
  felem acc = 0;
  for (int i = 0; i < t_; ++i)
    acc = add(acc, mul(basis_[static_cast<std::size_t>(i)],
                       coords[static_cast<std::size_t>(i)]));
  return acc;
}

std::shared_ptr<const FieldExtension> make_extension_field(
    felem q, int t, std::optional<std::vector<felem>> modulus,
    std::optional<std::vector<felem>> basis) {
  return std::make_shared<const FieldExtension>(q, t, std::move(modulus),
                                                std::move(basis));
}

}  // namespace lbeval

#include "lbeval/base_field.hpp"

#include <bit>
#include <cstdint>

#include "lbeval/errors.hpp"

namespace lbeval {

namespace {

/// Z_p arithmetic, used to build GF(p^m) and to run the modulus search.
struct PrimeField {
  felem p;
  felem order() const { return p; }
  felem add(felem a, felem b) const { return (a + b) % p; }
  felem sub(felem a, felem b) const { return (a + p - b) % p; }
  felem neg(felem a) const { return a == 0 ? 0 : p - a; }
  felem mul(felem a, felem b) const {
    return static_cast<felem>((std::uint64_t(a) * b) % p);
  }
  felem pow(felem a, std::uint64_t e) const {
    felem r = 1;
    felem base = a % p;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  felem inv(felem a) const { return pow(a, p - 2); }
  felem div(felem a, felem b) const { return mul(a, inv(b)); }
};

std::vector<felem> digits_of(felem code, felem radix, int len) {
  std::vector<felem> d(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len && code != 0; ++i) {
    d[static_cast<std::size_t>(i)] = code % radix;
    code /= radix;
  }
  return d;
}

}  // namespace

int ceil_log2(std::uint64_t v) {
  if (v <= 1) return 0;
  return std::bit_width(v - 1);
}

bool prime_power(felem q, felem& p, int& m) {
  if (q < 2) return false;
  felem d = 2;
  while (d * d <= q && q % d != 0) ++d;
  p = (d * d <= q) ? d : q;
  felem rest = q;
  m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  return rest == 1;
}

BaseField::BaseField(felem q) {
  if (!prime_power(q, p_, m_))
    fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  q_ = q;
  bits_ = ceil_log2(q);
  if (m_ == 1) return;

  PrimeField fp{p_};
  for (felem code = q; code < 2 * q; ++code) {
    Poly cand(digits_of(code, p_, m_ + 1));
    if (cand.degree() == m_ && is_irreducible(fp, cand)) {
      modulus_ = cand.c;
      break;
    }
  }

  // element codes <-> coefficient vectors over F_p
  auto mul_slow = [&](felem a, felem b) {
    Poly pa(digits_of(a, p_, m_)), pb(digits_of(b, p_, m_));
    Poly r = poly_mod_reduce(fp, poly_mul(fp, pa, pb), Poly(modulus_));
    felem code = 0;
    for (std::size_t i = r.c.size(); i-- > 0;) code = code * p_ + r.c[i];
    return code;
  };

  if (modulus_.empty())
    fail(Errc::ReducibleModulus, "no irreducible modulus found (internal)");

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (felem cand = 2; cand < q_; ++cand) {
    exp_[0] = 1;
    felem x = 1;
    bool primitive = true;
    for (felem i = 1; i < q_ - 1; ++i) {
      x = mul_slow(x, cand);
      if (x == 1) {
        primitive = false;
        break;
      }
      exp_[i] = x;
    }
    if (primitive && mul_slow(x, cand) == 1) {
      for (felem i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  fail(Errc::NotPrimePower, "no generator found (internal)");
}

felem BaseField::add(felem a, felem b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  felem r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

felem BaseField::neg(felem a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  felem r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    const felem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

felem BaseField::sub(felem a, felem b) const { return add(a, neg(b)); }

felem BaseField::mul(felem a, felem b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<felem>((std::uint64_t(a) * b) % p_);
  felem s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

felem BaseField::inv(felem a) const {
  if (a == 0) fail(Errc::DegenerateArgument, "inverse of zero");
  if (m_ == 1) return PrimeField{p_}.inv(a);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

felem BaseField::pow(felem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (m_ == 1) return PrimeField{p_}.pow(a, e);
  const std::uint64_t le = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
  return exp_[le];
}

}  // namespace lbeval

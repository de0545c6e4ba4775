#pragma once

#include <cstdint>
#include <vector>

#include "lbeval/poly.hpp"

namespace lbeval {

/// GF(q) for a prime power q = p^m. Elements are integer codes in [0, q):
/// for m > 1 the code is the base-p digit vector of the polynomial
/// representation modulo a fixed irreducible polynomial over F_p.
class BaseField {
 public:
  explicit BaseField(felem q);

  felem order() const { return q_; }
  felem characteristic() const { return p_; }
  int ext_degree() const { return m_; }

  /// Modulus over F_p (low-to-high, length m+1); empty when m == 1.
  const std::vector<felem>& modulus() const { return modulus_; }

  bool is_element(felem a) const { return a < q_; }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;
  felem div(felem a, felem b) const { return mul(a, inv(b)); }
  felem pow(felem a, std::uint64_t e) const;

  /// Number of bits to transmit one element: ceil(log2 q).
  int bits_per_symbol() const { return bits_; }

 private:
  felem q_ = 0, p_ = 0;
  int m_ = 1;
  int bits_ = 0;
  std::vector<felem> modulus_;       // over F_p, m > 1 only
  std::vector<felem> exp_, log_;     // discrete log tables, m > 1 only
};

/// ceil(log2 v) for v >= 1.
int ceil_log2(std::uint64_t v);

/// Factors q as p^m; returns false when q is not a prime power.
bool prime_power(felem q, felem& p, int& m);

}  // namespace lbeval

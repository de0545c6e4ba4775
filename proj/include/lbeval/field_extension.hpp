#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "lbeval/base_field.hpp"
#include "lbeval/linalg.hpp"
#include "lbeval/poly.hpp"

namespace lbeval {

/// GF(q^t) over GF(q), with the field trace onto the base and a fixed basis
/// zeta_1..zeta_t. Elements are integer codes in [0, Q): the base-q digit
/// vector of the polynomial representation modulo the field modulus.
/// Immutable after construction; all operations are pure.
class FieldExtension {
 public:
  FieldExtension(felem q, int t,
                 std::optional<std::vector<felem>> modulus = std::nullopt,
                 std::optional<std::vector<felem>> basis = std::nullopt);

  const BaseField& base() const { return base_; }
  felem base_order() const { return base_.order(); }
  felem order() const { return Q_; }
  int ext_degree() const { return t_; }

  /// Modulus coefficients over the base field, low-to-high, length t+1.
  const std::vector<felem>& modulus() const { return modulus_; }
  /// Basis zeta_1..zeta_t as element codes.
  const std::vector<felem>& basis() const { return basis_; }

  bool is_element(felem a) const { return a < Q_; }
  bool in_base(felem a) const { return a < base_.order(); }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const { return add(a, neg(b)); }
  felem neg(felem a) const;
  felem mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    felem s = log_[a] + log_[b];
    if (s >= Q_ - 1) s -= Q_ - 1;
    return exp_[s];
  }
  felem inv(felem a) const;
  felem div(felem a, felem b) const { return mul(a, inv(b)); }
  felem pow(felem a, std::uint64_t e) const;
  felem frobenius(felem a) const { return pow(a, base_.order()); }

  /// tr(x) = sum of x^(q^i); lands in the base field.
  felem trace(felem x) const { return trace_[x]; }

  /// The unique a with tr(zeta_i * a) = coords[i-1] for every i.
  felem recover_from_traces(std::span<const felem> coords) const;

  /// Base-q digits of the polynomial representation (power-basis coords).
  std::vector<felem> digits(felem x) const;
  felem from_digits(std::span<const felem> d) const;

  /// Coordinates of x with respect to the basis zeta_1..zeta_t.
  std::vector<felem> basis_coords(felem x) const;
  felem from_basis_coords(std::span<const felem> coords) const;

  int bits_per_symbol() const { return bits_; }             // ceil(log2 Q)
  int bits_per_base_symbol() const { return base_.bits_per_symbol(); }

 private:
  felem mul_slow(felem a, felem b) const;

  BaseField base_;
  int t_ = 0;
  felem Q_ = 0;
  int bits_ = 0;
  std::vector<felem> modulus_;
  std::vector<felem> basis_;
  std::vector<felem> exp_, log_, trace_;
  Mat trace_matrix_inv_;   // over the base: trace coords -> digits
  Mat basis_matrix_inv_;   // over the base: digits -> basis coords
};

/// Validating factory; default modulus is the lexicographically smallest
/// irreducible monic polynomial of degree t, default basis is 1, x, ..., x^(t-1).
std::shared_ptr<const FieldExtension> make_extension_field(
    felem q, int t, std::optional<std::vector<felem>> modulus = std::nullopt,
    std::optional<std::vector<felem>> basis = std::nullopt);

}  // namespace lbeval

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lbeval/field_extension.hpp"
#include "lbeval/linalg.hpp"
#include "lbeval/poly.hpp"

namespace lbeval {

/// Reed-Solomon code of dimension k: messages are coefficient vectors of
/// degree-<k polynomials, codeword symbol j is f(alpha_j).
class RSCode {
 public:
  RSCode(std::shared_ptr<const FieldExtension> field, int k,
         std::vector<felem> eval_points);

  /// Evaluation points are the whole field in ascending code order.
  static RSCode full_length(std::shared_ptr<const FieldExtension> field, int k);

  const FieldExtension& field() const { return *field_; }
  const std::shared_ptr<const FieldExtension>& field_ptr() const { return field_; }
  int dim() const { return k_; }
  int length() const { return n_; }
  std::span<const felem> eval_points() const { return points_; }
  felem point(int j) const { return points_[static_cast<std::size_t>(j)]; }
  bool is_full_length() const { return full_length_; }

  /// prod_j (X - alpha_j)
  const Poly& vanishing_poly() const { return vanishing_; }

  /// n x k Vandermonde generator.
  Mat generator_matrix() const;

  std::vector<felem> encode(std::span<const felem> message) const;

  std::vector<felem> systematic_encode(std::span<const felem> values,
                                       std::span<const int> info_positions) const;

  struct NaiveRecovery {
    std::vector<felem> message;       // length k
    std::uint64_t bandwidth_bits;     // k * ceil(log2 Q)
  };

  /// Decodes from >= k (position, symbol) pairs; extra pairs are checked
  /// against the interpolated polynomial.
  NaiveRecovery naive_recover(
      std::span<const std::pair<int, felem>> symbols) const;

  /// Basis of the dual code, n-k vectors, by elimination.
  std::vector<std::vector<felem>> dual_code_basis() const;

 private:
  std::shared_ptr<const FieldExtension> field_;
  int k_ = 0, n_ = 0;
  std::vector<felem> points_;
  bool full_length_ = false;
  Poly vanishing_;
};

}  // namespace lbeval

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lbeval/field_extension.hpp"
#include "lbeval/linalg.hpp"

namespace lbeval {

/// Per-node base-field subspaces V_1..V_n of the extension field, each given
/// by a basis of element codes. Bases are validated to be independent over
/// the base field.
class SubspaceAssignment {
 public:
  SubspaceAssignment(const FieldExtension& f,
                     std::vector<std::vector<felem>> per_node_basis);

  std::size_t nodes() const { return basis_.size(); }
  int dim(std::size_t j) const { return static_cast<int>(basis_[j].size()); }
  std::span<const felem> node_basis(std::size_t j) const { return basis_[j]; }

  /// (sum_j dim V_j) * ceil(log2 q)
  std::uint64_t bandwidth_bits(const FieldExtension& f) const;

 private:
  std::vector<std::vector<felem>> basis_;
};

/// Any w with G^T w = p; deterministic (fixed pivot order, free variables
/// zeroed). G is the n x k generator.
std::vector<felem> find_witness(const FieldExtension& f, const Mat& g,
                                std::span<const felem> p);

/// True iff zeta_i w lies in C-perp + V for every basis element zeta_i,
/// decided over the base field.
bool verify_linear_scheme(const FieldExtension& f, const Mat& g,
                          std::span<const felem> p, const SubspaceAssignment& v);

/// Everything the aggregator needs: the witness w, dual codewords z^(i) with
/// zeta_i w - z^(i) in V coordinate-wise, and the base-field coefficients
/// expressing those differences in each node basis.
struct GenericSchemeWitness {
  std::vector<felem> p;
  std::vector<felem> w;
  std::vector<std::vector<felem>> z;                 // [i] -> dual codeword
  std::vector<std::vector<std::vector<felem>>> a;    // [i][j][l] base coeffs
};

GenericSchemeWitness decompose_witness(const FieldExtension& f, const Mat& g,
                                       std::span<const felem> p,
                                       const SubspaceAssignment& v);

/// What node j sends: traces of its symbol against its subspace basis.
struct NodeResponse {
  int node = 0;
  std::vector<felem> values;   // base-field symbols
  int bit_count = 0;           // values.size() * ceil(log2 q)
};

NodeResponse node_response(const FieldExtension& f, int node, felem symbol,
                           std::span<const felem> node_basis);

/// Recovers p^T x from the responses via the witness tables.
felem generic_reconstruct(const FieldExtension& f,
                          const GenericSchemeWitness& witness,
                          std::span<const NodeResponse> responses);

/// Exhaustively computes both sides of the duality characterization
/// ({w : zeta_i w in C-perp + V for all i} versus the F-orthogonal of
/// span_F(C intersect W)) and reports mutual containment.
std::pair<bool, bool> perp_char_check(const FieldExtension& f, const Mat& g,
                                      const SubspaceAssignment& v);

/// Concatenated base-field digits of each coordinate.
std::vector<felem> flatten_to_base(const FieldExtension& f,
                                   std::span<const felem> vec);

}  // namespace lbeval

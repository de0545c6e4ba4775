#include "lbeval/scheme_core.hpp"

#include <cstdint>
#include <map>
#include <string>

#include "lbeval/errors.hpp"

namespace lbeval {

namespace {

// Columns spanning C-perp + V over the base field, as vectors in B^(nt).
// Layout: t columns per dual basis vector (zeta_m * y), then the node bases.
struct SpanColumns {
  Mat cols;                    // nt rows
  std::size_t dual_cols = 0;   // t * (n - k)
};

std::vector<std::vector<felem>> dual_basis_of(const FieldExtension& f, const Mat& g) {
  return kernel_basis(f, transpose(g));
}

SpanColumns span_columns(const FieldExtension& f, const Mat& g,
                         const SubspaceAssignment& v) {
  const std::size_t n = g.rows;
  const auto t = static_cast<std::size_t>(f.ext_degree());
  auto dual = dual_basis_of(f, g);

  std::size_t vcols = 0;
  for (std::size_t j = 0; j < n; ++j) vcols += static_cast<std::size_t>(v.dim(j));

  SpanColumns out;
  out.dual_cols = dual.size() * t;
  out.cols = Mat(n * t, out.dual_cols + vcols);

  std::size_t col = 0;
  std::vector<felem> scaled(n);
  for (const auto& y : dual) {
    for (std::size_t m = 0; m < t; ++m, ++col) {
      for (std::size_t j = 0; j < n; ++j) scaled[j] = f.mul(f.basis()[m], y[j]);
      auto flat = flatten_to_base(f, scaled);
      for (std::size_t r = 0; r < flat.size(); ++r) out.cols.at(r, col) = flat[r];
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (felem beta : v.node_basis(j)) {
      auto d = f.digits(beta);
      for (std::size_t r = 0; r < t; ++r) out.cols.at(j * t + r, col) = d[r];
      ++col;
    }
  }
  return out;
}

}  // namespace

std::vector<felem> flatten_to_base(const FieldExtension& f,
                                   std::span<const felem> vec) {
  const auto t = static_cast<std::size_t>(f.ext_degree());
  std::vector<felem> out(vec.size() * t);
  for (std::size_t j = 0; j < vec.size(); ++j) {
    auto d = f.digits(vec[j]);
    for (std::size_t r = 0; r < t; ++r) out[j * t + r] = d[r];
  }
  return out;
}

SubspaceAssignment::SubspaceAssignment(const FieldExtension& f,
                                       std::vector<std::vector<felem>> per_node_basis)
    : basis_(std::move(per_node_basis)) {
  const auto t = static_cast<std::size_t>(f.ext_degree());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const auto& b = basis_[j];
    if (b.size() > t) fail(Errc::BadBasis, "node subspace dimension exceeds t");
    if (b.empty()) continue;
    Mat m(t, b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!f.is_element(b[i]) || b[i] == 0)
        fail(Errc::BadBasis, "node basis element invalid");
      auto d = f.digits(b[i]);
      for (std::size_t r = 0; r < t; ++r) m.at(r, i) = d[r];
    }
    if (rank(f.base(), m) != b.size())
      fail(Errc::BadBasis, "node basis dependent over the base field at node " +
                               std::to_string(j));
  }
}

std::uint64_t SubspaceAssignment::bandwidth_bits(const FieldExtension& f) const {
  std::uint64_t symbols = 0;
  for (const auto& b : basis_) symbols += b.size();
  return symbols * static_cast<std::uint64_t>(f.bits_per_base_symbol());
}

std::vector<felem> find_witness(const FieldExtension& f, const Mat& g,
                                std::span<const felem> p) {
  auto sol = solve(f, transpose(g), p);
  if (!sol)
    fail(Errc::DegenerateArgument, "generator matrix lacks full column rank");
  return *sol;
}

bool verify_linear_scheme(const FieldExtension& f, const Mat& g,
                          std::span<const felem> p, const SubspaceAssignment& v) {
  if (v.nodes() != g.rows) fail(Errc::LengthMismatch, "one subspace per node required");
  auto w = find_witness(f, g, p);
  auto cols = span_columns(f, g, v);
  const std::size_t n = g.rows;
  std::vector<felem> scaled(n);
  for (felem zeta : f.basis()) {
    for (std::size_t j = 0; j < n; ++j) scaled[j] = f.mul(zeta, w[j]);
    auto target = flatten_to_base(f, scaled);
    if (!solve(f.base(), cols.cols, target)) return false;
  }
  return true;
}

GenericSchemeWitness decompose_witness(const FieldExtension& f, const Mat& g,
                                       std::span<const felem> p,
                                       const SubspaceAssignment& v) {
  if (v.nodes() != g.rows) fail(Errc::LengthMismatch, "one subspace per node required");
  const std::size_t n = g.rows;
  const auto t = static_cast<std::size_t>(f.ext_degree());

  GenericSchemeWitness out;
  out.p.assign(p.begin(), p.end());
  out.w = find_witness(f, g, p);

  auto dual = dual_basis_of(f, g);
  auto cols = span_columns(f, g, v);

  std::vector<felem> scaled(n);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < n; ++j) scaled[j] = f.mul(f.basis()[i], out.w[j]);
    auto target = flatten_to_base(f, scaled);
    auto sol = solve(f.base(), cols.cols, target);
    if (!sol)
      fail(Errc::NotAScheme, "subspaces do not form a linear evaluation scheme");

    // dual part: z^(i) = sum lambda_(y,m) zeta_m y, computed over F
    std::vector<felem> z(n, 0);
    std::size_t col = 0;
    for (const auto& y : dual)
      for (std::size_t m = 0; m < t; ++m, ++col) {
        const felem lambda = (*sol)[col];
        if (lambda == 0) continue;
        const felem s = f.mul(lambda, f.basis()[m]);
        for (std::size_t j = 0; j < n; ++j) z[j] = f.add(z[j], f.mul(s, y[j]));
      }
    out.z.push_back(std::move(z));

    std::vector<std::vector<felem>> arow(n);
    for (std::size_t j = 0; j < n; ++j) {
      arow[j].resize(static_cast<std::size_t>(v.dim(j)));
      for (auto& c : arow[j]) c = (*sol)[col++];
    }
    out.a.push_back(std::move(arow));
  }
  return out;
}

NodeResponse node_response(const FieldExtension& f, int node, felem symbol,
                           std::span<const felem> node_basis) {
  NodeResponse r;
  r.node = node;
  for (felem beta : node_basis) r.values.push_back(f.trace(f.mul(symbol, beta)));
  r.bit_count = static_cast<int>(r.values.size()) * f.bits_per_base_symbol();
  return r;
}

felem generic_reconstruct(const FieldExtension& f,
                          const GenericSchemeWitness& witness,
                          std::span<const NodeResponse> responses) {
  const auto t = static_cast<std::size_t>(f.ext_degree());
  const std::size_t n = witness.w.size();
  std::map<int, const NodeResponse*> by_node;
  for (const auto& r : responses) by_node[r.node] = &r;

  std::vector<felem> coords(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    felem acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& coeffs = witness.a[i][j];
      if (coeffs.empty()) continue;
      auto it = by_node.find(static_cast<int>(j));
      if (it == by_node.end() || it->second->values.size() < coeffs.size())
        fail(Errc::MissingResponse,
             "node " + std::to_string(j) + " response required");
      for (std::size_t l = 0; l < coeffs.size(); ++l)
        acc = f.base().add(acc,
                           f.base().mul(coeffs[l], it->second->values[l]));
    }
    coords[i] = acc;
  }
  return f.recover_from_traces(coords);
}

std::pair<bool, bool> perp_char_check(const FieldExtension& f, const Mat& g,
                                      const SubspaceAssignment& v) {
  const std::size_t n = g.rows;
  const std::size_t k = g.cols;
  const auto t = static_cast<std::size_t>(f.ext_degree());
  const std::size_t nt = n * t;

  double cw_count = 1;
  for (std::size_t i = 0; i < k; ++i) cw_count *= f.order();
  if (cw_count > 4096)
    fail(Errc::TooLargeForExhaustive, "codeword enumeration needs Q^k <= 4096");

  // Left side: w with zeta_i w in C-perp + V for all i. Constraints come from
  // the annihilator of the span columns, pulled back through multiplication
  // by zeta_i.
  auto cols = span_columns(f, g, v);
  auto annihilator = kernel_basis(f.base(), transpose(cols.cols));

  // multiplication-by-zeta as a base-linear map on digit vectors
  std::vector<Mat> mult_map(t, Mat(t, t));
  for (std::size_t i = 0; i < t; ++i) {
    felem xpow = 1;
    for (std::size_t c = 0; c < t; ++c) {
      auto d = f.digits(f.mul(f.basis()[i], xpow));
      for (std::size_t r = 0; r < t; ++r) mult_map[i].at(r, c) = d[r];
      xpow *= f.base_order();
    }
  }

  Mat constraints(annihilator.size() * t, nt);
  std::size_t row = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (const auto& y : annihilator) {
      // row = y^T * blockdiag(mult_map[i])
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < t; ++c) {
          felem acc = 0;
          for (std::size_t r = 0; r < t; ++r)
            acc = f.base().add(acc, f.base().mul(y[j * t + r], mult_map[i].at(r, c)));
          constraints.at(row, j * t + c) = acc;
        }
      ++row;
    }
  }
  auto left_basis = kernel_basis(f.base(), constraints);

  // Right side: F-orthogonal of span_F(C intersect W), W_j = V_j-perp_B.
  std::vector<std::vector<felem>> intersection;
  std::vector<felem> msg(k, 0);
  std::vector<felem> cw(n);
  const auto total = static_cast<std::uint64_t>(cw_count);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<felem>(c % f.order());
      c /= f.order();
    }
    for (std::size_t j = 0; j < n; ++j) {
      felem acc = 0;
      for (std::size_t i = 0; i < k; ++i)
        acc = f.add(acc, f.mul(g.at(j, i), msg[i]));
      cw[j] = acc;
    }
    bool in_w = true;
    for (std::size_t j = 0; j < n && in_w; ++j)
      for (felem beta : v.node_basis(j))
        if (f.trace(f.mul(cw[j], beta)) != 0) {
          in_w = false;
          break;
        }
    if (in_w) intersection.push_back(cw);
  }

  Mat imat(intersection.size(), n);
  for (std::size_t i = 0; i < intersection.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) imat.at(i, j) = intersection[i][j];
  auto right_f_basis = kernel_basis(f, imat);  // F-basis of the orthogonal

  Mat right_basis(right_f_basis.size() * t, nt);
  row = 0;
  std::vector<felem> scaled(n);
  for (const auto& r : right_f_basis)
    for (std::size_t m = 0; m < t; ++m, ++row) {
      for (std::size_t j = 0; j < n; ++j) scaled[j] = f.mul(f.basis()[m], r[j]);
      auto flat = flatten_to_base(f, scaled);
      for (std::size_t cidx = 0; cidx < nt; ++cidx) right_basis.at(row, cidx) = flat[cidx];
    }

  Mat lmat(left_basis.size(), nt);
  for (std::size_t i = 0; i < left_basis.size(); ++i)
    for (std::size_t j = 0; j < nt; ++j) lmat.at(i, j) = left_basis[i][j];

  const std::size_t rank_l = rank(f.base(), lmat);
  const std::size_t rank_r = rank(f.base(), right_basis);

  auto stack = [&](const Mat& x, const Mat& y) {
    Mat s(x.rows + y.rows, nt);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t j = 0; j < nt; ++j) s.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
      for (std::size_t j = 0; j < nt; ++j) s.at(x.rows + i, j) = y.at(i, j);
    return s;
  };
  const std::size_t rank_union = rank(f.base(), stack(lmat, right_basis));
  return {rank_union == rank_r, rank_union == rank_l};
}

}  // namespace lbeval

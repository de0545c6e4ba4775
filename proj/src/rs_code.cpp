#include "lbeval/rs_code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "lbeval/errors.hpp"

namespace lbeval {

RSCode::RSCode(std::shared_ptr<const FieldExtension> field, int k,
               std::vector<felem> eval_points)
    : field_(std::move(field)), k_(k), n_(static_cast<int>(eval_points.size())),
      points_(std::move(eval_points)) {
  if (k_ < 1 || k_ > n_)
    fail(Errc::LengthMismatch, "need 1 <= k <= n, got k=" + std::to_string(k_) +
                                   " n=" + std::to_string(n_));
  if (static_cast<felem>(n_) > field_->order())
    fail(Errc::LengthMismatch, "more evaluation points than field elements");
  std::set<felem> distinct;
  for (felem a : points_) {
    if (!field_->is_element(a))
      fail(Errc::CoefficientNotInBase, "evaluation point out of range");
    if (!distinct.insert(a).second)
      fail(Errc::DuplicatePoint, "repeated evaluation point");
  }

  full_length_ = static_cast<felem>(n_) == field_->order();
  const auto& f = *field_;
  if (full_length_) {
    // X^Q - X
    vanishing_.c.assign(field_->order() + 1, 0);
    vanishing_.c[1] = f.neg(1);
    vanishing_.c.back() = 1;
  } else {
    vanishing_ = Poly::constant(1);
    Poly lin;
    for (felem a : points_) {
      lin.c = {f.neg(a), 1};
      vanishing_ = poly_mul(f, vanishing_, lin);
    }
  }
}

RSCode RSCode::full_length(std::shared_ptr<const FieldExtension> field, int k) {
  std::vector<felem> pts(field->order());
  std::iota(pts.begin(), pts.end(), 0u);
  return RSCode(std::move(field), k, std::move(pts));
}

Mat RSCode::generator_matrix() const {
  const auto& f = *field_;
  Mat g(static_cast<std::size_t>(n_), static_cast<std::size_t>(k_));
  for (int j = 0; j < n_; ++j) {
    felem pw = 1;
    for (int l = 0; l < k_; ++l) {
      g.at(static_cast<std::size_t>(j), static_cast<std::size_t>(l)) = pw;
      pw = f.mul(pw, points_[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

std::vector<felem> RSCode::encode(std::span<const felem> message) const {
  if (message.size() != static_cast<std::size_t>(k_))
    fail(Errc::LengthMismatch, "message length must equal k");
  const auto& f = *field_;
  std::vector<felem> cw(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    felem acc = 0;
    for (std::size_t i = message.size(); i-- > 0;)
      acc = f.add(f.mul(acc, points_[static_cast<std::size_t>(j)]), message[i]);
    cw[static_cast<std::size_t>(j)] = acc;
  }
  return cw;
}

std::vector<felem> RSCode::systematic_encode(
    std::span<const felem> values, std::span<const int> info_positions) const {
  if (values.size() != static_cast<std::size_t>(k_) ||
      info_positions.size() != static_cast<std::size_t>(k_))
    fail(Errc::LengthMismatch, "need exactly k values and k positions");
  std::set<int> seen;
  std::vector<std::pair<felem, felem>> pts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int pos = info_positions[i];
    if (pos < 0 || pos >= n_)
      fail(Errc::DuplicatePosition, "info position out of range");
    if (!seen.insert(pos).second)
      fail(Errc::DuplicatePosition, "repeated info position");
    pts.emplace_back(points_[static_cast<std::size_t>(pos)], values[i]);
  }
  Poly f = interpolate(*field_, pts);
  std::vector<felem> msg(static_cast<std::size_t>(k_), 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) msg[i] = f.c[i];
  return encode(msg);
}

RSCode::NaiveRecovery RSCode::naive_recover(
    std::span<const std::pair<int, felem>> symbols) const {
  if (symbols.size() < static_cast<std::size_t>(k_))
    fail(Errc::LengthMismatch, "need at least k symbols");
  std::set<int> seen;
  for (const auto& [idx, val] : symbols) {
    if (idx < 0 || idx >= n_) fail(Errc::DuplicatePosition, "index out of range");
    if (!seen.insert(idx).second) fail(Errc::DuplicatePosition, "repeated index");
  }
  std::vector<std::pair<felem, felem>> pts;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k_); ++i)
    pts.emplace_back(points_[static_cast<std::size_t>(symbols[i].first)],
                     symbols[i].second);
  Poly f = interpolate(*field_, pts);
  for (std::size_t i = static_cast<std::size_t>(k_); i < symbols.size(); ++i) {
    const auto& [idx, val] = symbols[i];
    if (poly_eval(*field_, f, points_[static_cast<std::size_t>(idx)]) != val)
      fail(Errc::InconsistentSymbols,
           "symbols are not restrictions of one codeword");
  }
  NaiveRecovery out;
  out.message.assign(static_cast<std::size_t>(k_), 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) out.message[i] = f.c[i];
  out.bandwidth_bits =
      static_cast<std::uint64_t>(k_) * field_->bits_per_symbol();
  return out;
}

std::vector<std::vector<felem>> RSCode::dual_code_basis() const {
  return kernel_basis(*field_, transpose(generator_matrix()));
}

}  // namespace lbeval

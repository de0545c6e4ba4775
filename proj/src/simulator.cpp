#include "lbeval/simulator.hpp"

#include <algorithm>
#include <sstream>

#include "lbeval/errors.hpp"

namespace lbeval {

namespace {

void check_block_shapes(const RSCode& code,
                        std::span<const std::vector<felem>> blocks) {
  for (const auto& b : blocks)
    if (b.size() != static_cast<std::size_t>(code.dim()))
      fail(Errc::LengthMismatch, "every block must have k symbols");
}

std::string cache_key(int dim, std::span<const felem> p,
                      const std::vector<int>& erasures,
                      const SchemeParams& params) {
  std::ostringstream os;
  os << dim << '|' << (params.kind == SchemeKind::RateHalf ? "rh" : "main");
  if (params.kind == SchemeKind::Main)
    os << '|' << format_rational(params.epsilon) << '|'
       << format_rational(params.gamma) << '|' << format_rational(params.delta);
  os << "|p";
  for (felem x : p) os << ',' << x;
  os << "|e";
  for (int e : erasures) os << ',' << e;
  return os.str();
}

}  // namespace

Cluster Cluster::deploy(RSCode code, std::span<const std::vector<felem>> blocks) {
  check_block_shapes(code, blocks);
  Cluster c(std::move(code));
  c.block_count_ = blocks.size();
  c.store_.assign(static_cast<std::size_t>(c.code_.length()), {});
  for (auto& node : c.store_) node.reserve(blocks.size());
  for (const auto& b : blocks) {
    auto cw = c.code_.encode(b);
    for (std::size_t j = 0; j < cw.size(); ++j) c.store_[j].push_back(cw[j]);
  }
  return c;
}

Cluster Cluster::deploy_systematic(RSCode code,
                                   std::span<const std::vector<felem>> blocks,
                                   std::span<const int> info_positions) {
  check_block_shapes(code, blocks);
  Cluster c(std::move(code));
  c.block_count_ = blocks.size();
  c.systematic_positions_.emplace(info_positions.begin(), info_positions.end());
  c.store_.assign(static_cast<std::size_t>(c.code_.length()), {});
  for (const auto& b : blocks) {
    auto cw = c.code_.systematic_encode(b, info_positions);
    for (std::size_t j = 0; j < cw.size(); ++j) c.store_[j].push_back(cw[j]);
  }
  return c;
}

Cluster fail_nodes(Cluster cluster, std::span<const int> failures) {
  for (int j : failures) {
    if (j < 0 || j >= cluster.code_.length())
      fail(Errc::LengthMismatch, "failed node index out of range");
    cluster.failed_.insert(j);
  }
  return cluster;
}

felem Cluster::read_symbol(int node, int block) const {
  if (node < 0 || node >= code_.length())
    fail(Errc::LengthMismatch, "node index out of range");
  if (block < 0 || static_cast<std::size_t>(block) >= block_count_)
    fail(Errc::LengthMismatch, "block index out of range");
  if (failed_.contains(node))
    fail(Errc::FailedNodeRead,
         "read of failed node " + std::to_string(node));
  return store_[static_cast<std::size_t>(node)][static_cast<std::size_t>(block)];
}

const EvaluationScheme& Cluster::scheme_for(const RSCode& code,
                                            std::span<const felem> p,
                                            const std::vector<int>& erasures,
                                            const SchemeParams& params) {
  const std::string key = cache_key(code.dim(), p, erasures, params);
  auto it = scheme_cache_.find(key);
  if (it != scheme_cache_.end()) return it->second;
  EvaluationScheme scheme =
      params.kind == SchemeKind::RateHalf
          ? build_rate_half_scheme(code, p, erasures)
          : build_scheme(code, p, params.epsilon, params.gamma, params.delta,
                         erasures);
  return scheme_cache_.emplace(key, std::move(scheme)).first->second;
}

EvalResult Cluster::run_scheme(const RSCode& code, int block,
                               std::span<const felem> p,
                               const SchemeParams& params, bool square_symbols) {
  const auto& f = code_.field();

  // full-length ambient code: absent evaluation points fold into the erasure
  // set, and a node's index there is its evaluation-point code
  RSCode full = code.is_full_length()
                    ? code
                    : RSCode::full_length(code.field_ptr(), code.dim());
  std::vector<int> node_of(f.order(), -1);
  for (int j = 0; j < code_.length(); ++j)
    node_of[code_.point(j)] = j;

  std::set<int> era;
  for (felem a = 0; a < f.order(); ++a)
    if (node_of[a] < 0) era.insert(static_cast<int>(a));
  for (int j : failed_) era.insert(static_cast<int>(code_.point(j)));
  std::vector<int> era_sorted(era.begin(), era.end());

  const EvaluationScheme& scheme = scheme_for(full, p, era_sorted, params);

  EvalResult out;
  out.bits_naive =
      static_cast<std::uint64_t>(code_.dim()) * f.bits_per_symbol();
  std::set<int> contacted;
  std::vector<std::vector<std::optional<felem>>> responses;
  for (const auto& ws : scheme.rounds) {
    auto& resp = responses.emplace_back(full.length());
    if (!ws.transmits()) continue;
    for (int fj = 0; fj < full.length(); ++fj) {
      if (era.contains(fj)) continue;
      const int node = node_of[static_cast<std::size_t>(fj)];
      felem symbol = read_symbol(node, block);
      if (square_symbols) symbol = f.mul(symbol, symbol);
      resp[static_cast<std::size_t>(fj)] = window_response(f, ws, fj, symbol);
      out.bits_downloaded += f.bits_per_base_symbol();
      contacted.insert(node);
    }
  }
  out.values = {evaluate_full(full, scheme, responses)};
  out.nodes_contacted.assign(contacted.begin(), contacted.end());
  ledger_bits_ += out.bits_downloaded;
  return out;
}

EvalResult Cluster::evaluate(int block, std::span<const felem> p,
                             const SchemeParams& params) {
  if (p.size() != static_cast<std::size_t>(code_.dim()))
    fail(Errc::LengthMismatch, "target length must equal k");
  return run_scheme(code_, block, p, params, false);
}

EvalResult Cluster::evaluate_naive(int block, std::span<const felem> p) {
  if (p.size() != static_cast<std::size_t>(code_.dim()))
    fail(Errc::LengthMismatch, "target length must equal k");
  const auto& f = code_.field();
  const int k = code_.dim();

  std::vector<std::pair<int, felem>> symbols;
  for (int j = 0; j < code_.length() && static_cast<int>(symbols.size()) < k; ++j) {
    if (failed_.contains(j)) continue;
    symbols.emplace_back(j, read_symbol(j, block));
  }
  if (static_cast<int>(symbols.size()) < k)
    fail(Errc::InsufficientSurvivors,
         "need k = " + std::to_string(k) + " surviving nodes");

  auto rec = code_.naive_recover(symbols);
  felem value = 0;
  for (std::size_t i = 0; i < rec.message.size(); ++i)
    value = f.add(value, f.mul(rec.message[i], p[i]));

  EvalResult out;
  out.values = {value};
  out.bits_downloaded = rec.bandwidth_bits;
  out.bits_naive = rec.bandwidth_bits;
  for (const auto& [j, s] : symbols) out.nodes_contacted.push_back(j);
  ledger_bits_ += out.bits_downloaded;
  return out;
}

EvalResult Cluster::evaluate_sum_of_squares(int block) {
  if (!systematic_positions_)
    fail(Errc::NotSystematic, "blocks were not stored systematically");
  if (!failed_.empty())
    fail(Errc::TooManyErasures,
         "the sum-of-squares path runs the failure-free construction");
  const auto& f = code_.field();
  const int k = code_.dim();
  const int k2 = 2 * k - 1;
  if (k2 > code_.length())
    fail(Errc::DimensionTooLarge, "2k - 1 exceeds the code length");

  // squaring the stored polynomial doubles its degree; the sum over the
  // systematic positions is a linear functional of the squared message
  std::vector<felem> p2(static_cast<std::size_t>(k2), 0);
  for (int pos : *systematic_positions_) {
    const felem alpha = code_.point(pos);
    felem pw = 1;
    for (int l = 0; l < k2; ++l) {
      p2[static_cast<std::size_t>(l)] = f.add(p2[static_cast<std::size_t>(l)], pw);
      pw = f.mul(pw, alpha);
    }
  }

  RSCode code2(code_.field_ptr(), k2, std::vector<felem>(
                                          code_.eval_points().begin(),
                                          code_.eval_points().end()));
  EvalResult out = run_scheme(code2, block, p2, SchemeParams::rate_half(), true);
  out.bits_naive = static_cast<std::uint64_t>(k) * f.bits_per_symbol();
  return out;
}

EvalResult Cluster::evaluate_batched_base_field(int block,
                                                std::span<const felem> b,
                                                const SchemeParams& params) {
  const auto& f = code_.field();
  for (felem x : b)
    if (!f.in_base(x))
      fail(Errc::CoefficientNotInBase, "batch coefficients must lie in the base field");
  EvalResult out = evaluate(block, b, params);
  const felem y = out.values.front();
  out.values = f.basis_coords(y);
  return out;
}

}  // namespace lbeval

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lbeval/rs_scheme.hpp"

namespace lbeval {

/// Which construction the cluster uses when asked to evaluate.
struct SchemeParams {
  SchemeKind kind = SchemeKind::RateHalf;
  Rat epsilon, gamma, delta;  // Main only

  static SchemeParams rate_half() { return {}; }
  static SchemeParams main(Rat eps, Rat gam, Rat del) {
    return {SchemeKind::Main, std::move(eps), std::move(gam), std::move(del)};
  }
};

struct EvalResult {
  std::vector<felem> values;          // one value, or t values when batched
  std::uint64_t bits_downloaded = 0;
  std::uint64_t bits_naive = 0;       // k * ceil(log2 Q), the comparison figure
  std::vector<int> nodes_contacted;   // sorted, disjoint from the failed set
};

/// n in-process storage nodes, each holding coordinate j of every encoded
/// block. Failed nodes are never read; any such read throws.
class Cluster {
 public:
  static Cluster deploy(RSCode code, std::span<const std::vector<felem>> blocks);
  static Cluster deploy_systematic(RSCode code,
                                   std::span<const std::vector<felem>> blocks,
                                   std::span<const int> info_positions);

  const RSCode& code() const { return code_; }
  int nodes() const { return code_.length(); }
  int block_count() const { return static_cast<int>(block_count_); }
  const std::set<int>& failed() const { return failed_; }
  std::uint64_t total_downloaded_bits() const { return ledger_bits_; }
  const std::optional<std::vector<int>>& systematic_positions() const {
    return systematic_positions_;
  }

  /// Throws FailedNodeRead on any access to a failed node.
  felem read_symbol(int node, int block) const;

  EvalResult evaluate(int block, std::span<const felem> p,
                      const SchemeParams& params);
  EvalResult evaluate_naive(int block, std::span<const felem> p);
  EvalResult evaluate_sum_of_squares(int block);
  EvalResult evaluate_batched_base_field(int block, std::span<const felem> b,
                                         const SchemeParams& params);

  friend Cluster fail_nodes(Cluster cluster, std::span<const int> failures);

 private:
  Cluster(RSCode code) : code_(std::move(code)) {}

  const EvaluationScheme& scheme_for(const RSCode& code,
                                     std::span<const felem> p,
                                     const std::vector<int>& erasures,
                                     const SchemeParams& params);
  EvalResult run_scheme(const RSCode& code, int block,
                        std::span<const felem> p, const SchemeParams& params,
                        bool square_symbols);

  RSCode code_;
  std::vector<std::vector<felem>> store_;  // [node][block]
  std::size_t block_count_ = 0;
  std::set<int> failed_;
  std::uint64_t ledger_bits_ = 0;
  std::optional<std::vector<int>> systematic_positions_;
  std::map<std::string, EvaluationScheme> scheme_cache_;
};

/// Marks nodes failed; idempotent. Tolerance is checked at evaluation time.
Cluster fail_nodes(Cluster cluster, std::span<const int> failures);

}  // namespace lbeval

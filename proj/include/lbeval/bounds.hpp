#pragma once

#include <span>
#include <string>
#include <vector>

#include "lbeval/rs_code.hpp"

namespace lbeval {

/// One named lower bound; values that go nonpositive at desk scale are
/// clamped to zero and flagged vacuous.
struct BoundEntry {
  std::string name;
  double bits = 0;
  bool vacuous = false;
};

struct BoundReport {
  int n = 0, k = 0;
  felem q = 0;
  int t = 0;
  std::vector<BoundEntry> entries;
  double binding = 0;       // max of the entries
  std::string binding_name;
};

/// max{ k + t - 1, t n/(n-k+1), n log_q(n/(n-k+1)) } for non-maximal MDS
/// codes (every RS code qualifies).
double obs_lower_bound(int n, int k, felem q, int t);

/// min over dual codewords of the Hamming distance to a witness of p;
/// witness-independent. Enumeration needs Q^(n-k) <= 2^16.
int dstar_bruteforce(const RSCode& code, std::span<const felem> p);

/// n log_q( 1 / (1 - (1 - 1/Q) d*/n) )
double prop_lower_bound(int n, felem q, std::uint64_t bigq, int dstar);

/// n log_q( n/(n-k+3) ) for MDS codes with n > k+1; clamped at zero.
double mds_lower_bound(int n, int k, felem q);

/// Collects the applicable bounds for an RS code's parameters.
BoundReport bound_report(int n, int k, felem q, int t);

}  // namespace lbeval

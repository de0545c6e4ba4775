#include "lbeval/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "lbeval/errors.hpp"
#include "lbeval/scheme_core.hpp"

namespace lbeval {

double obs_lower_bound(int n, int k, felem q, int t) {
  if (n < k || k < 1) fail(Errc::DegenerateArgument, "need n >= k >= 1");
  const double cutset = k + t - 1;
  const double gw = static_cast<double>(t) * n / (n - k + 1);
  const double log_term =
      n * std::log(static_cast<double>(n) / (n - k + 1)) / std::log(q);
  return std::max({cutset, gw, log_term});
}

int dstar_bruteforce(const RSCode& code, std::span<const felem> p) {
  const auto& f = code.field();
  const int n = code.length();
  const int k = code.dim();
  double count = 1;
  for (int i = 0; i < n - k; ++i) count *= f.order();
  if (count > 65536)
    fail(Errc::TooLargeForExhaustive, "dual enumeration needs Q^(n-k) <= 2^16");

  auto w = find_witness(f, code.generator_matrix(), p);
  auto basis = code.dual_code_basis();

  int best = n + 1;
  std::vector<felem> y(static_cast<std::size_t>(n));
  const auto total = static_cast<std::uint64_t>(count);
  for (std::uint64_t sel = 0; sel < total; ++sel) {
    std::fill(y.begin(), y.end(), 0u);
    std::uint64_t s = sel;
    for (const auto& b : basis) {
      const felem lambda = static_cast<felem>(s % f.order());
      s /= f.order();
      if (lambda != 0)
        for (std::size_t j = 0; j < y.size(); ++j)
          y[j] = f.add(y[j], f.mul(lambda, b[j]));
    }
    int dist = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != w[j]) ++dist;
    best = std::min(best, dist);
  }
  return best;
}

double prop_lower_bound(int n, felem q, std::uint64_t bigq, int dstar) {
  const double arg =
      1.0 - (1.0 - 1.0 / static_cast<double>(bigq)) * dstar / n;
  if (arg <= 0)
    fail(Errc::DegenerateArgument, "log argument nonpositive");
  return n * std::log(1.0 / arg) / std::log(q);
}

double mds_lower_bound(int n, int k, felem q) {
  if (n <= k + 1) fail(Errc::NotApplicable, "requires n > k + 1");
  const double v = n * std::log(static_cast<double>(n) / (n - k + 3)) / std::log(q);
  return std::max(0.0, v);
}

BoundReport bound_report(int n, int k, felem q, int t) {
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.q = q;
  rep.t = t;

  rep.entries.push_back({"nonmax_mds_collected", obs_lower_bound(n, k, q, t), false});
  if (n > k + 1) {
    const double v = mds_lower_bound(n, k, q);
    rep.entries.push_back({"mds_covering_radius", v, v == 0.0});
  }

  rep.binding = 0;
  for (const auto& e : rep.entries)
    if (e.bits >= rep.binding) {
      rep.binding = e.bits;
      rep.binding_name = e.name;
    }
  return rep;
}

}  // namespace lbeval

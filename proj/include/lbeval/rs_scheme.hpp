#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "lbeval/poly.hpp"
#include "lbeval/rational.hpp"
#include "lbeval/rs_code.hpp"
#include "lbeval/scheme_core.hpp"

namespace lbeval {

/// Representative of x mod m in {1..m}, with 0 fixed to 0.
std::uint64_t mod_star(std::uint64_t x, std::uint64_t m);

/// Degree set of X^(j q^i) reduced modulo the vanishing polynomial of the
/// evaluation set; closed form for the full-length code.
std::set<long> sigma(const RSCode& code, int i, std::uint64_t j);

/// As sigma, but forcing the polynomial-reduction route (cross-check oracle).
std::set<long> sigma_by_reduction(const RSCode& code, int i, std::uint64_t j);

struct GoodTriple {
  std::int64_t j_min = 0, j_max = 0, d = 0;
  friend bool operator==(const GoodTriple&, const GoodTriple&) = default;
};

/// (l_min, l_max) = (max{0, d - j_max}, min{k-1, d - j_min})
std::pair<std::int64_t, std::int64_t> window(const GoodTriple& t, int k);

bool is_good(const RSCode& code, const GoodTriple& t);

/// v with support in [j_min, j_max], v_j = p_(d-j) on forced slots, remaining
/// slots solving the vanishing conditions on the erased nodes (leftover
/// freedom zeroed).
Poly consistent_polynomial(const RSCode& code, std::span<const felem> p,
                           const GoodTriple& t, std::span<const int> erasures);

/// One window of the construction: target p, its polynomial v, and the
/// induced per-node spans V_j = span_B(v(alpha_j)).
struct WindowScheme {
  GoodTriple triple;
  std::vector<felem> target;       // length k
  Poly v;
  std::vector<felem> v_at_node;    // v(alpha_j), length n
  std::vector<int> erasures;       // sorted node indices

  /// Rounds with v identically zero have a known-zero answer and ship nothing.
  bool transmits() const { return !v.is_zero(); }

  std::uint64_t bandwidth_bits(const FieldExtension& f) const {
    if (!transmits()) return 0;
    return (v_at_node.size() - erasures.size()) *
           static_cast<std::uint64_t>(f.bits_per_base_symbol());
  }

  SubspaceAssignment subspaces(const FieldExtension& f) const;
};

/// Validates consistency, support, and vanishing before assembly.
WindowScheme make_window_scheme(const RSCode& code, std::span<const felem> p,
                                const GoodTriple& t, Poly v,
                                std::span<const int> erasures);

WindowScheme single_window_scheme(const RSCode& code, std::span<const felem> p,
                                  const GoodTriple& t,
                                  std::span<const int> erasures);

/// Node-local compressor: the one base symbol node j sends for this window.
felem window_response(const FieldExtension& f, const WindowScheme& ws, int node,
                      felem symbol);

/// Triple for the single-window scheme covering all of F^k; requires
/// k <= Q (1/q) floor(q/2) (1 - 1/q).
GoodTriple rate_half_params(felem q, int t, int k);

struct MainParams {
  int s = 0;
  std::vector<GoodTriple> triples;
  Rat epsilon, gamma, delta;
  felem q = 0;
  int t = 0, k = 0;
  std::uint64_t Q = 0;
};

/// Multi-round parameters; every structural condition of the construction is
/// re-verified and a violation reported by name.
MainParams main_params(felem q, int t, const Rat& epsilon, const Rat& gamma,
                       const Rat& delta);

struct TargetDecomposition {
  std::vector<std::vector<felem>> round_targets;  // p^(r), each length k
  std::vector<Poly> round_polys;                  // v^(r)
};

/// Splits p into per-round targets with the inductive window construction;
/// each v^(r) is consistent with p^(r) and vanishes on the erased nodes.
TargetDecomposition decompose_target(const RSCode& code, std::span<const felem> p,
                                     const MainParams& params,
                                     std::span<const int> erasures);

enum class SchemeKind { RateHalf, Main };

struct EvaluationScheme {
  explicit EvaluationScheme(RSCode c) : code(std::move(c)) {}

  RSCode code;
  SchemeKind kind = SchemeKind::Main;
  Rat epsilon, gamma, delta;
  int s = 0;
  std::vector<int> erasures;          // sorted
  std::vector<felem> target;          // overall p
  std::vector<WindowScheme> rounds;   // s entries
  std::uint64_t bandwidth_bits = 0;
};

EvaluationScheme build_scheme(const RSCode& code, std::span<const felem> p,
                              const Rat& epsilon, const Rat& gamma,
                              const Rat& delta, std::span<const int> erasures);

EvaluationScheme build_rate_half_scheme(const RSCode& code,
                                        std::span<const felem> p,
                                        std::span<const int> erasures);

/// Interpolates the trace polynomial through all n points (absent erased
/// nodes read as zero) and extracts the X^d coefficient, which equals p^T x.
felem rs_reconstruct(const RSCode& code, const WindowScheme& ws,
                     const std::vector<std::optional<felem>>& responses);

felem evaluate_full(const RSCode& code, const EvaluationScheme& scheme,
                    const std::vector<std::vector<std::optional<felem>>>& responses);

}  // namespace lbeval

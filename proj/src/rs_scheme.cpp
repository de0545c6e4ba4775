#include "lbeval/rs_scheme.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lbeval/errors.hpp"

namespace lbeval {

namespace {

std::uint64_t upow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<int> checked_erasures(const RSCode& code, std::span<const int> erasures) {
  std::vector<int> out(erasures.begin(), erasures.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= code.length())
      fail(Errc::LengthMismatch, "erased node index out of range");
    if (i > 0 && out[i] == out[i - 1])
      fail(Errc::DuplicatePosition, "repeated erased node index");
  }
  return out;
}

void check_support(const RSCode& code, std::span<const felem> p,
                   const GoodTriple& t) {
  if (p.size() != static_cast<std::size_t>(code.dim()))
    fail(Errc::LengthMismatch, "target length must equal k");
  auto [lmin, lmax] = window(t, code.dim());
  for (std::size_t l = 0; l < p.size(); ++l)
    if (p[l] != 0 &&
        (static_cast<std::int64_t>(l) < lmin || static_cast<std::int64_t>(l) > lmax))
      fail(Errc::SupportOutOfWindow,
           "target supported at " + std::to_string(l) + " outside [" +
               std::to_string(lmin) + ", " + std::to_string(lmax) + "]");
}

felem eval_coeffs(const FieldExtension& f, const std::vector<felem>& coeffs,
                  felem x) {
  felem acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

/// Solves the free coefficients so the polynomial vanishes at the erased
/// points; fixed slots must already be in place and free slots zero.
void vanish_on(const RSCode& code, std::vector<felem>& vcoef,
               const std::vector<std::int64_t>& free_slots,
               std::span<const int> erasures) {
  if (erasures.empty()) return;
  if (free_slots.size() < erasures.size())
    fail(Errc::InsufficientFreedom,
         std::to_string(erasures.size()) + " erasures but only " +
             std::to_string(free_slots.size()) + " free coefficients");
  const auto& f = code.field();
  Mat a(erasures.size(), free_slots.size());
  std::vector<felem> rhs(erasures.size());
  for (std::size_t e = 0; e < erasures.size(); ++e) {
    const felem alpha = code.point(erasures[e]);
    rhs[e] = f.neg(eval_coeffs(f, vcoef, alpha));
    for (std::size_t c = 0; c < free_slots.size(); ++c)
      a.at(e, c) = f.pow(alpha, static_cast<std::uint64_t>(free_slots[c]));
  }
  auto sol = solve(f, a, rhs);
  if (!sol)
    fail(Errc::InsufficientFreedom, "vanishing conditions are unsolvable");
  for (std::size_t c = 0; c < free_slots.size(); ++c)
    vcoef[static_cast<std::size_t>(free_slots[c])] = (*sol)[c];
}

/// Lagrange through all code points with the precomputed master product.
Poly interpolate_all_points(const RSCode& code, const std::vector<felem>& values) {
  const auto& f = code.field();
  const Poly& master = code.vanishing_poly();
  Poly r;
  Poly lin;
  for (int j = 0; j < code.length(); ++j) {
    const felem y = values[static_cast<std::size_t>(j)];
    if (y == 0) continue;
    const felem x = code.point(j);
    lin.c = {f.neg(x), 1};
    auto [quot, rem] = poly_divmod(f, master, lin);
    const felem den = poly_eval(f, quot, x);
    r = poly_add(f, r, poly_scale(f, quot, f.div(y, den)));
  }
  return r;
}

}  // namespace

std::uint64_t mod_star(std::uint64_t x, std::uint64_t m) {
  return x == 0 ? 0 : (x - 1) % m + 1;
}

std::set<long> sigma(const RSCode& code, int i, std::uint64_t j) {
  const auto& f = code.field();
  if (code.is_full_length()) {
    const std::uint64_t e = j * upow(f.base_order(), i);
    return {static_cast<long>(mod_star(e, f.order() - 1))};
  }
  return sigma_by_reduction(code, i, j);
}

std::set<long> sigma_by_reduction(const RSCode& code, int i, std::uint64_t j) {
  const auto& f = code.field();
  const std::uint64_t e = j * upow(f.base_order(), i);
  return deg_set(poly_powmod_x(f, e, code.vanishing_poly()));
}

std::pair<std::int64_t, std::int64_t> window(const GoodTriple& t, int k) {
  return {std::max<std::int64_t>(0, t.d - t.j_max),
          std::min<std::int64_t>(k - 1, t.d - t.j_min)};
}

bool is_good(const RSCode& code, const GoodTriple& t) {
  if (t.j_min < 1 || t.j_max < t.j_min || t.d <= t.j_min)
    fail(Errc::BadTripleShape,
         "need positive integers with j_min <= j_max and j_min < d");
  const int n = code.length();
  const int k = code.dim();
  if (t.d >= n || t.j_max + k - 1 >= n) return false;
  for (int i = 1; i < code.field().ext_degree(); ++i)
    for (std::int64_t j = t.j_min; j <= t.j_max + k - 1; ++j)
      if (sigma(code, i, static_cast<std::uint64_t>(j)).contains(t.d)) return false;
  for (std::int64_t j = t.j_min; j <= t.j_max + k - 1; ++j)
    if (sigma(code, 0, static_cast<std::uint64_t>(j)).contains(t.d)) return true;
  return false;
}

Poly consistent_polynomial(const RSCode& code, std::span<const felem> p,
                           const GoodTriple& t, std::span<const int> erasures) {
  check_support(code, p, t);
  auto sorted = checked_erasures(code, erasures);
  const int k = code.dim();

  std::vector<felem> vcoef(static_cast<std::size_t>(t.j_max) + 1, 0);
  std::vector<std::int64_t> free_slots;
  for (std::int64_t j = t.j_min; j <= t.j_max; ++j) {
    const std::int64_t dj = t.d - j;
    if (dj >= 0 && dj < k)
      vcoef[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(dj)];
    else
      free_slots.push_back(j);
  }
  vanish_on(code, vcoef, free_slots, sorted);
  return Poly(std::move(vcoef));
}

SubspaceAssignment WindowScheme::subspaces(const FieldExtension& f) const {
  std::vector<std::vector<felem>> basis(v_at_node.size());
  for (std::size_t j = 0; j < v_at_node.size(); ++j)
    if (v_at_node[j] != 0) basis[j] = {v_at_node[j]};
  return SubspaceAssignment(f, std::move(basis));
}

WindowScheme make_window_scheme(const RSCode& code, std::span<const felem> p,
                                const GoodTriple& t, Poly v,
                                std::span<const int> erasures) {
  if (!is_good(code, t)) fail(Errc::NotGood, "triple is not good for this code");
  check_support(code, p, t);
  auto sorted = checked_erasures(code, erasures);
  const auto& f = code.field();
  const int k = code.dim();

  if (v.degree() > t.j_max)
    fail(Errc::SupportOutOfWindow, "v has support above j_max");
  for (std::int64_t j = 0; j < t.j_min; ++j)
    if (v.coeff(static_cast<std::size_t>(j)) != 0)
      fail(Errc::SupportOutOfWindow, "v has support below j_min");
  for (std::int64_t j = t.j_min; j <= t.j_max; ++j) {
    const std::int64_t dj = t.d - j;
    if (dj >= 0 && dj < k &&
        v.coeff(static_cast<std::size_t>(j)) != p[static_cast<std::size_t>(dj)])
      fail(Errc::ParamConstraintViolated,
           "v is not consistent with the target at slot " + std::to_string(j));
  }

  WindowScheme ws;
  ws.triple = t;
  ws.target.assign(p.begin(), p.end());
  ws.v = std::move(v);
  ws.erasures = std::move(sorted);
  ws.v_at_node.resize(static_cast<std::size_t>(code.length()));
  for (int j = 0; j < code.length(); ++j)
    ws.v_at_node[static_cast<std::size_t>(j)] = poly_eval(f, ws.v, code.point(j));
  for (int e : ws.erasures)
    if (ws.v_at_node[static_cast<std::size_t>(e)] != 0)
      fail(Errc::ParamConstraintViolated,
           "v does not vanish on erased node " + std::to_string(e));
  return ws;
}

WindowScheme single_window_scheme(const RSCode& code, std::span<const felem> p,
                                  const GoodTriple& t,
                                  std::span<const int> erasures) {
  if (!is_good(code, t)) fail(Errc::NotGood, "triple is not good for this code");
  return make_window_scheme(code, p, t,
                            consistent_polynomial(code, p, t, erasures), erasures);
}

felem window_response(const FieldExtension& f, const WindowScheme& ws, int node,
                      felem symbol) {
  return f.trace(f.mul(ws.v_at_node[static_cast<std::size_t>(node)], symbol));
}

GoodTriple rate_half_params(felem q, int t, int k) {
  if (t < 2) fail(Errc::BadTripleShape, "extension degree t must be >= 2");
  const std::uint64_t Q = upow(q, t);
  const std::uint64_t half = q / 2;
  if (static_cast<std::uint64_t>(k) * q * q > Q * half * (q - 1))
    fail(Errc::DimensionTooLarge,
         "k exceeds Q (1/q) floor(q/2) (1 - 1/q) = " +
             std::to_string(Q * half * (q - 1) / (static_cast<std::uint64_t>(q) * q)));
  GoodTriple triple;
  triple.j_min = static_cast<std::int64_t>(half * upow(q, t - 2) + 1);
  triple.j_max = static_cast<std::int64_t>(Q - static_cast<std::uint64_t>(k));
  triple.d = static_cast<std::int64_t>(half * upow(q, t - 1));
  return triple;
}

MainParams main_params(felem q, int t, const Rat& epsilon, const Rat& gamma,
                       const Rat& delta) {
  auto constraint = [](bool ok, const std::string& name) {
    if (!ok) fail(Errc::ParamConstraintViolated, "violated: " + name);
  };
  felem p_unused;
  int m_unused;
  if (!prime_power(q, p_unused, m_unused))
    fail(Errc::NotPrimePower, "q must be a prime power");
  if (t < 2) fail(Errc::BadTripleShape, "extension degree t must be >= 2");
  const std::int64_t Q = static_cast<std::int64_t>(upow(q, t));
  const Rat one_over_q(1, q);

  constraint(gamma >= Rat(0), "gamma >= 0");
  constraint(delta >= gamma + one_over_q, "delta >= gamma + 1/q");
  constraint(epsilon > delta, "epsilon > delta");
  constraint(is_integer((epsilon - delta) * q), "(epsilon - delta) * q is an integer");
  const Rat k_exact = Rat(Q) * (Rat(1) - epsilon);
  constraint(is_integer(k_exact) && k_exact > Rat(0),
             "Q * (1 - epsilon) is a positive integer");
  const auto k = static_cast<int>(k_exact.numerator());
  constraint(delta >= (Rat(1) - epsilon) / Rat(q - 1) + gamma / (Rat(1) - one_over_q),
             "delta >= (1 - epsilon)/(q - 1) + gamma/(1 - 1/q)");

  MainParams out;
  out.epsilon = epsilon;
  out.gamma = gamma;
  out.delta = delta;
  out.q = q;
  out.t = t;
  out.k = k;
  out.Q = static_cast<std::uint64_t>(Q);
  out.s = static_cast<int>(strict_floor_rat(Rat(1) / (epsilon - delta)));
  constraint(out.s >= 1, "1/(epsilon - delta) > 1");

  const std::int64_t y_step = ((epsilon - delta) * q).numerator();
  for (int r = 1; r <= out.s; ++r) {
    const std::int64_t y = y_step * r;
    GoodTriple triple;
    triple.d = y * static_cast<std::int64_t>(upow(q, t - 1));
    triple.j_min = y * static_cast<std::int64_t>(upow(q, t - 2)) + 1;
    triple.j_max = Q - k;
    out.triples.push_back(triple);
  }

  // goodness of every round, via the closed form on the full-length code
  for (int r = 0; r < out.s; ++r) {
    const auto& tr = out.triples[static_cast<std::size_t>(r)];
    constraint(tr.d < Q && tr.j_max + k - 1 < Q,
               "round " + std::to_string(r + 1) + ": d < n and j_max + k - 1 < n");
    bool avoid = true;
    for (int i = 1; i < t && avoid; ++i) {
      const std::uint64_t qi = upow(q, i);
      for (std::int64_t j = tr.j_min; j <= tr.j_max + k - 1; ++j)
        if (static_cast<std::int64_t>(mod_star(
                static_cast<std::uint64_t>(j) * qi,
                static_cast<std::uint64_t>(Q - 1))) == tr.d) {
          avoid = false;
          break;
        }
    }
    constraint(avoid, "round " + std::to_string(r + 1) +
                          ": d avoids sigma_i over the window for i >= 1");
    constraint(tr.d >= tr.j_min && tr.d <= tr.j_max + k - 1,
               "round " + std::to_string(r + 1) + ": d lies in sigma_0 over the window");
  }

  // structural conditions tying consecutive rounds together
  const auto& first = out.triples.front();
  const auto& last = out.triples.back();
  constraint(first.d - first.j_max <= 0, "d^(1) - j_max^(1) <= 0");
  constraint(Rat(last.d - last.j_min) >= Rat(k - 1) + gamma * Q,
             "d^(s) - j_min^(s) >= k - 1 + Q*gamma");
  for (int r = 0; r + 1 < out.s; ++r) {
    const auto& cur = out.triples[static_cast<std::size_t>(r)];
    const auto& nxt = out.triples[static_cast<std::size_t>(r + 1)];
    constraint(Rat((cur.d - cur.j_min) - (nxt.d - nxt.j_max)) >= gamma * Q - Rat(1),
               "consecutive-round gap >= Q*gamma - 1 at round " + std::to_string(r + 1));
  }

  // derived window sanity: coverage chain over [0, k-1]
  for (int r = 0; r < out.s; ++r) {
    auto [lmin, lmax] = window(out.triples[static_cast<std::size_t>(r)], k);
    constraint(lmin <= lmax, "round " + std::to_string(r + 1) + ": nonempty window");
    if (r == 0) constraint(lmin == 0, "l_min^(1) == 0");
    if (r == out.s - 1)
      constraint(lmax == k - 1, "l_max^(s) == k - 1");
    if (r + 1 < out.s) {
      auto [lmin_next, lmax_next] = window(out.triples[static_cast<std::size_t>(r + 1)], k);
      (void)lmax_next;
      constraint(lmin_next <= lmax + 1,
                 "windows chain without gaps at round " + std::to_string(r + 1));
    }
  }
  return out;
}

TargetDecomposition decompose_target(const RSCode& code, std::span<const felem> p,
                                     const MainParams& params,
                                     std::span<const int> erasures) {
  const auto& f = code.field();
  if (!code.is_full_length() || code.dim() != params.k || f.order() != params.Q)
    fail(Errc::ParamConstraintViolated, "code does not match the parameters");
  if (p.size() != static_cast<std::size_t>(params.k))
    fail(Errc::LengthMismatch, "target length must equal k");
  auto sorted = checked_erasures(code, erasures);
  if (Rat(static_cast<std::int64_t>(sorted.size())) >=
      params.gamma * static_cast<std::int64_t>(code.length()))
    fail(Errc::TooManyErasures,
         std::to_string(sorted.size()) + " erasures but the scheme tolerates fewer than " +
             format_rational(params.gamma * code.length()));

  const int k = params.k;
  const int s = params.s;
  std::vector<felem> residual(p.begin(), p.end());

  TargetDecomposition out;
  for (int r = 0; r < s; ++r) {
    const auto& tr = params.triples[static_cast<std::size_t>(r)];
    auto [lmin, lmax] = window(tr, k);
    std::vector<felem> pr(static_cast<std::size_t>(k), 0);
    std::vector<felem> vcoef(static_cast<std::size_t>(tr.j_max) + 1, 0);
    std::vector<std::int64_t> free_slots;

    if (r + 1 < s) {
      const std::int64_t lmin_next =
          window(params.triples[static_cast<std::size_t>(r + 1)], k).first;
      for (std::int64_t l = lmin; l < lmin_next; ++l)
        pr[static_cast<std::size_t>(l)] = residual[static_cast<std::size_t>(l)];
      for (std::int64_t j = tr.j_min; j <= tr.j_max; ++j) {
        const std::int64_t dj = tr.d - j;
        if (dj >= lmin_next)
          free_slots.push_back(j);
        else if (dj >= 0 && dj < k)
          vcoef[static_cast<std::size_t>(j)] = pr[static_cast<std::size_t>(dj)];
      }
      vanish_on(code, vcoef, free_slots, sorted);
      for (std::int64_t l = lmin_next; l <= lmax; ++l)
        pr[static_cast<std::size_t>(l)] =
            vcoef[static_cast<std::size_t>(tr.d - l)];
    } else {
      for (std::int64_t l = lmin; l < k; ++l)
        pr[static_cast<std::size_t>(l)] = residual[static_cast<std::size_t>(l)];
      for (std::int64_t j = tr.j_min; j <= tr.j_max; ++j) {
        const std::int64_t dj = tr.d - j;
        if (dj >= 0 && dj < k)
          vcoef[static_cast<std::size_t>(j)] = pr[static_cast<std::size_t>(dj)];
        else
          free_slots.push_back(j);
      }
      vanish_on(code, vcoef, free_slots, sorted);
    }

    for (int l = 0; l < k; ++l)
      residual[static_cast<std::size_t>(l)] = f.sub(
          residual[static_cast<std::size_t>(l)], pr[static_cast<std::size_t>(l)]);
    out.round_targets.push_back(std::move(pr));
    out.round_polys.emplace_back(std::move(vcoef));
  }

  for (felem x : residual)
    if (x != 0)
      fail(Errc::ParamConstraintViolated, "round targets do not sum to p (internal)");
  return out;
}

EvaluationScheme build_scheme(const RSCode& code, std::span<const felem> p,
                              const Rat& epsilon, const Rat& gamma,
                              const Rat& delta, std::span<const int> erasures) {
  if (!code.is_full_length())
    fail(Errc::ParamConstraintViolated, "construction requires the full-length code");
  const auto& f = code.field();
  const auto Q = static_cast<std::int64_t>(f.order());

  Rat eps = epsilon;
  const Rat k_rat(code.dim());
  const Rat k_exact = Rat(Q) * (Rat(1) - epsilon);
  if (k_rat > k_exact)
    fail(Errc::ParamConstraintViolated, "violated: k <= Q * (1 - epsilon)");
  if (k_rat < k_exact) eps = Rat(1) - k_rat / Rat(Q);  // shrink to the actual rate

  MainParams params = main_params(f.base_order(), f.ext_degree(), eps, gamma, delta);
  auto decomp = decompose_target(code, p, params, erasures);

  EvaluationScheme scheme(code);
  scheme.kind = SchemeKind::Main;
  scheme.epsilon = eps;
  scheme.gamma = gamma;
  scheme.delta = delta;
  scheme.s = params.s;
  scheme.erasures = checked_erasures(code, erasures);
  scheme.target.assign(p.begin(), p.end());
  for (int r = 0; r < params.s; ++r)
    scheme.rounds.push_back(make_window_scheme(
        code, decomp.round_targets[static_cast<std::size_t>(r)],
        params.triples[static_cast<std::size_t>(r)],
        decomp.round_polys[static_cast<std::size_t>(r)], erasures));
  for (const auto& ws : scheme.rounds) scheme.bandwidth_bits += ws.bandwidth_bits(f);

  const std::uint64_t per_round =
      (static_cast<std::uint64_t>(code.length()) - scheme.erasures.size()) *
      static_cast<std::uint64_t>(f.bits_per_base_symbol());
  if (scheme.bandwidth_bits > per_round * static_cast<std::uint64_t>(params.s))
    fail(Errc::ParamConstraintViolated, "ledger exceeds (n - |I|) s ceil(log2 q) (internal)");
  if (Rat(static_cast<std::int64_t>(scheme.bandwidth_bits)) >
      Rat(static_cast<std::int64_t>(per_round)) / (eps - delta))
    fail(Errc::ParamConstraintViolated,
         "ledger exceeds (n - |I|) (1/(epsilon - delta)) ceil(log2 q) (internal)");
  return scheme;
}

EvaluationScheme build_rate_half_scheme(const RSCode& code,
                                        std::span<const felem> p,
                                        std::span<const int> erasures) {
  if (!code.is_full_length())
    fail(Errc::ParamConstraintViolated, "construction requires the full-length code");
  const auto& f = code.field();
  GoodTriple triple = rate_half_params(f.base_order(), f.ext_degree(), code.dim());

  EvaluationScheme scheme(code);
  scheme.kind = SchemeKind::RateHalf;
  scheme.epsilon = Rat(1) - Rat(code.dim()) / Rat(static_cast<std::int64_t>(f.order()));
  scheme.gamma = Rat(0);
  scheme.delta = Rat(0);
  scheme.s = 1;
  scheme.erasures = checked_erasures(code, erasures);
  scheme.target.assign(p.begin(), p.end());
  scheme.rounds.push_back(single_window_scheme(code, p, triple, erasures));
  scheme.bandwidth_bits = scheme.rounds.front().bandwidth_bits(f);
  return scheme;
}

felem rs_reconstruct(const RSCode& code, const WindowScheme& ws,
                     const std::vector<std::optional<felem>>& responses) {
  if (responses.size() != static_cast<std::size_t>(code.length()))
    fail(Errc::LengthMismatch, "one response slot per node required");
  if (!ws.transmits()) return 0;
  const auto& f = code.field();

  std::vector<felem> values(responses.size(), 0);
  std::size_t next_erased = 0;
  for (int j = 0; j < code.length(); ++j) {
    const auto ju = static_cast<std::size_t>(j);
    while (next_erased < ws.erasures.size() && ws.erasures[next_erased] < j)
      ++next_erased;
    const bool erased =
        next_erased < ws.erasures.size() && ws.erasures[next_erased] == j;
    if (erased) continue;  // v vanishes there, the trace is known to be zero
    if (!responses[ju])
      fail(Errc::MissingResponse, "node " + std::to_string(j) + " sent nothing");
    values[ju] = *responses[ju];
  }

  Poly r = interpolate_all_points(code, values);
  return r.coeff(static_cast<std::size_t>(ws.triple.d));
}

felem evaluate_full(const RSCode& code, const EvaluationScheme& scheme,
                    const std::vector<std::vector<std::optional<felem>>>& responses) {
  if (responses.size() != scheme.rounds.size())
    fail(Errc::LengthMismatch, "one response set per round required");
  const auto& f = code.field();
  felem acc = 0;
  for (std::size_t r = 0; r < scheme.rounds.size(); ++r) {
    if (!scheme.rounds[r].transmits()) continue;
    acc = f.add(acc, rs_reconstruct(code, scheme.rounds[r], responses[r]));
  }
  return acc;
}

}  // namespace lbeval

#include "lbeval/serialize.hpp"

#include "lbeval/errors.hpp"

namespace lbeval {

namespace {

json rat_to_json(const Rat& r) {
  return json::array({r.numerator(), r.denominator()});
}

Rat rat_from_json(const json& j) {
  return Rat(j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>());
}

GoodTriple triple_from_json(const json& j) {
  GoodTriple t;
  t.j_min = j.at("j_min").get<std::int64_t>();
  t.j_max = j.at("j_max").get<std::int64_t>();
  t.d = j.at("d").get<std::int64_t>();
  return t;
}

json triple_to_json(const GoodTriple& t) {
  return {{"j_min", t.j_min}, {"j_max", t.j_max}, {"d", t.d}};
}

}  // namespace

json field_to_json(const FieldExtension& f) {
  return {{"q", f.base_order()},
          {"t", f.ext_degree()},
          {"modulus", f.modulus()},
          {"basis", f.basis()}};
}

std::shared_ptr<const FieldExtension> field_from_json(const json& j) {
  return make_extension_field(j.at("q").get<felem>(), j.at("t").get<int>(),
                              j.at("modulus").get<std::vector<felem>>(),
                              j.at("basis").get<std::vector<felem>>());
}

json code_to_json(const RSCode& code) {
  return {{"field", field_to_json(code.field())},
          {"k", code.dim()},
          {"n", code.length()},
          {"eval_point_codes",
           std::vector<felem>(code.eval_points().begin(), code.eval_points().end())}};
}

RSCode code_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  auto pts = j.at("eval_point_codes").get<std::vector<felem>>();
  if (j.at("n").get<int>() != static_cast<int>(pts.size()))
    fail(Errc::ParseError, "code descriptor length disagrees with its points");
  return RSCode(std::move(field), j.at("k").get<int>(), std::move(pts));
}

json scheme_to_json(const EvaluationScheme& scheme) {
  json rounds = json::array();
  for (const auto& ws : scheme.rounds)
    rounds.push_back({{"triple", triple_to_json(ws.triple)},
                      {"p", ws.target},
                      {"v", ws.v.c}});
  return {{"code", code_to_json(scheme.code)},
          {"params",
           {{"kind", scheme.kind == SchemeKind::RateHalf ? "rate_half" : "main"},
            {"epsilon", rat_to_json(scheme.epsilon)},
            {"gamma", rat_to_json(scheme.gamma)},
            {"delta", rat_to_json(scheme.delta)},
            {"s", scheme.s}}},
          {"erasures", scheme.erasures},
          {"target", scheme.target},
          {"rounds", rounds}};
}

EvaluationScheme scheme_from_json(const json& j) {
  RSCode code = code_from_json(j.at("code"));
  EvaluationScheme scheme(code);
  const auto& params = j.at("params");
  scheme.kind = params.at("kind").get<std::string>() == "rate_half"
                    ? SchemeKind::RateHalf
                    : SchemeKind::Main;
  scheme.epsilon = rat_from_json(params.at("epsilon"));
  scheme.gamma = rat_from_json(params.at("gamma"));
  scheme.delta = rat_from_json(params.at("delta"));
  scheme.s = params.at("s").get<int>();
  scheme.erasures = j.at("erasures").get<std::vector<int>>();
  scheme.target = j.at("target").get<std::vector<felem>>();
  for (const auto& round : j.at("rounds")) {
    scheme.rounds.push_back(make_window_scheme(
        scheme.code, round.at("p").get<std::vector<felem>>(),
        triple_from_json(round.at("triple")),
        Poly(round.at("v").get<std::vector<felem>>()), scheme.erasures));
    scheme.bandwidth_bits +=
        scheme.rounds.back().bandwidth_bits(scheme.code.field());
  }
  if (scheme.s != static_cast<int>(scheme.rounds.size()))
    fail(Errc::ParseError, "scheme file: s disagrees with the round count");
  return scheme;
}

json witness_to_json(const GenericSchemeWitness& w) {
  return {{"p", w.p}, {"w", w.w}, {"z", w.z}, {"a", w.a}};
}

GenericSchemeWitness witness_from_json(const json& j) {
  GenericSchemeWitness w;
  w.p = j.at("p").get<std::vector<felem>>();
  w.w = j.at("w").get<std::vector<felem>>();
  w.z = j.at("z").get<std::vector<std::vector<felem>>>();
  w.a = j.at("a").get<std::vector<std::vector<std::vector<felem>>>>();
  return w;
}

json eval_result_to_json(const EvalResult& r) {
  return {{"values", r.values},
          {"bits_downloaded", r.bits_downloaded},
          {"bits_naive", r.bits_naive},
          {"nodes_contacted", r.nodes_contacted}};
}

json bound_report_to_json(const BoundReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name}, {"bits", e.bits}, {"vacuous", e.vacuous}});
  return {{"n", r.n},       {"k", r.k},
          {"q", r.q},       {"t", r.t},
          {"entries", entries}, {"binding", r.binding},
          {"binding_name", r.binding_name}};
}

json cluster_snapshot_to_json(const Cluster& c) {
  return {{"code", code_to_json(c.code())},
          {"blocks", c.block_count()},
          {"failed", std::vector<int>(c.failed().begin(), c.failed().end())}};
}

std::vector<std::uint8_t> pack_base_symbols(felem q, std::span<const felem> symbols) {
  const int width = ceil_log2(q);
  std::vector<std::uint8_t> out;
  int bit = 0;
  for (felem s : symbols) {
    for (int i = width - 1; i >= 0; --i) {
      if (bit == 0) out.push_back(0);
      const int shift = 7 - bit;
      out.back() |= static_cast<std::uint8_t>(((s >> i) & 1u) << shift);
      bit = (bit + 1) % 8;
    }
  }
  return out;
}

std::vector<felem> unpack_base_symbols(felem q, std::size_t count,
                                       std::span<const std::uint8_t> bytes) {
  const int width = ceil_log2(q);
  if (bytes.size() * 8 < count * static_cast<std::size_t>(width))
    fail(Errc::ParseError, "packed payload too short");
  std::vector<felem> out(count, 0);
  std::size_t bit = 0;
  for (auto& s : out)
    for (int i = 0; i < width; ++i, ++bit) {
      const std::uint8_t byte = bytes[bit / 8];
      s = (s << 1) | ((byte >> (7 - bit % 8)) & 1u);
    }
  return out;
}

json node_response_to_json(felem q, const NodeResponse& r) {
  return {{"node", r.node},
          {"count", r.values.size()},
          {"payload", pack_base_symbols(q, r.values)}};
}

NodeResponse node_response_from_json(felem q, const json& j) {
  NodeResponse r;
  r.node = j.at("node").get<int>();
  const auto count = j.at("count").get<std::size_t>();
  const auto bytes = j.at("payload").get<std::vector<std::uint8_t>>();
  r.values = unpack_base_symbols(q, count, bytes);
  r.bit_count = static_cast<int>(count) * ceil_log2(q);
  return r;
}

}  // namespace lbeval

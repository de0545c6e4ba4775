#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "lbeval/bounds.hpp"
#include "lbeval/rs_scheme.hpp"
#include "lbeval/scheme_core.hpp"
#include "lbeval/simulator.hpp"

namespace lbeval {

using json = nlohmann::json;

json field_to_json(const FieldExtension& f);
std::shared_ptr<const FieldExtension> field_from_json(const json& j);

json code_to_json(const RSCode& code);
RSCode code_from_json(const json& j);

json scheme_to_json(const EvaluationScheme& scheme);
EvaluationScheme scheme_from_json(const json& j);

json witness_to_json(const GenericSchemeWitness& w);
GenericSchemeWitness witness_from_json(const json& j);

json eval_result_to_json(const EvalResult& r);
json bound_report_to_json(const BoundReport& r);
json cluster_snapshot_to_json(const Cluster& c);

/// Response wire format: ceil(log2 q) bits per base symbol, big-endian within
/// bytes, zero-padded to a byte boundary per node.
std::vector<std::uint8_t> pack_base_symbols(felem q, std::span<const felem> symbols);
std::vector<felem> unpack_base_symbols(felem q, std::size_t count,
                                       std::span<const std::uint8_t> bytes);

json node_response_to_json(felem q, const NodeResponse& r);
NodeResponse node_response_from_json(felem q, const json& j);

}  // namespace lbeval

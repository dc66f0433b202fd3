#pragma once

#include <filesystem>
#include <vector>

#include "json.hpp"

#include "feeamm/state.hpp"

namespace feeamm::io {

using nlohmann::json;

// Loaders validate every type invariant. Violations raise ParseError with
// the offending field path, e.g. "pools[0].r0: must be positive".
SystemState state_from_json(const json& doc);
PriceOracle oracle_from_json(const json& doc);
std::vector<SwapTx> trace_from_json(const json& doc);

json to_json(const SystemState& state);
json to_json(const PriceOracle& oracle);
json to_json(const SwapTx& tx);

json parse_json(const std::string& text);
json read_json_file(const std::filesystem::path& path);

// Rounds to 12 significant digits so dumps stay short and auditable.
double round_sig(double value, int digits = 12);

// Copy of doc with every floating-point number passed through round_sig.
json round_numbers(const json& doc, int digits = 12);

// Minted balance keys are written "A/B" in canonical order.
std::string pair_key(const MintedTokenId& pair);

}  // namespace feeamm::io

// JSON input of block specifications and deterministic JSON report output.
// Cyclotomic values are serialized as (conductor, exact rational coordinate
// strings) so nothing is lost to rounding.
#pragma once

#include "blocklab/char_theory.hpp"
#include "blocklab/isometry.hpp"
#include "blocklab/picard.hpp"
#include "blocklab/qci.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace blocklab {

using Json = nlohmann::ordered_json;

BlockSpec parse_spec(const Json& j);
BlockSpec load_spec_file(const std::string& path);
Json spec_to_json(const BlockSpec& spec);

Json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

Json characters_report(const BlockData& data);
Json decomposition_report(const BlockData& data);
Json action_report(const BlockSpec& spec);
Json qci_report(const BlockData& data, const QMatrixData& q, const QPropertyReport& props,
                const ScanReport& strict_scan, const ScanReport* p2_scan);
Json isometries_report(const BlockData& data, const BlockData& d1_block,
                       const IsometryGroup& group);
Json picard_to_json(const PicardReport& report);
std::string picard_text_summary(const PicardReport& report);

void write_file(const std::string& path, const std::string& contents);
void write_report(const std::string& out_dir, const std::string& filename, const Json& j);

}  // namespace blocklab

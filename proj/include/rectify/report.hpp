#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "rectify/constructible.hpp"
#include "rectify/demos.hpp"
#include "rectify/rectifier.hpp"

namespace rectify {

using Json = nlohmann::ordered_json;

/// Renders a document as indented "key: value" text (the human format; the
/// machine format is the JSON itself).
std::string render_text(const Json& doc);

// Tower elements serialize as nested arrays of rational strings; towers as
// (defining polynomial, anchor) lists.  All numbers ship as strings to keep
// the formats exact.
Json elem_to_json(const TowerElem& e);
TowerElem elem_from_json(const Json& j, int level);
Json tower_to_json(const Tower& tw);
Tower tower_from_json(const Json& j);

/// Full result document for a rectification run: inputs echoed, tower,
/// points, flags, ledger, and per-level chain statistics.
Json rectified_to_json(const std::vector<Int>& A, const Int& p, const Int& k, const Int& t,
                       const RectifiedSet& rs);

/// Inputs parsed back from a result document, for re-verification.
struct ParsedResult {
    std::vector<Int> A;
    Int p, k, t;
    Tower tower;
    std::vector<TowerElem> points;
};
ParsedResult result_from_json(const Json& j);

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

Json transfer_to_json(const std::vector<Int>& A, const Int& p, const TransferReport& rep);

}  // namespace rectify

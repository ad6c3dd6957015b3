// json_io.hpp -- deterministic JSON rendering of the engine's report types.
//
// Objects are emitted with sorted keys (nlohmann defaults) and all list
// orderings are inherited from the deterministic engine orderings, so output
// is byte-stable across runs.

#pragma once

#include <string>

#include <json.hpp>

#include "schubaut/classify.hpp"
#include "schubaut/constructions.hpp"
#include "schubaut/demazure.hpp"
#include "schubaut/extremal.hpp"
#include "schubaut/root_system.hpp"
#include "schubaut/schubert.hpp"
#include "schubaut/weyl.hpp"

namespace schubaut::jsonio {

nlohmann::json to_json(const Root& r);
nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const Parabolic& p);

// {"matrix": rows, "word": reduced or cached word}
nlohmann::json to_json(const RootSystem& rs, const WeylElement& w);

nlohmann::json to_json(const RootSystem& rs, const MinusculeReport& rep);
nlohmann::json to_json(const RootSystem& rs, const TransporterResult& res);
nlohmann::json to_json(const RootSystem& rs, const WitnessReport& rep);
nlohmann::json to_json(const LemmaSuiteResult& res);

// Sorted list of {"weight": [...], "mult": n}.
nlohmann::json to_json(const Character& chi);

// Comma-separated integer list ("2,4,5"); empty string yields an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace schubaut::jsonio

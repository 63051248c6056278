#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "placid/checks.hpp"
#include "placid/monoid.hpp"
#include "placid/search.hpp"

namespace placid {

/// Structured forms are stable: nlohmann::json orders keys alphabetically,
/// so dump() of the same data is byte-identical across runs.
nlohmann::json to_json(const YoungTableau& t);
nlohmann::json to_json(const QuasiRibbonTableau& t);
nlohmann::json to_json(const BinaryTree& t);
nlohmann::json to_json(const MultiplicityTree& t);
nlohmann::json to_json(const TwinPair& p);
nlohmann::json to_json(const StalacticTableau& t);
nlohmann::json to_json(const PSTableau& t);
nlohmann::json to_json(const CombinatorialObject& o);

nlohmann::json to_json(const SearchBounds& b);
nlohmann::json to_json(const Verdict& v);

nlohmann::json psymbol_report(MonoidId m, const Word& w);
nlohmann::json equiv_report(MonoidId m, const Word& u, const Word& v, bool eq);
nlohmann::json check_report(MonoidId m, const Identity& id, const Verdict& v);
nlohmann::json search_report(const SearchReport& r);
nlohmann::json properties_report(MonoidId m, std::string_view suite, const Verdict& v);

std::string render_verdict_ascii(const Verdict& v);
std::string render_search_ascii(const SearchReport& r);

}  // namespace placid

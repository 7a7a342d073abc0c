#pragma once

#include <nlohmann/json.hpp>

#include "isf/decide.hpp"
#include "isf/orders.hpp"

namespace isf {

// JSON views of the machine-readable records emitted by the CLI. Diagrams
// round-trip; everything else serializes statements and words in the
// statement grammar so output re-parses.

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchStats& s);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const OrderVerdict& v);

struct TranslationRecord {
    std::string input;
    std::vector<std::string> output;
    std::vector<std::string> fresh_vars;
    std::size_t size_in = 0;
    std::size_t size_out = 0;
};

nlohmann::json to_json(const TranslationRecord& r);

} // namespace isf

#pragma once

#include "adelic/base/field.hpp"
#include "adelic/laurent/laurent2.hpp"
#include "adelic/symbols/symbols.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace adelic {

using json = nlohmann::ordered_json;

/// Result of one CLI command.
struct Report {
  std::string command;
  std::string field;
  std::string modulus;
  std::vector<json> loci;
  json aggregate = json::object();
  std::string verdict = "ok";  // pass | fail | ok
  std::optional<int> precision;
  std::optional<Window> window;
  bool stable = true;
  std::string brief;  // one-line text rendering, if any

  json to_json() const {
    json j;
    j["command"] = command;
    j["field"] = field;
    j["modulus"] = modulus;
    j["loci"] = loci;
    j["aggregate"] = aggregate;
    j["verdict"] = verdict;
    j["precision"] = precision ? json(*precision) : json(nullptr);
    j["window"] = window ? json::array({window->ord1, window->prec1, window->ord2, window->prec2}) : json(nullptr);
    j["stable"] = stable;
    return j;
  }

  std::string to_text() const {
    if (!brief.empty()) return brief + "\n";
    std::ostringstream s;
    s << command << " over " << modulus << "\n";
    for (const auto& l : loci) {
      s << " ";
      for (const auto& [key, v] : l.items()) s << " " << key << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      s << "\n";
    }
    if (!aggregate.empty()) s << aggregate.dump() << "\n";
    s << verdict << "\n";
    return s.str();
  }
};

inline json valuation_json(const Rank2Val& v) { return json::array({v.nu1, v.nu2}); }

} // namespace adelic

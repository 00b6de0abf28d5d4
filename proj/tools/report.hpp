#pragma once

// Text and JSON renderings of harmony reports and derivation outcomes.

#include <string>
#include <vector>

#include <json.hpp>

#include "bilateral/harmony.hpp"
#include "bilateral/kernel.hpp"

namespace bilateral::report {

using nlohmann::json;

inline std::string family_type(const FamilyReport& f) {
  if (!f.classification) return f.resolved_type ? "empty (type " + std::string(to_string(*f.resolved_type)) + ")" : "empty";
  return to_string(*f.classification);
}

inline std::string text(const HarmonyReport& r) {
  std::string out = r.connective + ": " + std::string(to_string(r.verdict)) + "\n";
  for (const auto& f : r.families) {
    out += "  " + to_string(f.key) + ": " + std::to_string(f.rule_count) + " rule" +
           (f.rule_count == 1 ? "" : "s") + ", " + family_type(f) + "\n";
  }
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    out += "  failed " + std::string(to_string(c.kind)) + " check (" + to_string(c.source) +
           " -> " + to_string(c.family) + "): " + c.note + "\n";
    for (const auto& e : c.expected) out += "    expected " + e + "\n";
    for (const auto& e : c.found) out += "    found    " + e + "\n";
  }
  for (const auto& p : r.problems) out += "  problem: " + p + "\n";
  return out;
}

inline json to_json(const HarmonyReport& r) {
  json families = json::array();
  for (const auto& f : r.families) {
    json j = {{"family", to_string(f.key)}, {"rules", f.rule_count}};
    if (!f.classification) {
      j["classification"] = "empty";
      j["reason"] = nullptr;
    } else {
      switch (f.classification->kind) {
        case ClassificationResult::Kind::Definitely:
          j["classification"] = "type" + std::string(to_string(f.classification->type));
          j["reason"] = nullptr;
          break;
        case ClassificationResult::Kind::Ambiguous:
          j["classification"] = "ambiguous";
          j["reason"] = f.classification->reason;
          break;
        case ClassificationResult::Kind::IllFormed:
          j["classification"] = "ill-formed";
          j["reason"] = f.classification->reason;
          break;
      }
    }
    j["type"] = f.resolved_type ? json(std::stoi(std::string(to_string(*f.resolved_type)))) : json(nullptr);
    families.push_back(std::move(j));
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"kind", to_string(c.kind)},
                      {"source", to_string(c.source)},
                      {"family", to_string(c.family)},
                      {"status", c.pass ? "pass" : "fail"},
                      {"expected", c.expected},
                      {"found", c.found},
                      {"note", c.note}});
  }
  return {{"connective", r.connective},
          {"verdict", to_string(r.verdict)},
          {"families", families},
          {"checks", checks},
          {"problems", r.problems},
          {"reason", r.reason.empty() ? json(nullptr) : json(r.reason)}};
}

inline std::string open_set(const std::vector<SignedFormula>& open) {
  std::string out = "{";
  for (std::size_t i = 0; i < open.size(); ++i) out += (i ? ", " : "") + to_string(open[i]);
  return out + "}";
}

inline std::string text(const std::string& file, const CheckOutcome& o) {
  if (o.valid)
    return file + ": Valid, concludes " + to_string(*o.conclusion) + " from " + open_set(o.open) + "\n";
  return file + ": Invalid at node " + o.path + ": " + std::string(to_string(o.error)) + ": " +
         o.reason + "\n";
}

inline json to_json(const std::string& file, const CheckOutcome& o) {
  if (o.valid) {
    json open = json::array();
    for (const auto& f : o.open) open.push_back(to_string(f));
    return {{"file", file}, {"status", "Valid"}, {"conclusion", to_string(*o.conclusion)}, {"open", open}};
  }
  return {{"file", file}, {"status", "Invalid"}, {"path", o.path},
          {"error", to_string(o.error)}, {"reason", o.reason}};
}

}  // namespace bilateral::report

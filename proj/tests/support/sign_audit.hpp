#pragma once

// Sign bookkeeping for transformation outputs: which signed formulas occur in
// a rule, and whether a transformation flipped exactly the expected ones.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bilateral/syntax.hpp"

namespace audit {

using namespace bilateral;

/// Every signed formula occurring in `r`, as a sorted multiset of printed forms.
inline std::vector<std::string> occurrences(const RuleSchema& r) {
  std::vector<std::string> out;
  if (r.major) out.push_back(to_string(*r.major));
  for (const auto& p : r.premises) {
    for (const auto& h : p.discharged) out.push_back(to_string(h));
    if (!p.end.is_arbitrary()) out.push_back(to_string(p.end.formula()));
  }
  if (!r.conclusion.is_arbitrary()) out.push_back(to_string(r.conclusion.formula()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Signs that each (unsigned) formula carries in the given rules.
inline std::map<std::string, std::vector<Sign>> sign_map(const std::vector<RuleSchema>& rules) {
  std::map<std::string, std::vector<Sign>> out;
  auto note = [&](const SignedFormula& x) {
    auto& v = out[to_string(x.formula)];
    if (std::find(v.begin(), v.end(), x.sign) == v.end()) v.push_back(x.sign);
  };
  for (const auto& r : rules) {
    if (r.major) note(*r.major);
    for (const auto& p : r.premises) {
      for (const auto& h : p.discharged) note(h);
      if (!p.end.is_arbitrary()) note(p.end.formula());
    }
    if (!r.conclusion.is_arbitrary()) note(r.conclusion.formula());
  }
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

/// Inversion: no formula of the output carries a sign it did not carry in
/// the input. Returns a description of the first offence.
inline std::optional<std::string> inversion_preserves_signs(const std::vector<RuleSchema>& input,
                                                            const std::vector<RuleSchema>& output) {
  auto before = sign_map(input);
  for (const auto& [f, signs] : sign_map(output)) {
    auto it = before.find(f);
    if (it == before.end()) return "formula " + f + " appears from nowhere";
    for (Sign s : signs)
      if (std::find(it->second.begin(), it->second.end(), s) == it->second.end())
        return "formula " + f + " changed sign to " + std::string(to_string(s));
  }
  return std::nullopt;
}

/// Conversion: the output's occurrences are the input's with exactly the two
/// named occurrences replaced by their conjugates.
inline std::optional<std::string> conversion_flips_exactly(const RuleSchema& input,
                                                           const RuleSchema& output,
                                                           const SignedFormula& first,
                                                           const SignedFormula& second) {
  auto expected = occurrences(input);
  for (const auto& x : {first, second}) {
    auto it = std::find(expected.begin(), expected.end(), to_string(x));
    if (it == expected.end()) return "input lacks " + to_string(x);
    *it = to_string(conjugate(x));
  }
  std::sort(expected.begin(), expected.end());
  auto got = occurrences(output);
  if (got != expected) {
    std::string msg = "expected occurrences";
    for (const auto& e : expected) msg += " " + e;
    msg += " but found";
    for (const auto& g : got) msg += " " + g;
    return msg;
  }
  return std::nullopt;
}

}  // namespace audit

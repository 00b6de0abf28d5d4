#pragma once

// The four sign restrictions that make conversion well defined:
//
//   1.i  type-1 intro: a side deduction discharging several assumptions has
//        exactly one of them with the sign of the conclusion.
//   2.i  type-2 intro with several premises: exactly one premise has the
//        sign of the conclusion.
//   1.e  type-1 elim with several minor premises: exactly one has the sign of
//        the major premise.
//   2.e  type-2 elim: a side deduction discharging several assumptions has
//        exactly one of them with the sign of the major premise.
//
// Each restriction only bites when its "several" condition triggers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bilateral/syntax.hpp"

namespace bilateral {

struct Violation {
  std::string code;      // "1.i", "2.i", "1.e" or "2.e"
  std::string location;  // e.g. "premise 2"
  std::string message;
};

inline std::string restriction_code(RuleType type, Role role) {
  return std::string(to_string(type)) + (role == Role::Intro ? ".i" : ".e");
}

namespace detail {

inline std::size_t count_sign(const std::vector<SignedFormula>& xs, Sign s) {
  std::size_t n = 0;
  for (const auto& x : xs) n += x.sign == s;
  return n;
}

inline Violation make_violation(const std::string& code, std::size_t premise_index,
                                std::size_t matching, const std::string& what) {
  return {code, "premise " + std::to_string(premise_index + 1),
          "restriction " + code + ": " + std::to_string(matching) + " of the " + what +
              " share the sign required to be unique (expected exactly 1)"};
}

}  // namespace detail

/// Checks the restriction applicable to `d` (type and role) on rule `r`.
/// Returns nullopt when the restriction holds or does not apply.
inline std::optional<Violation> check_restriction(const RuleSchema& r, const FamilyDescriptor& d) {
  const std::string code = restriction_code(d.type, d.role);
  const SignedFormula* g = governed(r);
  if (!g) return std::nullopt;
  const Sign s = g->sign;

  if (d.role == Role::Intro && d.type == RuleType::Type2) {
    if (r.premises.size() <= 1) return std::nullopt;
    std::vector<SignedFormula> prem;
    for (const auto& p : r.premises)
      if (!p.end.is_arbitrary()) prem.push_back(p.end.formula());
    std::size_t n = detail::count_sign(prem, s);
    if (n == 1) return std::nullopt;
    return Violation{code, "premises", "restriction 2.i: " + std::to_string(n) +
                                           " premises share the sign of the conclusion " +
                                           "(expected exactly 1)"};
  }

  if (d.role == Role::Elim && d.type == RuleType::Type1) {
    auto minors = minor_formulas(r);
    if (minors.size() <= 1) return std::nullopt;
    std::size_t n = detail::count_sign(minors, s);
    if (n == 1) return std::nullopt;
    return Violation{code, "minor premises", "restriction 1.e: " + std::to_string(n) +
                                                 " minor premises share the sign of the major " +
                                                 "premise (expected exactly 1)"};
  }

  // 1.i and 2.e: per side deduction.
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    const auto& p = r.premises[i];
    if (!p.is_side() || p.discharged.size() <= 1) continue;
    std::size_t n = detail::count_sign(p.discharged, s);
    if (n != 1)
      return detail::make_violation(code, i, n,
                                    d.role == Role::Intro
                                        ? "discharged assumptions (vs. the conclusion)"
                                        : "discharged assumptions (vs. the major premise)");
  }
  return std::nullopt;
}

}  // namespace bilateral

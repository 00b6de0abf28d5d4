#pragma once

// End-to-end harmony check for one connective: classify the four families,
// check the type pairing, then complete from every given family and compare
// the result with what the connective actually declares.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilateral/canonical.hpp"
#include "bilateral/conversion.hpp"
#include "bilateral/inversion.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

enum class Verdict { Harmonious, InversionViolation, ConversionViolation, IllFormed };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Harmonious: return "Harmonious";
    case Verdict::InversionViolation: return "InversionViolation";
    case Verdict::ConversionViolation: return "ConversionViolation";
    case Verdict::IllFormed: return "IllFormed";
  }
  return "?";
}

struct FamilyReport {
  FamilyKey key;
  std::size_t rule_count = 0;
  std::optional<ClassificationResult> classification;  // nullopt: empty family
  std::optional<RuleType> resolved_type;               // type of the polarity pair
};

struct HarmonyCheck {
  enum class Kind { Inversion, Conversion, Pairing };

  Kind kind = Kind::Inversion;
  FamilyKey source;  // family the expectation was derived from
  FamilyKey family;  // family compared
  bool pass = false;
  std::vector<std::string> expected;
  std::vector<std::string> found;
  std::string note;
};

inline std::string_view to_string(HarmonyCheck::Kind k) {
  switch (k) {
    case HarmonyCheck::Kind::Inversion: return "inversion";
    case HarmonyCheck::Kind::Conversion: return "conversion";
    case HarmonyCheck::Kind::Pairing: return "pairing";
  }
  return "?";
}

struct HarmonyReport {
  std::string connective;
  std::array<FamilyReport, 4> families;
  std::vector<HarmonyCheck> checks;
  std::vector<std::string> problems;  // ill-formedness reasons
  Verdict verdict = Verdict::Harmonious;
  std::string reason;  // first reason behind a non-harmonious verdict
};

namespace detail {

inline std::vector<std::string> rule_keys(const std::vector<RuleSchema>& family,
                                          const ConnectiveSpec& spec) {
  std::vector<std::string> out;
  for (const auto& r : canonicalize_family(family, spec)) out.push_back(rule_key(r));
  return out;
}

}  // namespace detail

inline HarmonyReport check_harmony(const ConnectiveSpec& spec) {
  HarmonyReport report;
  report.connective = spec.name;

  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    auto key = kAllFamilies[i];
    auto& fr = report.families[i];
    fr.key = key;
    fr.rule_count = spec.family(key).size();
    fr.classification = classify_family(spec, key);
    if (fr.classification && fr.classification->is_ill_formed())
      report.problems.push_back(to_string(key) + ": " + fr.classification->reason);
  }

  // Resolve one type per polarity pair; an intro/elim pair may show its type
  // even when one side alone is ambiguous.
  std::array<std::optional<RuleType>, 2> pair_type;
  bool any_rules = false;
  for (int p = 0; p < 2 && report.problems.empty(); ++p) {
    const Polarity pol = p == 0 ? Polarity::Assertive : Polarity::Rejective;
    auto& intro = report.families[ConnectiveSpec::index({pol, Role::Intro})];
    auto& elim = report.families[ConnectiveSpec::index({pol, Role::Elim})];
    if (!intro.classification && !elim.classification) continue;
    any_rules = true;
    std::optional<RuleType> ti, te;
    if (intro.classification && intro.classification->is_definitely()) ti = intro.classification->type;
    if (elim.classification && elim.classification->is_definitely()) te = elim.classification->type;
    if (ti && te && *ti != *te) {
      HarmonyCheck c;
      c.kind = HarmonyCheck::Kind::Inversion;
      c.source = intro.key;
      c.family = elim.key;
      c.note = to_string(intro.key) + " is type " + std::string(to_string(*ti)) + " but " +
               to_string(elim.key) + " is type " + std::string(to_string(*te));
      report.checks.push_back(std::move(c));
      continue;
    }
    pair_type[p] = ti ? ti : te;
    if (!pair_type[p]) {
      report.problems.push_back(std::string(to_string(pol)) +
                                " rules: type is ambiguous; declare (type 1) or (type 2)");
      continue;
    }
    intro.resolved_type = elim.resolved_type = pair_type[p];
  }
  if (report.problems.empty() && !any_rules) report.problems.push_back("connective has no rules");

  if (report.problems.empty()) {
    if (pair_type[0] && pair_type[1]) {
      HarmonyCheck c;
      c.kind = HarmonyCheck::Kind::Pairing;
      c.source = {Polarity::Assertive, Role::Intro};
      c.family = {Polarity::Rejective, Role::Intro};
      c.pass = *pair_type[0] != *pair_type[1];
      c.note = c.pass ? "assertive and rejective pairs have opposite types"
                      : "assertive and rejective pairs are both type " +
                            std::string(to_string(*pair_type[0]));
      report.checks.push_back(std::move(c));
    }

    for (const auto& fr : report.families) {
      if (fr.rule_count == 0 || !fr.resolved_type) continue;
      FamilyDescriptor d{fr.key.polarity, fr.key.role, *fr.resolved_type};
      try {
        ConnectiveSpec done =
            complete(spec.name, spec.arity, d, spec.family(fr.key), spec.arg_vars);
        for (auto target : kAllFamilies) {
          if (target == fr.key) continue;
          HarmonyCheck c;
          c.kind = target.polarity == fr.key.polarity ? HarmonyCheck::Kind::Inversion
                                                      : HarmonyCheck::Kind::Conversion;
          c.source = fr.key;
          c.family = target;
          c.expected = detail::rule_keys(done.family(target), spec);
          c.found = detail::rule_keys(spec.family(target), spec);
          c.pass = family_equal(done.family(target), spec.family(target), spec);
          if (!c.pass)
            c.note = "completing from " + to_string(fr.key) + " does not reproduce " +
                     to_string(target);
          report.checks.push_back(std::move(c));
        }
      } catch (const Error& e) {
        HarmonyCheck c;
        c.kind = e.kind() == ErrorKind::RestrictionViolation ? HarmonyCheck::Kind::Conversion
                                                             : HarmonyCheck::Kind::Inversion;
        c.source = fr.key;
        c.family = fr.key;
        c.note = e.what();
        report.checks.push_back(std::move(c));
      }
    }
  }

  auto first_failure = [&](auto pred) -> const HarmonyCheck* {
    for (const auto& c : report.checks)
      if (!c.pass && pred(c.kind)) return &c;
    return nullptr;
  };
  if (!report.problems.empty()) {
    report.verdict = Verdict::IllFormed;
    report.reason = report.problems.front();
  } else if (auto* c = first_failure([](auto k) { return k == HarmonyCheck::Kind::Inversion; })) {
    report.verdict = Verdict::InversionViolation;
    report.reason = c->note;
  } else if (auto* c = first_failure([](auto) { return true; })) {
    report.verdict = Verdict::ConversionViolation;
    report.reason = c->note;
  } else {
    report.verdict = Verdict::Harmonious;
  }
  return report;
}

}  // namespace bilateral

#pragma once

// Canonical forms for rule schemas: equality up to metavariable renaming,
// premise order and rule metadata.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bilateral/syntax.hpp"

namespace bilateral {

namespace detail {

inline Formula rename(const Formula& f, const std::map<std::string, std::string>& names) {
  if (f.is_meta()) {
    auto it = names.find(f.name());
    return Formula::meta(it == names.end() ? f.name() : it->second);
  }
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(rename(a, names));
  return Formula::apply(f.name(), std::move(args));
}

inline SignedFormula rename(const SignedFormula& x, const std::map<std::string, std::string>& names) {
  return {x.sign, rename(x.formula, names)};
}

inline Target rename(const Target& t, const std::map<std::string, std::string>& names) {
  return t.is_arbitrary() ? t : Target(rename(t.formula(), names));
}

}  // namespace detail

/// Renames the metavariables of `r` so that the governed compound reads
/// `(name arg_vars...)`, sorts discharge lists and premises by printed form,
/// and clears the rule name and declared type.
inline RuleSchema canonicalize(const RuleSchema& r, const ConnectiveSpec& spec) {
  std::map<std::string, std::string> names;
  if (const SignedFormula* g = governed(r)) {
    const auto& args = g->formula.args();
    if (args.size() == spec.arg_vars.size()) {
      for (std::size_t i = 0; i < args.size(); ++i)
        if (args[i].is_meta()) names.emplace(args[i].name(), spec.arg_vars[i]);
    }
  }

  RuleSchema out;
  out.role = r.role;
  if (r.major) out.major = detail::rename(*r.major, names);
  out.conclusion = detail::rename(r.conclusion, names);
  for (const auto& p : r.premises) {
    Premise q = p;
    for (auto& h : q.discharged) h = detail::rename(h, names);
    std::sort(q.discharged.begin(), q.discharged.end(), PrintedLess{});
    q.end = detail::rename(p.end, names);
    out.premises.push_back(std::move(q));
  }
  std::sort(out.premises.begin(), out.premises.end(), [](const Premise& a, const Premise& b) {
    return to_string(a) < to_string(b);
  });
  return out;
}

/// A one-line rendering of a rule's logical content, independent of name and
/// declared type. Doubles as the sort key for canonical families.
inline std::string rule_key(const RuleSchema& r) {
  std::string out(to_string(r.role));
  out += ": ";
  if (r.major) out += to_string(*r.major) + " ";
  out += "[";
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += " ";
    out += to_string(r.premises[i]);
  }
  return out + "] => " + to_string(r.conclusion);
}

inline std::vector<RuleSchema> canonicalize_family(const std::vector<RuleSchema>& family,
                                                   const ConnectiveSpec& spec) {
  std::vector<RuleSchema> out;
  out.reserve(family.size());
  for (const auto& r : family) out.push_back(canonicalize(r, spec));
  std::sort(out.begin(), out.end(),
            [](const RuleSchema& a, const RuleSchema& b) { return rule_key(a) < rule_key(b); });
  return out;
}

/// True iff the two rules have the same canonical form.
inline bool rules_equivalent(const RuleSchema& a, const RuleSchema& b, const ConnectiveSpec& spec) {
  return canonicalize(a, spec) == canonicalize(b, spec);
}

/// True iff the canonicalized multisets of rules coincide.
inline bool family_equal(const std::vector<RuleSchema>& f1, const std::vector<RuleSchema>& f2,
                         const ConnectiveSpec& spec) {
  if (f1.size() != f2.size()) return false;
  return canonicalize_family(f1, spec) == canonicalize_family(f2, spec);
}

}  // namespace bilateral

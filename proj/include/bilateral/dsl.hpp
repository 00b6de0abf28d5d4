#pragma once

// The connective DSL:
//
//   (connective "and" (arity 2) (args A B)
//     (rule "+andI" (polarity +) (role intro) (premises (+ A) (+ B))
//           (conclusion (+ (and A B))))
//     (rule "-andE" (polarity -) (role elim) (major (- (and A B)))
//           (premises (side (discharge (- A)) _ANY) (side (discharge (- B)) _ANY))
//           (conclusion _ANY)))
//
// `_ANY` marks the arbitrary signed formula. `(type 1)` / `(type 2)` may be
// attached to any rule. Unicode glyphs are accepted for the standard
// connectives and normalised to their ASCII names.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilateral/error.hpp"
#include "bilateral/sexpr.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

/// Maps Unicode glyphs to canonical ASCII connective names.
inline std::string normalize_connective(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> glyphs = {
      {"∧", "and"}, {"∨", "or"}, {"⊃", "imp"}, {"→", "imp"},
      {"¬", "neg"}, {"⊥", "bot"}, {"⊤", "top"},
  };
  auto it = glyphs.find(name);
  return it == glyphs.end() ? std::string(name) : it->second;
}

inline std::optional<Sign> parse_sign(std::string_view s) {
  if (s == "+") return Sign::Plus;
  if (s == "-" || s == "−") return Sign::Minus;
  return std::nullopt;
}

/// Arities of the connectives shipped with the tool; lets the parser tell an
/// unknown connective from a misused known one.
inline const std::map<std::string, std::size_t, std::less<>>& builtin_arities() {
  static const std::map<std::string, std::size_t, std::less<>> table = {
      {"and", 2}, {"or", 2},   {"imp", 2},  {"neg", 1},  {"bot", 0},
      {"top", 0}, {"tonk", 2}, {"conk", 2}, {"honk", 2},
  };
  return table;
}

namespace detail {

inline bool is_governed_compound(const Formula& f, const ConnectiveSpec& spec) {
  if (f.is_meta() || f.name() != spec.name || f.args().size() != spec.arity) return false;
  std::set<std::string> seen;
  for (const auto& a : f.args())
    if (!a.is_meta() || !seen.insert(a.name()).second) return false;
  return true;
}

inline std::optional<std::string> check_signed_metavariable(const SignedFormula& x,
                                                            std::string_view where) {
  if (x.formula.is_meta()) return std::nullopt;
  return "compound schematic formula " + to_string(x) + " in " + std::string(where) +
         "; only signed metavariables are allowed";
}

}  // namespace detail

/// Checks the structural invariants of a rule schema for `spec`. Returns a
/// description of the first problem, or nullopt when the rule is well formed.
inline std::optional<std::string> rule_problem(const RuleSchema& r, const ConnectiveSpec& spec) {
  if (r.role == Role::Intro) {
    if (r.major) return std::string("introduction rule has a major premise");
    if (r.conclusion.is_arbitrary())
      return std::string("misplaced ArbitraryMark: an introduction rule cannot conclude _ANY");
  } else if (!r.major) {
    return std::string("elimination rule requires a major premise");
  }

  const SignedFormula* g = governed(r);
  if (!detail::is_governed_compound(g->formula, spec)) {
    return std::string(r.role == Role::Intro ? "conclusion" : "major premise") + " " +
           to_string(*g) + " must be " + spec.name + " applied to distinct metavariables";
  }

  bool any_arbitrary_end = false;
  for (const auto& p : r.premises) {
    if (p.is_plain()) {
      if (p.end.is_arbitrary())
        return std::string("misplaced ArbitraryMark: _ANY used as a plain premise");
      if (auto e = detail::check_signed_metavariable(p.end.formula(), "premise")) return e;
      continue;
    }
    if (p.discharged.empty()) return std::string("side deduction discharges nothing");
    for (const auto& h : p.discharged)
      if (auto e = detail::check_signed_metavariable(h, "discharged hypothesis")) return e;
    if (p.end.is_arbitrary()) {
      any_arbitrary_end = true;
    } else if (auto e = detail::check_signed_metavariable(p.end.formula(), "side deduction end")) {
      return e;
    }
  }

  if (r.conclusion.is_arbitrary()) {
    for (const auto& p : r.premises)
      if (!p.is_side() || !p.end.is_arbitrary())
        return std::string(
            "misplaced ArbitraryMark: a rule concluding _ANY needs every premise to be a side "
            "deduction ending in _ANY");
  } else {
    if (any_arbitrary_end)
      return std::string("misplaced ArbitraryMark: side deduction ends in _ANY but the conclusion "
                         "is not _ANY");
    if (r.role == Role::Elim) {
      if (auto e = detail::check_signed_metavariable(r.conclusion.formula(), "conclusion")) return e;
    }
  }

  std::set<std::string> allowed;
  collect_metavariables(g->formula, allowed);
  for (const auto& v : metavariables(r))
    if (!allowed.count(v))
      return "metavariable " + v + " is not an argument of the governed formula";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::map<std::string, std::size_t, std::less<>> arities)
      : arities_(std::move(arities)) {}

  std::vector<ConnectiveSpec> parse(std::string_view text) {
    std::vector<ConnectiveSpec> out;
    std::set<std::string> names;
    for (const auto& form : sexpr::read(text)) {
      ConnectiveSpec spec = parse_connective(form);
      if (!names.insert(spec.name).second)
        throw ParseError(form.pos, "connective \"" + spec.name + "\" declared twice");
      out.push_back(std::move(spec));
    }
    return out;
  }

 private:
  [[noreturn]] static void fail(const sexpr::Node& at, const std::string& msg) {
    throw ParseError(at.pos, msg);
  }

  static std::size_t parse_count(const sexpr::Node& n) {
    if (!n.is_symbol() || n.text.empty() ||
        n.text.find_first_not_of("0123456789") != std::string::npos || n.text.size() > 6)
      fail(n, "expected a nonnegative integer, got '" + n.text + "'");
    return static_cast<std::size_t>(std::stoul(n.text));
  }

  ConnectiveSpec parse_connective(const sexpr::Node& form) {
    if (!form.is_form("connective")) fail(form, "expected (connective ...)");
    if (form.items.size() < 2 || !(form.items[1].is_string() || form.items[1].is_symbol()))
      fail(form, "connective needs a name");

    ConnectiveSpec spec;
    spec.name = normalize_connective(form.items[1].text);
    std::optional<std::size_t> arity;
    bool have_args = false;
    std::vector<const sexpr::Node*> rule_forms;

    for (std::size_t i = 2; i < form.items.size(); ++i) {
      const auto& clause = form.items[i];
      if (clause.is_form("arity")) {
        if (arity || clause.items.size() != 2) fail(clause, "malformed or repeated (arity N)");
        arity = parse_count(clause.items[1]);
      } else if (clause.is_form("args")) {
        if (have_args) fail(clause, "repeated (args ...)");
        have_args = true;
        std::set<std::string> seen;
        for (std::size_t j = 1; j < clause.items.size(); ++j) {
          const auto& a = clause.items[j];
          if (!a.is_symbol() || a.text == kArbitraryToken || parse_sign(a.text))
            fail(a, "argument variables must be symbols");
          if (!seen.insert(a.text).second) fail(a, "argument variable " + a.text + " repeated");
          if (arities_.count(normalize_connective(a.text)) || normalize_connective(a.text) == spec.name)
            fail(a, "argument variable " + a.text + " clashes with a connective name");
          spec.arg_vars.push_back(a.text);
        }
      } else if (clause.is_form("rule")) {
        rule_forms.push_back(&clause);
      } else {
        fail(clause, "unknown clause in connective \"" + spec.name + "\"");
      }
    }
    if (!arity) fail(form, "connective \"" + spec.name + "\" lacks (arity N)");
    spec.arity = *arity;
    if (!have_args && spec.arity == 0) have_args = true;
    if (!have_args) fail(form, "connective \"" + spec.name + "\" lacks (args ...)");
    if (spec.arg_vars.size() != spec.arity)
      fail(form, "arity mismatch: connective \"" + spec.name + "\" has arity " +
                     std::to_string(spec.arity) + " but declares " +
                     std::to_string(spec.arg_vars.size()) + " argument variables");

    arities_[spec.name] = spec.arity;
    for (const auto* rf : rule_forms) {
      auto [key, rule] = parse_rule(*rf, spec);
      spec.family(key).push_back(std::move(rule));
    }
    return spec;
  }

  std::pair<FamilyKey, RuleSchema> parse_rule(const sexpr::Node& form, const ConnectiveSpec& spec) {
    if (form.items.size() < 2 || !form.items[1].is_string())
      fail(form, "rule needs a quoted name");
    RuleSchema r;
    r.name = form.items[1].text;
    std::optional<Sign> polarity;
    std::optional<Role> role;
    bool have_premises = false, have_conclusion = false;

    for (std::size_t i = 2; i < form.items.size(); ++i) {
      const auto& c = form.items[i];
      auto once = [&](bool& seen) {
        if (seen) fail(c, "repeated clause in rule \"" + r.name + "\"");
        seen = true;
      };
      if (c.is_form("polarity")) {
        if (polarity || c.items.size() != 2 || !c.items[1].is_symbol())
          fail(c, "malformed or repeated (polarity +|-)");
        polarity = parse_sign(c.items[1].text);
        if (!polarity) fail(c.items[1], "polarity must be + or -");
      } else if (c.is_form("role")) {
        if (role || c.items.size() != 2) fail(c, "malformed or repeated (role intro|elim)");
        if (c.items[1].is_symbol("intro"))
          role = Role::Intro;
        else if (c.items[1].is_symbol("elim"))
          role = Role::Elim;
        else
          fail(c.items[1], "role must be intro or elim");
      } else if (c.is_form("type")) {
        if (r.declared_type || c.items.size() != 2) fail(c, "malformed or repeated (type 1|2)");
        if (c.items[1].is_symbol("1"))
          r.declared_type = RuleType::Type1;
        else if (c.items[1].is_symbol("2"))
          r.declared_type = RuleType::Type2;
        else
          fail(c.items[1], "type must be 1 or 2");
      } else if (c.is_form("major")) {
        if (r.major || c.items.size() != 2) fail(c, "malformed or repeated (major ...)");
        if (c.items[1].is_symbol(kArbitraryToken))
          fail(c.items[1], "misplaced ArbitraryMark: _ANY cannot be a major premise");
        r.major = parse_signed(c.items[1], spec);
      } else if (c.is_form("premises")) {
        once(have_premises);
        for (std::size_t j = 1; j < c.items.size(); ++j) r.premises.push_back(parse_premise(c.items[j], spec));
      } else if (c.is_form("conclusion")) {
        once(have_conclusion);
        if (c.items.size() != 2) fail(c, "malformed (conclusion ...)");
        r.conclusion = parse_target(c.items[1], spec);
      } else {
        fail(c, "unknown clause in rule \"" + r.name + "\"");
      }
    }
    if (!polarity) fail(form, "rule \"" + r.name + "\" lacks (polarity +|-)");
    if (!role) fail(form, "rule \"" + r.name + "\" lacks (role intro|elim)");
    if (!have_premises) fail(form, "rule \"" + r.name + "\" lacks (premises ...)");
    if (!have_conclusion) fail(form, "rule \"" + r.name + "\" lacks (conclusion ...)");
    r.role = *role;

    if (auto problem = rule_problem(r, spec)) fail(form, "rule \"" + r.name + "\": " + *problem);
    const SignedFormula* g = governed(r);
    if (g->sign != *polarity)
      fail(form, "polarity/family mismatch: rule \"" + r.name + "\" declares polarity " +
                     std::string(to_string(*polarity)) + " but its " +
                     (r.role == Role::Intro ? "conclusion" : "major premise") + " is " +
                     to_string(*g));
    return {FamilyKey{polarity_of(*polarity), r.role}, std::move(r)};
  }

  Premise parse_premise(const sexpr::Node& n, const ConnectiveSpec& spec) {
    if (n.is_form("side")) {
      if (n.items.size() != 3 || !n.items[1].is_form("discharge"))
        fail(n, "side deduction must read (side (discharge ...) END)");
      std::vector<SignedFormula> hyps;
      for (std::size_t j = 1; j < n.items[1].items.size(); ++j) {
        const auto& h = n.items[1].items[j];
        if (h.is_symbol(kArbitraryToken))
          fail(h, "misplaced ArbitraryMark: _ANY cannot be discharged");
        if (h.is_form("side")) fail(h, "nested side deductions are not supported");
        hyps.push_back(parse_signed(h, spec));
      }
      return Premise::side_deduction(std::move(hyps), parse_target(n.items[2], spec));
    }
    if (n.is_symbol(kArbitraryToken))
      fail(n, "misplaced ArbitraryMark: _ANY used as a plain premise");
    return Premise::plain(parse_signed(n, spec));
  }

  Target parse_target(const sexpr::Node& n, const ConnectiveSpec& spec) {
    if (n.is_symbol(kArbitraryToken)) return Target::arbitrary();
    return Target(parse_signed(n, spec));
  }

  SignedFormula parse_signed(const sexpr::Node& n, const ConnectiveSpec& spec) {
    if (!n.is_list() || n.items.size() != 2 || !n.items[0].is_symbol())
      fail(n, "expected a signed formula (SIGN FORMULA)");
    auto sign = parse_sign(n.items[0].text);
    if (!sign) fail(n.items[0], "sign must be + or -");
    return {*sign, parse_formula(n.items[1], spec)};
  }

  Formula parse_formula(const sexpr::Node& n, const ConnectiveSpec& spec) {
    if (n.is_string()) fail(n, "unexpected string in formula");
    if (n.is_symbol()) {
      if (n.text == kArbitraryToken)
        fail(n, "misplaced ArbitraryMark: _ANY cannot occur inside a formula");
      for (const auto& v : spec.arg_vars)
        if (v == n.text) return Formula::meta(n.text);
      std::string name = normalize_connective(n.text);
      if (auto it = arities_.find(name); it != arities_.end()) {
        if (it->second != 0)
          fail(n, "arity mismatch: " + name + " expects " + std::to_string(it->second) +
                      " arguments, got 0");
        return Formula::apply(name);
      }
      fail(n, "undeclared metavariable " + n.text);
    }
    if (n.items.empty() || !n.items[0].is_symbol()) fail(n, "expected (CONNECTIVE ARG...)");
    std::string head = normalize_connective(n.items[0].text);
    auto it = arities_.find(head);
    if (it == arities_.end()) fail(n.items[0], "unknown connective " + head);
    if (it->second != n.items.size() - 1)
      fail(n, "arity mismatch: " + head + " expects " + std::to_string(it->second) +
                  " arguments, got " + std::to_string(n.items.size() - 1));
    std::vector<Formula> args;
    for (std::size_t j = 1; j < n.items.size(); ++j) args.push_back(parse_formula(n.items[j], spec));
    return Formula::apply(head, std::move(args));
  }

  std::map<std::string, std::size_t, std::less<>> arities_;
};

}  // namespace detail

/// Parses DSL source into fully validated connective specifications.
/// Throws ParseError (with line/column) on any syntax or invariant violation.
inline std::vector<ConnectiveSpec> parse_spec(std::string_view text) {
  auto arities = std::map<std::string, std::size_t, std::less<>>(builtin_arities().begin(),
                                                                  builtin_arities().end());
  return detail::SpecParser(std::move(arities)).parse(text);
}

// ---------------------------------------------------------------------------
// Printing

inline std::string print_rule(const RuleSchema& r) {
  const SignedFormula* g = governed(r);
  std::string out = "(rule " + sexpr::quote(r.name);
  if (g) out += " (polarity " + std::string(to_string(g->sign)) + ")";
  out += " (role " + std::string(to_string(r.role)) + ")";
  if (r.declared_type) out += " (type " + std::string(to_string(*r.declared_type)) + ")";
  if (r.major) out += " (major " + to_string(*r.major) + ")";
  out += " (premises";
  for (const auto& p : r.premises) out += " " + to_string(p);
  out += ") (conclusion " + to_string(r.conclusion) + "))";
  return out;
}

inline std::string print_spec(const ConnectiveSpec& spec) {
  std::string out = "(connective " + sexpr::quote(spec.name) + " (arity " +
                    std::to_string(spec.arity) + ") (args";
  for (const auto& v : spec.arg_vars) out += " " + v;
  out += ")";
  for (auto key : kAllFamilies)
    for (const auto& r : spec.family(key)) out += "\n  " + print_rule(r);
  return out + ")\n";
}

inline std::string print_specs(const std::vector<ConnectiveSpec>& specs) {
  std::string out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (i) out += "\n";
    out += print_spec(specs[i]);
  }
  return out;
}

}  // namespace bilateral

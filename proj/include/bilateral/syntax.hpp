#pragma once

// Core vocabulary: signs, formulas, signed formulas, rule schemas and
// connective specifications. Everything here is a plain value type.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilateral/error.hpp"

namespace bilateral {

enum class Sign { Plus, Minus };

constexpr Sign conjugate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline std::string_view to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

/// A metavariable, or a connective applied to arguments. A connective applied
/// to no arguments is a constant; propositional atoms in concrete derivations
/// are modelled as uninterpreted constants.
class Formula {
 public:
  enum class Kind { Meta, Apply };

  Formula() = default;

  static Formula meta(std::string name) { return Formula(Kind::Meta, std::move(name), {}); }
  static Formula apply(std::string head, std::vector<Formula> args = {}) {
    return Formula(Kind::Apply, std::move(head), std::move(args));
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Formula>& args() const { return args_; }

  bool is_meta() const { return kind_ == Kind::Meta; }
  bool is_constant() const { return kind_ == Kind::Apply && args_.empty(); }
  bool is_closed() const {
    if (is_meta()) return false;
    return std::all_of(args_.begin(), args_.end(), [](const Formula& f) { return f.is_closed(); });
  }

  bool operator==(const Formula& other) const = default;

 private:
  Formula(Kind kind, std::string name, std::vector<Formula> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_ = Kind::Apply;
  std::string name_;
  std::vector<Formula> args_;
};

inline std::string to_string(const Formula& f) {
  if (f.args().empty()) return f.name();
  std::string out = "(" + f.name();
  for (const auto& a : f.args()) out += " " + to_string(a);
  return out + ")";
}

inline void collect_metavariables(const Formula& f, std::set<std::string>& out) {
  if (f.is_meta()) {
    out.insert(f.name());
    return;
  }
  for (const auto& a : f.args()) collect_metavariables(a, out);
}

struct SignedFormula {
  Sign sign = Sign::Plus;
  Formula formula;

  bool operator==(const SignedFormula&) const = default;
};

inline SignedFormula conjugate(const SignedFormula& x) { return {conjugate(x.sign), x.formula}; }

inline SignedFormula plus(Formula f) { return {Sign::Plus, std::move(f)}; }
inline SignedFormula minus(Formula f) { return {Sign::Minus, std::move(f)}; }

inline std::string to_string(const SignedFormula& x) {
  return "(" + std::string(to_string(x.sign)) + " " + to_string(x.formula) + ")";
}

/// Orders signed formulas by printed form; used wherever a multiset needs a
/// canonical sequence.
struct PrintedLess {
  bool operator()(const SignedFormula& a, const SignedFormula& b) const {
    return to_string(a) < to_string(b);
  }
};

inline constexpr std::string_view kArbitraryToken = "_ANY";

/// A rule conclusion or side-deduction end: either a signed formula or the
/// arbitrary mark standing for "any signed formula".
class Target {
 public:
  Target() = default;
  Target(SignedFormula sf) : formula_(std::move(sf)) {}  // NOLINT(google-explicit-constructor)

  static Target arbitrary() { return Target(); }

  bool is_arbitrary() const { return !formula_.has_value(); }
  const SignedFormula& formula() const {
    if (!formula_) throw Error(ErrorKind::WrongShape, "arbitrary mark has no formula");
    return *formula_;
  }

  bool operator==(const Target&) const = default;

 private:
  std::optional<SignedFormula> formula_;
};

inline std::string to_string(const Target& t) {
  return t.is_arbitrary() ? std::string(kArbitraryToken) : to_string(t.formula());
}

struct Premise {
  bool side = false;
  std::vector<SignedFormula> discharged;  // empty for plain premises
  Target end;

  static Premise plain(SignedFormula sf) { return {false, {}, Target(std::move(sf))}; }
  static Premise side_deduction(std::vector<SignedFormula> hyps, Target end) {
    return {true, std::move(hyps), std::move(end)};
  }

  bool is_plain() const { return !side; }
  bool is_side() const { return side; }

  bool operator==(const Premise&) const = default;
};

inline std::string to_string(const Premise& p) {
  if (p.is_plain()) return to_string(p.end);
  std::string out = "(side (discharge";
  for (const auto& h : p.discharged) out += " " + to_string(h);
  return out + ") " + to_string(p.end) + ")";
}

enum class Role { Intro, Elim };
enum class Polarity { Assertive, Rejective };
enum class RuleType { Type1, Type2 };

constexpr Sign sign_of(Polarity p) { return p == Polarity::Assertive ? Sign::Plus : Sign::Minus; }
constexpr Polarity polarity_of(Sign s) {
  return s == Sign::Plus ? Polarity::Assertive : Polarity::Rejective;
}
constexpr Polarity opposite(Polarity p) {
  return p == Polarity::Assertive ? Polarity::Rejective : Polarity::Assertive;
}
constexpr Role opposite(Role r) { return r == Role::Intro ? Role::Elim : Role::Intro; }
constexpr RuleType opposite(RuleType t) {
  return t == RuleType::Type1 ? RuleType::Type2 : RuleType::Type1;
}

inline std::string_view to_string(Role r) { return r == Role::Intro ? "intro" : "elim"; }
inline std::string_view to_string(Polarity p) {
  return p == Polarity::Assertive ? "assertive" : "rejective";
}
inline std::string_view to_string(RuleType t) { return t == RuleType::Type1 ? "1" : "2"; }

struct RuleSchema {
  std::string name;
  Role role = Role::Intro;
  std::optional<SignedFormula> major;  // present iff role == Elim
  std::vector<Premise> premises;
  Target conclusion;
  std::optional<RuleType> declared_type;

  bool operator==(const RuleSchema&) const = default;
};

/// The signed occurrence of the governed compound: the conclusion of an
/// introduction rule, the major premise of an elimination rule. Null when the
/// rule has neither (ill-formed input).
inline const SignedFormula* governed(const RuleSchema& r) {
  if (r.role == Role::Elim) return r.major ? &*r.major : nullptr;
  return r.conclusion.is_arbitrary() ? nullptr : &r.conclusion.formula();
}

inline std::optional<Polarity> polarity_of(const RuleSchema& r) {
  const SignedFormula* g = governed(r);
  if (!g) return std::nullopt;
  return polarity_of(g->sign);
}

inline std::set<std::string> metavariables(const RuleSchema& r) {
  std::set<std::string> out;
  if (r.major) collect_metavariables(r.major->formula, out);
  for (const auto& p : r.premises) {
    for (const auto& h : p.discharged) collect_metavariables(h.formula, out);
    if (!p.end.is_arbitrary()) collect_metavariables(p.end.formula().formula, out);
  }
  if (!r.conclusion.is_arbitrary()) collect_metavariables(r.conclusion.formula().formula, out);
  return out;
}

/// Plain premises other than the major premise.
inline std::vector<SignedFormula> minor_formulas(const RuleSchema& r) {
  std::vector<SignedFormula> out;
  for (const auto& p : r.premises)
    if (p.is_plain() && !p.end.is_arbitrary()) out.push_back(p.end.formula());
  return out;
}

struct FamilyKey {
  Polarity polarity = Polarity::Assertive;
  Role role = Role::Intro;

  bool operator==(const FamilyKey&) const = default;
};

inline constexpr std::array<FamilyKey, 4> kAllFamilies = {{
    {Polarity::Assertive, Role::Intro},
    {Polarity::Assertive, Role::Elim},
    {Polarity::Rejective, Role::Intro},
    {Polarity::Rejective, Role::Elim},
}};

inline std::string to_string(FamilyKey k) {
  return std::string(to_string(k.polarity)) + "-" + std::string(to_string(k.role));
}

inline std::optional<FamilyKey> parse_family_key(std::string_view s) {
  for (auto k : kAllFamilies)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

struct FamilyDescriptor {
  Polarity polarity = Polarity::Assertive;
  Role role = Role::Intro;
  RuleType type = RuleType::Type1;

  FamilyKey key() const { return {polarity, role}; }
  bool operator==(const FamilyDescriptor&) const = default;
};

inline std::string to_string(const FamilyDescriptor& d) {
  return to_string(d.key()) + "/type" + std::string(to_string(d.type));
}

struct ConnectiveSpec {
  std::string name;
  std::size_t arity = 0;
  std::vector<std::string> arg_vars;
  std::array<std::vector<RuleSchema>, 4> families;

  static constexpr std::size_t index(FamilyKey k) {
    return (k.polarity == Polarity::Assertive ? 0 : 2) + (k.role == Role::Intro ? 0 : 1);
  }

  std::vector<RuleSchema>& family(FamilyKey k) { return families[index(k)]; }
  const std::vector<RuleSchema>& family(FamilyKey k) const { return families[index(k)]; }
  std::vector<RuleSchema>& family(Polarity p, Role r) { return family(FamilyKey{p, r}); }
  const std::vector<RuleSchema>& family(Polarity p, Role r) const { return family(FamilyKey{p, r}); }

  /// The governed compound over the declared argument variables.
  Formula compound() const {
    std::vector<Formula> args;
    for (const auto& v : arg_vars) args.push_back(Formula::meta(v));
    return Formula::apply(name, std::move(args));
  }

  const RuleSchema* find_rule(std::string_view rule_name) const {
    for (const auto& fam : families)
      for (const auto& r : fam)
        if (r.name == rule_name) return &r;
    return nullptr;
  }

  std::size_t rule_count() const {
    std::size_t n = 0;
    for (const auto& fam : families) n += fam.size();
    return n;
  }
};

/// Default argument variable names: A, B, C, ... then X1, X2, ...
inline std::vector<std::string> default_arg_vars(std::size_t arity) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i) {
    if (i < 26)
      out.emplace_back(1, static_cast<char>('A' + i));
    else
      out.push_back("X" + std::to_string(i));
  }
  return out;
}

}  // namespace bilateral

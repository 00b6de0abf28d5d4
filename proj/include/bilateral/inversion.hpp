#pragma once

// Rule classification (type 1 / type 2) and inversion within one polarity:
// intro -> elims and elims -> intro for type 1, elim -> intros and
// intros -> elim for type 2. Inversion never changes a sign.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bilateral/canonical.hpp"
#include "bilateral/dsl.hpp"
#include "bilateral/error.hpp"
#include "bilateral/restrictions.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

struct ClassificationResult {
  enum class Kind { Definitely, Ambiguous, IllFormed };

  Kind kind = Kind::IllFormed;
  RuleType type = RuleType::Type1;  // meaningful for Definitely only
  std::string reason;               // meaningful for IllFormed (and Ambiguous)

  static ClassificationResult definitely(RuleType t) { return {Kind::Definitely, t, {}}; }
  static ClassificationResult ambiguous(std::string why) {
    return {Kind::Ambiguous, RuleType::Type1, std::move(why)};
  }
  static ClassificationResult ill_formed(std::string why) {
    return {Kind::IllFormed, RuleType::Type1, std::move(why)};
  }

  bool is_definitely() const { return kind == Kind::Definitely; }
  bool is_definitely(RuleType t) const { return kind == Kind::Definitely && type == t; }
  bool is_ambiguous() const { return kind == Kind::Ambiguous; }
  bool is_ill_formed() const { return kind == Kind::IllFormed; }
};

inline std::string to_string(const ClassificationResult& c) {
  switch (c.kind) {
    case ClassificationResult::Kind::Definitely:
      return "type " + std::string(to_string(c.type));
    case ClassificationResult::Kind::Ambiguous: return "ambiguous";
    case ClassificationResult::Kind::IllFormed: return "ill-formed: " + c.reason;
  }
  return "?";
}

namespace detail {

/// Every argument of the governed compound must occur exactly once among
/// `occurrences`.
inline std::optional<std::string> all_and_only(const Formula& compound,
                                               const std::vector<SignedFormula>& occurrences,
                                               const std::string& noun) {
  std::map<std::string, int> count;
  for (const auto& a : compound.args()) count[a.name()] = 0;
  for (const auto& x : occurrences) {
    if (!x.formula.is_meta()) return "compound formula " + to_string(x) + " among " + noun;
    auto it = count.find(x.formula.name());
    if (it == count.end())
      return "metavariable " + x.formula.name() + " is not an argument of " + to_string(compound);
    ++it->second;
  }
  for (const auto& a : compound.args()) {
    int n = count[a.name()];
    if (n == 0) return "metavariable " + a.name() + " unhoused by " + noun;
    if (n > 1) return "metavariable " + a.name() + " used more than once by " + noun;
  }
  return std::nullopt;
}

inline std::optional<std::string> first_of(std::optional<std::string> a,
                                           std::optional<std::string> b) {
  return a ? a : b;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-rule structural shapes. These assume `rule_problem` found nothing.

/// Type-1 intro: conclusion built from all and only the premises (plain
/// premises and side-deduction ends) and discharged hypotheses.
inline std::optional<std::string> type1_intro_shape(const RuleSchema& r) {
  if (r.role != Role::Intro) return std::string("not an introduction rule");
  if (r.conclusion.is_arbitrary()) return std::string("conclusion is the arbitrary mark");
  std::vector<SignedFormula> occ;
  for (const auto& p : r.premises) {
    if (p.end.is_arbitrary()) return std::string("a side deduction ends in the arbitrary mark");
    if (p.is_side() && p.discharged.empty())
      return std::string("side deduction discharges nothing");
    occ.push_back(p.end.formula());
    occ.insert(occ.end(), p.discharged.begin(), p.discharged.end());
  }
  return detail::all_and_only(r.conclusion.formula().formula, occ, "premises");
}

/// Type-1 elim (single rule): no side deductions, a signed conclusion.
inline std::optional<std::string> type1_elim_shape(const RuleSchema& r) {
  if (r.role != Role::Elim || !r.major) return std::string("not an elimination rule");
  if (r.conclusion.is_arbitrary()) return std::string("conclusion is the arbitrary mark");
  for (const auto& p : r.premises)
    if (p.is_side()) return std::string("minor premise is a side deduction");
  return std::nullopt;
}

/// Type-2 intro (single rule): at least one premise, all plain.
inline std::optional<std::string> type2_intro_shape(const RuleSchema& r) {
  if (r.role != Role::Intro) return std::string("not an introduction rule");
  if (r.conclusion.is_arbitrary()) return std::string("conclusion is the arbitrary mark");
  if (r.premises.empty()) return std::string("has no premises");
  for (const auto& p : r.premises)
    if (p.is_side()) return std::string("premise is a side deduction");
  return std::nullopt;
}

/// Type-2 elim: every minor premise is a side deduction of the arbitrary mark,
/// the conclusion is the arbitrary mark, and the major premise is built from
/// all and only the discharged hypotheses.
inline std::optional<std::string> type2_elim_shape(const RuleSchema& r) {
  if (r.role != Role::Elim || !r.major) return std::string("not an elimination rule");
  if (!r.conclusion.is_arbitrary()) return std::string("conclusion is not the arbitrary mark");
  std::vector<SignedFormula> occ;
  for (const auto& p : r.premises) {
    if (!p.is_side() || !p.end.is_arbitrary())
      return std::string("minor premise is not a side deduction of the arbitrary mark");
    if (p.discharged.empty()) return std::string("side deduction discharges nothing");
    occ.insert(occ.end(), p.discharged.begin(), p.discharged.end());
  }
  return detail::all_and_only(r.major->formula, occ, "discharged hypotheses");
}

// ---------------------------------------------------------------------------
// Inversion

/// Type 1, intro -> elims: one elimination rule per premise.
inline std::vector<RuleSchema> invert_intro1(const RuleSchema& intro) {
  if (auto why = type1_intro_shape(intro))
    throw Error(ErrorKind::WrongType, "invert_intro1: not a type-1 introduction rule: " + *why);
  std::vector<RuleSchema> elims;
  for (const auto& p : intro.premises) {
    RuleSchema e;
    e.role = Role::Elim;
    e.major = intro.conclusion.formula();
    for (const auto& h : p.discharged) e.premises.push_back(Premise::plain(h));
    e.conclusion = p.end;
    e.declared_type = RuleType::Type1;
    elims.push_back(std::move(e));
  }
  return elims;
}

/// Type 1, elims -> intro: one premise per elimination rule, a side deduction
/// when the elimination rule has minor premises.
inline RuleSchema invert_elims1(const SignedFormula& major, const std::vector<RuleSchema>& elims) {
  RuleSchema intro;
  intro.role = Role::Intro;
  intro.conclusion = major;
  intro.declared_type = RuleType::Type1;
  for (const auto& e : elims) {
    if (e.role != Role::Elim || !e.major)
      throw Error(ErrorKind::WrongShape, "invert_elims1: not an elimination rule");
    if (!(*e.major == major))
      throw Error(ErrorKind::MismatchedMajors, "invert_elims1: major premise " +
                                                   to_string(*e.major) + " differs from " +
                                                   to_string(major));
    if (e.conclusion.is_arbitrary())
      throw Error(ErrorKind::WrongShape, "invert_elims1: elimination rule concludes _ANY");
    std::vector<SignedFormula> minors;
    for (const auto& p : e.premises) {
      if (p.is_side() || p.end.is_arbitrary() || !p.end.formula().formula.is_meta())
        throw Error(ErrorKind::WrongShape,
                    "invert_elims1: minor premises must be plain signed metavariables");
      minors.push_back(p.end.formula());
    }
    intro.premises.push_back(minors.empty()
                                 ? Premise::plain(e.conclusion.formula())
                                 : Premise::side_deduction(std::move(minors), e.conclusion));
  }
  return intro;
}

/// Type 2, elim -> intros: one introduction rule per side deduction.
inline std::vector<RuleSchema> invert_elim2(const RuleSchema& elim) {
  if (auto why = type2_elim_shape(elim))
    throw Error(ErrorKind::WrongType, "invert_elim2: not a type-2 elimination rule: " + *why);
  std::vector<RuleSchema> intros;
  for (const auto& p : elim.premises) {
    RuleSchema i;
    i.role = Role::Intro;
    for (const auto& h : p.discharged) i.premises.push_back(Premise::plain(h));
    i.conclusion = *elim.major;
    i.declared_type = RuleType::Type2;
    intros.push_back(std::move(i));
  }
  return intros;
}

/// Type 2, intros -> elim: one side deduction of _ANY per introduction rule.
inline RuleSchema invert_intros2(const SignedFormula& major, const std::vector<RuleSchema>& intros) {
  RuleSchema elim;
  elim.role = Role::Elim;
  elim.major = major;
  elim.conclusion = Target::arbitrary();
  elim.declared_type = RuleType::Type2;
  for (const auto& i : intros) {
    if (i.role != Role::Intro || i.conclusion.is_arbitrary())
      throw Error(ErrorKind::WrongShape, "invert_intros2: not an introduction rule");
    if (!(i.conclusion.formula() == major))
      throw Error(ErrorKind::MismatchedConclusions,
                  "invert_intros2: conclusion " + to_string(i.conclusion.formula()) +
                      " differs from " + to_string(major));
    if (i.premises.empty())
      throw Error(ErrorKind::WrongShape,
                  "invert_intros2: a premise-free introduction rule yields an empty side deduction");
    std::vector<SignedFormula> hyps;
    for (const auto& p : i.premises) {
      if (p.is_side())
        throw Error(ErrorKind::WrongShape, "invert_intros2: premises must be plain");
      hyps.push_back(p.end.formula());
    }
    elim.premises.push_back(Premise::side_deduction(std::move(hyps), Target::arbitrary()));
  }
  return elim;
}

// ---------------------------------------------------------------------------
// Family-level shapes and classification

/// Structural shape of a whole family as type `t`, without sign restrictions.
/// `family` should be canonical (shared argument names). Empty families are
/// acceptable only where the type allows them (type-1 elims, type-2 intros).
inline std::optional<std::string> family_shape(RuleType t, Role role,
                                               const std::vector<RuleSchema>& family) {
  if (t == RuleType::Type1 && role == Role::Intro) {
    if (family.size() != 1)
      return "type 1 needs exactly one introduction rule, found " + std::to_string(family.size());
    return type1_intro_shape(family.front());
  }
  if (t == RuleType::Type2 && role == Role::Elim) {
    if (family.size() != 1)
      return "type 2 needs exactly one elimination rule, found " + std::to_string(family.size());
    return type2_elim_shape(family.front());
  }
  if (family.empty()) return std::nullopt;

  const SignedFormula* g = governed(family.front());
  if (!g) return std::string("rule has no governed formula");
  std::vector<SignedFormula> occ;
  for (const auto& r : family) {
    if (auto why = t == RuleType::Type1 ? type1_elim_shape(r) : type2_intro_shape(r)) return why;
    if (!(*governed(r) == *g))
      return std::string(t == RuleType::Type1 ? "elimination rules disagree on the major premise"
                                              : "introduction rules disagree on the conclusion");
    for (const auto& p : r.premises) occ.push_back(p.end.formula());
    if (t == RuleType::Type1) occ.push_back(r.conclusion.formula());
  }
  // The family must be the inverse image of a rule of the partner shape.
  return detail::all_and_only(g->formula, occ, "premises");
}

/// Sign restriction of type `t` over every rule of the family.
inline std::optional<Violation> family_restriction(RuleType t, Role role,
                                                   const std::vector<RuleSchema>& family) {
  FamilyDescriptor d{Polarity::Assertive, role, t};
  for (const auto& r : family)
    if (auto v = check_restriction(r, d)) return v;
  return std::nullopt;
}

namespace detail {

inline std::optional<std::string> full_shape(RuleType t, Role role,
                                             const std::vector<RuleSchema>& family) {
  if (auto why = family_shape(t, role, family)) return why;
  if (auto v = family_restriction(t, role, family)) return v->message;
  return std::nullopt;
}

inline ClassificationResult decide(const std::optional<std::string>& not1,
                                   const std::optional<std::string>& not2,
                                   std::optional<RuleType> declared) {
  if (!not1 && !not2) {
    if (declared) return ClassificationResult::definitely(*declared);
    return ClassificationResult::ambiguous("shape fits type 1 and type 2; declare (type N)");
  }
  if (not1 && not2) {
    if (*not1 == *not2) return ClassificationResult::ill_formed(*not1);
    return ClassificationResult::ill_formed("not type 1: " + *not1 + "; not type 2: " + *not2);
  }
  RuleType fits = not1 ? RuleType::Type2 : RuleType::Type1;
  if (declared && *declared != fits) {
    const std::string& why = *declared == RuleType::Type1 ? *not1 : *not2;
    return ClassificationResult::ill_formed("declared type " + std::string(to_string(*declared)) +
                                            " but " + why);
  }
  return ClassificationResult::definitely(fits);
}

inline std::optional<RuleType> declared_type_of(const std::vector<RuleSchema>& family,
                                                std::string* conflict) {
  std::optional<RuleType> out;
  for (const auto& r : family) {
    if (!r.declared_type) continue;
    if (out && *out != *r.declared_type) {
      *conflict = "rules of one family declare different types";
      return std::nullopt;
    }
    out = r.declared_type;
  }
  return out;
}

}  // namespace detail

/// Classifies a whole family (all rules of one polarity and role). Returns
/// nullopt for an empty family, whose type is fixed by its partner family.
inline std::optional<ClassificationResult> classify_family(const ConnectiveSpec& spec,
                                                           FamilyKey key) {
  const auto& family = spec.family(key);
  if (family.empty()) return std::nullopt;
  for (const auto& r : family)
    if (auto why = rule_problem(r, spec)) return ClassificationResult::ill_formed(*why);
  std::string conflict;
  auto declared = detail::declared_type_of(family, &conflict);
  if (!conflict.empty()) return ClassificationResult::ill_formed(conflict);
  auto canon = canonicalize_family(family, spec);
  return detail::decide(detail::full_shape(RuleType::Type1, key.role, canon),
                        detail::full_shape(RuleType::Type2, key.role, canon), declared);
}

/// Classifies `r` in the context of its family in `spec` (the rule is added to
/// the family if it is not already there): some shapes, such as the type-2
/// intro "all and only" condition, are only visible across the family.
inline ClassificationResult classify(const RuleSchema& r, const ConnectiveSpec& spec) {
  if (auto why = rule_problem(r, spec)) return ClassificationResult::ill_formed(*why);
  FamilyKey key{*polarity_of(r), r.role};
  auto family = spec.family(key);
  bool present = false;
  for (const auto& other : family) present = present || rules_equivalent(other, r, spec);
  if (!present) family.push_back(r);
  auto canon = canonicalize_family(family, spec);
  return detail::decide(detail::full_shape(RuleType::Type1, r.role, canon),
                        detail::full_shape(RuleType::Type2, r.role, canon), r.declared_type);
}

}  // namespace bilateral

#pragma once

// Conversion between polarities and the completion procedure.
//
// Process 1 turns a type-1 elimination rule for a signed formula into a
// type-2 introduction rule for its conjugate; process 2 goes back. Both are
// only applied where the result is again restricted and the premise that
// becomes the conclusion is recoverable, so the two processes are mutually
// inverse on their domains.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bilateral/canonical.hpp"
#include "bilateral/dsl.hpp"
#include "bilateral/error.hpp"
#include "bilateral/inversion.hpp"
#include "bilateral/restrictions.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

/// Process 1: type-1 elim of a signed formula -> type-2 intro of its conjugate.
inline RuleSchema convert_elim1_to_intro2(const RuleSchema& r) {
  if (auto why = type1_elim_shape(r))
    throw Error(ErrorKind::WrongType, "process 1: not a type-1 elimination rule: " + *why);
  if (auto v = check_restriction(r, {Polarity::Assertive, Role::Elim, RuleType::Type1}))
    throw Error(ErrorKind::RestrictionViolation, "process 1: " + v->message);

  RuleSchema out;
  out.role = Role::Intro;
  out.conclusion = conjugate(*r.major);
  out.declared_type = RuleType::Type2;
  const SignedFormula designated = conjugate(r.conclusion.formula());
  out.premises.push_back(Premise::plain(designated));
  for (const auto& p : r.premises) out.premises.push_back(p);

  if (out.premises.size() > 1) {
    if (auto v = check_restriction(out, {Polarity::Assertive, Role::Intro, RuleType::Type2}))
      throw Error(ErrorKind::RestrictionViolation,
                  "process 1: converted rule violates " + v->message);
    for (std::size_t i = 1; i < out.premises.size(); ++i)
      if (out.premises[i].end.formula().sign == out.conclusion.formula().sign)
        throw Error(ErrorKind::RestrictionViolation,
                    "process 1: minor premise " + to_string(out.premises[i].end.formula()) +
                        " would be taken for the converted conclusion (restriction 2.i)");
  }
  return out;
}

/// Process 2: type-2 intro of a signed formula -> type-1 elim of its conjugate.
inline RuleSchema convert_intro2_to_elim1(const RuleSchema& r) {
  if (auto why = type2_intro_shape(r))
    throw Error(ErrorKind::WrongType, "process 2: not a type-2 introduction rule: " + *why);
  if (auto v = check_restriction(r, {Polarity::Assertive, Role::Intro, RuleType::Type2}))
    throw Error(ErrorKind::RestrictionViolation, "process 2: " + v->message);

  const SignedFormula& concl = r.conclusion.formula();
  RuleSchema out;
  out.role = Role::Elim;
  out.major = conjugate(concl);
  out.declared_type = RuleType::Type1;

  if (r.premises.size() == 1) {
    out.conclusion = conjugate(r.premises.front().end.formula());
    return out;
  }
  std::optional<SignedFormula> designated;
  for (const auto& p : r.premises) {
    const auto& x = p.end.formula();
    if (!designated && x.sign == concl.sign)
      designated = x;
    else
      out.premises.push_back(p);
  }
  out.conclusion = conjugate(*designated);
  if (auto v = check_restriction(out, {Polarity::Assertive, Role::Elim, RuleType::Type1}))
    throw Error(ErrorKind::RestrictionViolation,
                "process 2: converted rule violates " + v->message);
  return out;
}

namespace detail {

inline std::string generated_name(const ConnectiveSpec& spec, FamilyKey key, std::size_t index,
                                  std::size_t count) {
  std::string name = std::string(to_string(sign_of(key.polarity))) + spec.name +
                     (key.role == Role::Intro ? "I" : "E");
  if (count > 1) name += std::to_string(index + 1);
  return name;
}

inline void finish_family(ConnectiveSpec& spec, FamilyKey key, std::vector<RuleSchema> rules,
                          RuleType type) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].name.empty()) rules[i].name = generated_name(spec, key, i, rules.size());
    rules[i].declared_type = type;
  }
  spec.family(key) = std::move(rules);
}

}  // namespace detail

/// Derives all four rule families of a connective from one given family.
/// Throws IllFormed for rules outside the family, WrongType when the family
/// does not have the shape of the declared type, and RestrictionViolation
/// when a sign restriction fails (including during conversion).
inline ConnectiveSpec complete(const std::string& name, std::size_t arity,
                               const FamilyDescriptor& d, const std::vector<RuleSchema>& rules,
                               std::optional<std::vector<std::string>> arg_vars = std::nullopt) {
  ConnectiveSpec spec;
  spec.name = name;
  spec.arity = arity;
  spec.arg_vars = arg_vars ? *arg_vars : default_arg_vars(arity);
  if (spec.arg_vars.size() != arity)
    throw Error(ErrorKind::IllFormed, "complete: argument variables do not match the arity");

  std::vector<RuleSchema> given;
  for (const auto& r : rules) {
    if (auto why = rule_problem(r, spec))
      throw Error(ErrorKind::IllFormed, "complete: rule \"" + r.name + "\": " + *why);
    FamilyKey k{*polarity_of(r), r.role};
    if (!(k == d.key()))
      throw Error(ErrorKind::IllFormed, "complete: rule \"" + r.name + "\" belongs to " +
                                            to_string(k) + ", not " + to_string(d.key()));
    RuleSchema c = canonicalize(r, spec);
    c.name = r.name;
    given.push_back(std::move(c));
  }
  if (auto why = family_shape(d.type, d.role, given))
    throw Error(ErrorKind::WrongType, "complete: " + to_string(d.key()) + " is not of type " +
                                          std::string(to_string(d.type)) + ": " + *why);
  if (auto v = family_restriction(d.type, d.role, given))
    throw Error(ErrorKind::RestrictionViolation, "complete: " + v->message);

  const Polarity pol = d.polarity;
  const Polarity opp = opposite(pol);
  const SignedFormula own{sign_of(pol), spec.compound()};
  const SignedFormula other{sign_of(opp), spec.compound()};
  const RuleType other_type = opposite(d.type);

  std::vector<RuleSchema> intros, elims, opp_intros, opp_elims;
  if (d.type == RuleType::Type1) {
    if (d.role == Role::Intro) {
      intros = given;
      elims = invert_intro1(given.front());
    } else {
      elims = given;
      intros = {invert_elims1(own, given)};
    }
    for (const auto& e : elims) opp_intros.push_back(convert_elim1_to_intro2(e));
    opp_elims = {invert_intros2(other, opp_intros)};
  } else {
    if (d.role == Role::Elim) {
      elims = given;
      intros = invert_elim2(given.front());
    } else {
      intros = given;
      elims = {invert_intros2(own, given)};
    }
    for (const auto& i : intros) opp_elims.push_back(convert_intro2_to_elim1(i));
    opp_intros = {invert_elims1(other, opp_elims)};
  }

  detail::finish_family(spec, {pol, Role::Intro}, std::move(intros), d.type);
  detail::finish_family(spec, {pol, Role::Elim}, std::move(elims), d.type);
  detail::finish_family(spec, {opp, Role::Intro}, std::move(opp_intros), other_type);
  detail::finish_family(spec, {opp, Role::Elim}, std::move(opp_elims), other_type);
  return spec;
}

}  // namespace bilateral

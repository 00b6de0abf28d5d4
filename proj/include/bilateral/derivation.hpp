#pragma once

// Concrete derivations and their file format:
//
//   (assume (+ p) :label 1)
//   (rule "imp" "+impE" (:subst (A p) (B q)) CHILD...)
//   (rule "imp" "+impI" (:subst (A p) (B q)) (:discharge 1 (+ p)) CHILD)
//   (coord :label 1 (+ p) CHILD1 CHILD2)
//
// A rule node may also carry (:conclusion (SIGN F)); it is needed only when
// the rule concludes _ANY and has no side deduction to read it from.
// Labels are bound once per tree, by a :discharge clause or by a coord node;
// any number of assumption leaves may carry the same label.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilateral/dsl.hpp"
#include "bilateral/error.hpp"
#include "bilateral/sexpr.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

struct Derivation {
  enum class Kind { Assume, Rule, Coord };

  Kind kind = Kind::Assume;
  SignedFormula formula;  // the assumption (Assume) or the discharged assumption (Coord)
  std::optional<int> label;
  std::string connective;
  std::string rule;
  std::map<std::string, Formula> subst;
  std::vector<std::pair<int, std::vector<SignedFormula>>> discharges;
  std::optional<SignedFormula> conclusion;  // explicit (:conclusion ...) on a rule node
  std::vector<Derivation> children;
  SourcePos pos;

  static Derivation assume(SignedFormula sf, std::optional<int> label = std::nullopt) {
    Derivation d;
    d.kind = Kind::Assume;
    d.formula = std::move(sf);
    d.label = label;
    return d;
  }

  static Derivation apply(std::string connective, std::string rule,
                          std::map<std::string, Formula> subst, std::vector<Derivation> children,
                          std::vector<std::pair<int, std::vector<SignedFormula>>> discharges = {}) {
    Derivation d;
    d.kind = Kind::Rule;
    d.connective = std::move(connective);
    d.rule = std::move(rule);
    d.subst = std::move(subst);
    d.children = std::move(children);
    d.discharges = std::move(discharges);
    return d;
  }

  static Derivation coord(int label, SignedFormula beta, Derivation left, Derivation right) {
    Derivation d;
    d.kind = Kind::Coord;
    d.label = label;
    d.formula = std::move(beta);
    d.children.push_back(std::move(left));
    d.children.push_back(std::move(right));
    return d;
  }
};

// ---------------------------------------------------------------------------
// Concrete formulas: symbols are atoms or constants, lists are applications.

namespace detail {

inline Formula parse_closed_formula(const sexpr::Node& n) {
  if (n.is_string()) throw ParseError(n.pos, "unexpected string in formula");
  if (n.is_symbol()) {
    if (n.text == kArbitraryToken || parse_sign(n.text))
      throw ParseError(n.pos, "'" + n.text + "' cannot be an atom");
    return Formula::apply(normalize_connective(n.text));
  }
  if (n.items.size() < 2 || !n.items[0].is_symbol())
    throw ParseError(n.pos, "expected (CONNECTIVE ARG...)");
  std::vector<Formula> args;
  for (std::size_t i = 1; i < n.items.size(); ++i) args.push_back(parse_closed_formula(n.items[i]));
  return Formula::apply(normalize_connective(n.items[0].text), std::move(args));
}

inline SignedFormula parse_closed_signed(const sexpr::Node& n) {
  if (!n.is_list() || n.items.size() != 2 || !n.items[0].is_symbol())
    throw ParseError(n.pos, "expected a signed formula (SIGN FORMULA)");
  auto sign = parse_sign(n.items[0].text);
  if (!sign) throw ParseError(n.items[0].pos, "sign must be + or -");
  return {*sign, parse_closed_formula(n.items[1])};
}

inline int parse_label(const sexpr::Node& n) {
  if (!n.is_symbol() || n.text.empty() || n.text.size() > 9 ||
      n.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(n.pos, "label must be a nonnegative integer");
  return std::stoi(n.text);
}

class DerivationParser {
 public:
  Derivation parse(const sexpr::Node& n) {
    if (n.is_form("assume")) return parse_assume(n);
    if (n.is_form("rule")) return parse_rule(n);
    if (n.is_form("coord")) return parse_coord(n);
    if (n.is_list() && !n.items.empty() && n.items[0].is_symbol())
      throw ParseError(n.pos, "unknown head form '" + n.items[0].text + "'");
    throw ParseError(n.pos, "expected (assume ...), (rule ...) or (coord ...)");
  }

 private:
  void bind(int label, SourcePos pos) {
    if (!bound_.insert(label).second)
      throw ParseError(pos, "duplicate label " + std::to_string(label));
  }

  Derivation parse_assume(const sexpr::Node& n) {
    Derivation d;
    d.pos = n.pos;
    if (n.items.size() != 2 && n.items.size() != 4)
      throw ParseError(n.pos, "expected (assume (SIGN F)) or (assume (SIGN F) :label N)");
    d.formula = parse_closed_signed(n.items[1]);
    if (n.items.size() == 4) {
      if (!n.items[2].is_symbol(":label")) throw ParseError(n.items[2].pos, "expected :label");
      d.label = parse_label(n.items[3]);
    }
    return d;
  }

  Derivation parse_rule(const sexpr::Node& n) {
    Derivation d;
    d.kind = Derivation::Kind::Rule;
    d.pos = n.pos;
    if (n.items.size() < 3 || !n.items[1].is_string() || !n.items[2].is_string())
      throw ParseError(n.pos, "expected (rule \"CONNECTIVE\" \"RULE\" ...)");
    d.connective = normalize_connective(n.items[1].text);
    d.rule = n.items[2].text;
    std::set<int> local;
    for (std::size_t i = 3; i < n.items.size(); ++i) {
      const auto& c = n.items[i];
      if (c.is_form(":subst")) {
        for (std::size_t j = 1; j < c.items.size(); ++j) {
          const auto& b = c.items[j];
          if (!b.is_list() || b.items.size() != 2 || !b.items[0].is_symbol())
            throw ParseError(b.pos, "expected (METAVARIABLE FORMULA) in :subst");
          if (!d.subst.emplace(b.items[0].text, parse_closed_formula(b.items[1])).second)
            throw ParseError(b.pos, "metavariable " + b.items[0].text + " substituted twice");
        }
      } else if (c.is_form(":discharge")) {
        if (c.items.size() < 2) throw ParseError(c.pos, "expected (:discharge N (SIGN F) ...)");
        int label = parse_label(c.items[1]);
        bind(label, c.items[1].pos);
        std::vector<SignedFormula> fs;
        for (std::size_t j = 2; j < c.items.size(); ++j) fs.push_back(parse_closed_signed(c.items[j]));
        d.discharges.emplace_back(label, std::move(fs));
      } else if (c.is_form(":conclusion")) {
        if (c.items.size() != 2 || d.conclusion)
          throw ParseError(c.pos, "malformed or repeated (:conclusion (SIGN F))");
        d.conclusion = parse_closed_signed(c.items[1]);
      } else {
        d.children.push_back(parse(c));
      }
    }
    return d;
  }

  Derivation parse_coord(const sexpr::Node& n) {
    Derivation d;
    d.kind = Derivation::Kind::Coord;
    d.pos = n.pos;
    if (n.items.size() != 6 || !n.items[1].is_symbol(":label"))
      throw ParseError(n.pos, "expected (coord :label N (SIGN F) CHILD1 CHILD2)");
    d.label = parse_label(n.items[2]);
    bind(*d.label, n.items[2].pos);
    d.formula = parse_closed_signed(n.items[3]);
    d.children.push_back(parse(n.items[4]));
    d.children.push_back(parse(n.items[5]));
    return d;
  }

  std::set<int> bound_;
};

}  // namespace detail

/// Parses one derivation. Throws ParseError on syntax errors, unknown head
/// forms and labels bound twice.
inline Derivation parse_derivation(std::string_view text) {
  auto forms = sexpr::read(text);
  if (forms.size() != 1)
    throw ParseError(forms.empty() ? SourcePos{1, 1} : forms[1].pos,
                     "expected exactly one derivation, found " + std::to_string(forms.size()));
  return detail::DerivationParser().parse(forms.front());
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline void print_derivation(const Derivation& d, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent), ' ');
  switch (d.kind) {
    case Derivation::Kind::Assume:
      out += "(assume " + to_string(d.formula);
      if (d.label) out += " :label " + std::to_string(*d.label);
      out += ")";
      return;
    case Derivation::Kind::Coord:
      out += "(coord :label " + std::to_string(*d.label) + " " + to_string(d.formula);
      break;
    case Derivation::Kind::Rule:
      out += "(rule " + sexpr::quote(d.connective) + " " + sexpr::quote(d.rule);
      if (!d.subst.empty()) {
        out += " (:subst";
        for (const auto& [v, f] : d.subst) out += " (" + v + " " + to_string(f) + ")";
        out += ")";
      }
      for (const auto& [label, fs] : d.discharges) {
        out += " (:discharge " + std::to_string(label);
        for (const auto& f : fs) out += " " + to_string(f);
        out += ")";
      }
      if (d.conclusion) out += " (:conclusion " + to_string(*d.conclusion) + ")";
      break;
  }
  for (const auto& c : d.children) {
    out += "\n";
    print_derivation(c, indent + 2, out);
  }
  out += ")";
}

}  // namespace detail

inline std::string print_derivation(const Derivation& d) {
  std::string out;
  detail::print_derivation(d, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------------------
// Open assumptions, read off the tree without checking it.

namespace detail {

inline void collect_open(const Derivation& d,
                         std::map<int, std::vector<SignedFormula>>& closing,
                         std::vector<SignedFormula>& out) {
  if (d.kind == Derivation::Kind::Assume) {
    if (d.label) {
      auto it = closing.find(*d.label);
      if (it != closing.end())
        for (const auto& f : it->second)
          if (f == d.formula) return;
    }
    out.push_back(d.formula);
    return;
  }
  std::vector<int> added;
  auto bind = [&](int label, std::vector<SignedFormula> fs) {
    if (closing.emplace(label, std::move(fs)).second) added.push_back(label);
  };
  if (d.kind == Derivation::Kind::Coord) bind(*d.label, {d.formula});
  for (const auto& [label, fs] : d.discharges) bind(label, fs);
  for (const auto& c : d.children) collect_open(c, closing, out);
  for (int label : added) closing.erase(label);
}

}  // namespace detail

/// Assumption leaves not closed by an ancestor, as a sorted multiset.
inline std::vector<SignedFormula> open_assumptions(const Derivation& d) {
  std::map<int, std::vector<SignedFormula>> closing;
  std::vector<SignedFormula> out;
  detail::collect_open(d, closing, out);
  std::sort(out.begin(), out.end(), PrintedLess{});
  return out;
}

}  // namespace bilateral

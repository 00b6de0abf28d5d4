#pragma once

// Random well-formed rule schemas for property tests: arity at most 3, at
// most 3 premises, at most 2 discharged hypotheses per side deduction, every
// applicable sign restriction respected.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bilateral/canonical.hpp"
#include "bilateral/syntax.hpp"

namespace gen {

using namespace bilateral;

class SchemaGen {
 public:
  explicit SchemaGen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  Sign sign() { return coin() ? Sign::Plus : Sign::Minus; }

  static ConnectiveSpec skeleton(std::size_t arity) {
    ConnectiveSpec s;
    s.name = "c" + std::to_string(arity);
    s.arity = arity;
    s.arg_vars = default_arg_vars(arity);
    return s;
  }

  /// Type-1 introduction rule. With `convertible`, every side deduction
  /// discharges one hypothesis of the conclusion's sign and ends in that sign
  /// too, so that every derived elimination rule can be converted.
  RuleSchema type1_intro(const ConnectiveSpec& spec, bool convertible = false) {
    const Sign s = sign();
    auto groups = split(spec, convertible ? 2 : 3, spec.arity == 0 ? 0 : 1);
    RuleSchema r;
    r.role = Role::Intro;
    r.conclusion = SignedFormula{s, spec.compound()};
    for (const auto& g : groups) {
      if (g.size() == 1) {
        r.premises.push_back(Premise::plain(var(g[0], sign())));
        continue;
      }
      std::vector<SignedFormula> hyps;
      if (convertible) {
        r.premises.push_back(Premise::side_deduction({var(g[1], s)}, var(g[0], s)));
        continue;
      }
      const std::size_t special = static_cast<std::size_t>(uniform(1, static_cast<int>(g.size()) - 1));
      for (std::size_t i = 1; i < g.size(); ++i)
        hyps.push_back(var(g[i], g.size() == 2 ? sign() : (i == special ? s : conjugate(s))));
      r.premises.push_back(Premise::side_deduction(std::move(hyps), var(g[0], sign())));
    }
    return r;
  }

  /// Type-2 elimination rule.
  RuleSchema type2_elim(const ConnectiveSpec& spec) {
    const Sign s = sign();
    RuleSchema r;
    r.role = Role::Elim;
    r.major = SignedFormula{s, spec.compound()};
    r.conclusion = Target::arbitrary();
    for (const auto& g : split(spec, 2, spec.arity == 0 ? 0 : (spec.arity + 1) / 2)) {
      std::vector<SignedFormula> hyps;
      const std::size_t special = static_cast<std::size_t>(uniform(0, static_cast<int>(g.size()) - 1));
      for (std::size_t i = 0; i < g.size(); ++i)
        hyps.push_back(var(g[i], g.size() == 1 ? sign() : (i == special ? s : conjugate(s))));
      r.premises.push_back(Premise::side_deduction(std::move(hyps), Target::arbitrary()));
    }
    return r;
  }

  /// Type-1 elimination rule inside the domain of process 1: no minor
  /// premise, or one minor premise that shares the major premise's sign with
  /// the conclusion.
  RuleSchema convertible_elim1(const ConnectiveSpec& spec) {
    const Sign s = sign();
    auto vars = shuffled(spec);
    RuleSchema r;
    r.role = Role::Elim;
    r.major = SignedFormula{s, spec.compound()};
    if (vars.size() >= 2 && coin()) {
      r.premises.push_back(Premise::plain(var(vars[1], s)));
      r.conclusion = var(vars[0], s);
    } else {
      r.conclusion = var(vars[0], sign());
    }
    return r;
  }

  /// Type-2 introduction rule inside the domain of process 2: one premise, or
  /// two of which exactly one shares the conclusion's sign.
  RuleSchema convertible_intro2(const ConnectiveSpec& spec) {
    const Sign s = sign();
    auto vars = shuffled(spec);
    RuleSchema r;
    r.role = Role::Intro;
    r.conclusion = SignedFormula{s, spec.compound()};
    if (vars.size() >= 2 && coin()) {
      r.premises.push_back(Premise::plain(var(vars[0], s)));
      r.premises.push_back(Premise::plain(var(vars[1], conjugate(s))));
      if (coin()) std::swap(r.premises[0], r.premises[1]);
    } else {
      r.premises.push_back(Premise::plain(var(vars[0], sign())));
    }
    return r;
  }

  /// Renames metavariables to a random injective choice of fresh names and
  /// shuffles premises and discharge lists; the canonical form is unchanged.
  RuleSchema disguise(const RuleSchema& r, const ConnectiveSpec& spec) {
    static const std::vector<std::string> pool = {"X", "Y", "Z", "U", "V", "W", "P1", "Q1"};
    auto names = pool;
    std::shuffle(names.begin(), names.end(), rng_);
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < spec.arg_vars.size(); ++i) m[spec.arg_vars[i]] = names[i];
    RuleSchema out = r;
    if (out.major) out.major = rename(*out.major, m);
    if (!out.conclusion.is_arbitrary()) out.conclusion = rename(out.conclusion.formula(), m);
    for (auto& p : out.premises) {
      for (auto& h : p.discharged) h = rename(h, m);
      std::shuffle(p.discharged.begin(), p.discharged.end(), rng_);
      if (!p.end.is_arbitrary()) p.end = rename(p.end.formula(), m);
    }
    std::shuffle(out.premises.begin(), out.premises.end(), rng_);
    return out;
  }

  std::mt19937& engine() { return rng_; }

 private:
  static SignedFormula var(const std::string& name, Sign s) { return {s, Formula::meta(name)}; }

  static SignedFormula rename(const SignedFormula& x, const std::map<std::string, std::string>& m) {
    return {x.sign, rename(x.formula, m)};
  }
  static Formula rename(const Formula& f, const std::map<std::string, std::string>& m) {
    if (f.is_meta()) return Formula::meta(m.at(f.name()));
    std::vector<Formula> args;
    for (const auto& a : f.args()) args.push_back(rename(a, m));
    return Formula::apply(f.name(), std::move(args));
  }

  std::vector<std::string> shuffled(const ConnectiveSpec& spec) {
    auto vars = spec.arg_vars;
    std::shuffle(vars.begin(), vars.end(), rng_);
    return vars;
  }

  // Splits the argument variables into between `min_groups` and 3 nonempty
  // groups of at most `max_size` each.
  std::vector<std::vector<std::string>> split(const ConnectiveSpec& spec, std::size_t max_size,
                                              std::size_t min_groups) {
    auto vars = shuffled(spec);
    const std::size_t n = vars.size();
    if (n == 0) return {};
    const std::size_t lo = std::max(min_groups, (n + max_size - 1) / max_size);
    const std::size_t hi = std::min<std::size_t>(3, n);
    for (;;) {
      const std::size_t k = static_cast<std::size_t>(uniform(static_cast<int>(lo), static_cast<int>(hi)));
      std::vector<std::size_t> sizes(k, 1);
      for (std::size_t extra = n - k; extra > 0; --extra) sizes[static_cast<std::size_t>(uniform(0, static_cast<int>(k) - 1))]++;
      if (std::any_of(sizes.begin(), sizes.end(), [&](std::size_t z) { return z > max_size; })) continue;
      std::vector<std::vector<std::string>> out;
      std::size_t at = 0;
      for (auto z : sizes) {
        out.emplace_back(vars.begin() + static_cast<std::ptrdiff_t>(at),
                         vars.begin() + static_cast<std::ptrdiff_t>(at + z));
        at += z;
      }
      return out;
    }
  }

  std::mt19937 rng_;
};

}  // namespace gen

#pragma once

// Checks concrete derivations against a library of connectives plus the
// Co-ordination Principle: if α and α* both follow from Γ together with β,
// then β* follows from Γ.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bilateral/derivation.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

enum class CheckError {
  None,
  UnknownRule,
  SubstitutionMismatch,
  DischargeError,
  MajorMismatch,
  PremiseMismatch,
  ArbitraryMarkInconsistency,
  CoordinationMismatch,
  ShapeMismatch,
};

inline std::string_view to_string(CheckError e) {
  switch (e) {
    case CheckError::None: return "None";
    case CheckError::UnknownRule: return "UnknownRule";
    case CheckError::SubstitutionMismatch: return "SubstitutionMismatch";
    case CheckError::DischargeError: return "DischargeError";
    case CheckError::MajorMismatch: return "MajorMismatch";
    case CheckError::PremiseMismatch: return "PremiseMismatch";
    case CheckError::ArbitraryMarkInconsistency: return "ArbitraryMarkInconsistency";
    case CheckError::CoordinationMismatch: return "CoordinationMismatch";
    case CheckError::ShapeMismatch: return "ShapeMismatch";
  }
  return "?";
}

struct CheckOutcome {
  bool valid = false;
  std::optional<SignedFormula> conclusion;  // set when valid
  std::vector<SignedFormula> open;          // sorted multiset, set when valid
  std::string path;                         // offending node, e.g. "0.1.0"
  CheckError error = CheckError::None;
  std::string reason;
};

inline Formula instantiate(const Formula& f, const std::map<std::string, Formula>& subst) {
  if (f.is_meta()) return subst.at(f.name());
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(instantiate(a, subst));
  return Formula::apply(f.name(), std::move(args));
}

inline SignedFormula instantiate(const SignedFormula& x, const std::map<std::string, Formula>& subst) {
  return {x.sign, instantiate(x.formula, subst)};
}

namespace detail {

struct KernelFailure {
  std::string path;
  CheckError error;
  std::string reason;
};

class Kernel {
 public:
  explicit Kernel(const std::vector<ConnectiveSpec>& lib) : lib_(lib) {}

  // Conclusion of `d`; appends open assumptions to `open`.
  SignedFormula check(const Derivation& d, const std::string& path,
                      std::vector<SignedFormula>& open) {
    switch (d.kind) {
      case Derivation::Kind::Assume: return check_assume(d, path, open);
      case Derivation::Kind::Coord: return check_coord(d, path, open);
      case Derivation::Kind::Rule: return check_rule(d, path, open);
    }
    fail(path, CheckError::ShapeMismatch, "unknown node");
  }

 private:
  [[noreturn]] static void fail(const std::string& path, CheckError e, std::string reason) {
    throw KernelFailure{path, e, std::move(reason)};
  }

  void claim(int label, const std::string& path) {
    if (!binders_.insert(label).second)
      fail(path, CheckError::DischargeError, "label " + std::to_string(label) + " is bound twice");
  }

  static std::string child_path(const std::string& path, std::size_t i) {
    return path + "." + std::to_string(i);
  }

  SignedFormula check_assume(const Derivation& d, const std::string& path,
                             std::vector<SignedFormula>& open) {
    if (!d.formula.formula.is_closed())
      fail(path, CheckError::ShapeMismatch, "assumption is not a closed formula");
    if (!d.label) {
      open.push_back(d.formula);
      return d.formula;
    }
    auto it = scope_.find(*d.label);
    if (it == scope_.end())
      fail(path, CheckError::DischargeError,
           "label " + std::to_string(*d.label) + " is not bound by any enclosing node");
    for (const auto& f : it->second)
      if (f == d.formula) return d.formula;
    fail(path, CheckError::DischargeError,
         "assumption " + to_string(d.formula) + " cannot be discharged under label " +
             std::to_string(*d.label) + " here");
  }

  SignedFormula check_coord(const Derivation& d, const std::string& path,
                            std::vector<SignedFormula>& open) {
    if (d.children.size() != 2 || !d.label)
      fail(path, CheckError::ShapeMismatch, "co-ordination needs a label and two subderivations");
    claim(*d.label, path);
    std::optional<SignedFormula> alpha[2];
    {
      Scoped bound(scope_, *d.label, {d.formula});
      for (std::size_t i = 0; i < 2; ++i) alpha[i] = check(d.children[i], child_path(path, i), open);
    }
    if (!(*alpha[1] == conjugate(*alpha[0])))
      fail(path, CheckError::CoordinationMismatch,
           "subderivations conclude " + to_string(*alpha[0]) + " and " + to_string(*alpha[1]) +
               ", which are not conjugates");
    return conjugate(d.formula);
  }

  SignedFormula check_rule(const Derivation& d, const std::string& path,
                           std::vector<SignedFormula>& open) {
    const ConnectiveSpec* spec = nullptr;
    for (const auto& s : lib_)
      if (s.name == d.connective) spec = &s;
    if (!spec) fail(path, CheckError::UnknownRule, "no connective \"" + d.connective + "\" in the library");
    const RuleSchema* r = spec->find_rule(d.rule);
    if (!r) fail(path, CheckError::UnknownRule, "connective \"" + d.connective + "\" has no rule \"" + d.rule + "\"");

    auto vars = metavariables(*r);
    for (const auto& v : vars)
      if (!d.subst.count(v))
        fail(path, CheckError::SubstitutionMismatch, "no substitution for metavariable " + v);
    for (const auto& [v, f] : d.subst) {
      if (!vars.count(v))
        fail(path, CheckError::SubstitutionMismatch, "rule \"" + d.rule + "\" has no metavariable " + v);
      if (!f.is_closed())
        fail(path, CheckError::SubstitutionMismatch, "substitution for " + v + " is not closed");
    }

    const std::size_t offset = r->major ? 1 : 0;
    if (d.children.size() != r->premises.size() + offset)
      fail(path, CheckError::ShapeMismatch,
           "rule \"" + d.rule + "\" takes " + std::to_string(r->premises.size() + offset) +
               " premises, got " + std::to_string(d.children.size()));

    for (const auto& fr : d.discharges) claim(fr.first, path);

    // Which assumptions each premise may discharge.
    std::vector<std::vector<SignedFormula>> licensed(d.children.size());
    for (std::size_t i = 0; i < r->premises.size(); ++i)
      for (const auto& h : r->premises[i].discharged)
        licensed[i + offset].push_back(instantiate(h, d.subst));
    for (const auto& [label, fs] : d.discharges)
      for (const auto& f : fs) {
        bool ok = false;
        for (const auto& l : licensed)
          for (const auto& x : l) ok = ok || x == f;
        if (!ok)
          fail(path, CheckError::DischargeError,
               "rule \"" + d.rule + "\" cannot discharge " + to_string(f));
      }

    std::vector<SignedFormula> got;
    for (std::size_t i = 0; i < d.children.size(); ++i) {
      std::vector<std::pair<int, std::vector<SignedFormula>>> frames;
      for (const auto& [label, fs] : d.discharges) {
        std::vector<SignedFormula> here;
        for (const auto& f : fs)
          for (const auto& x : licensed[i])
            if (x == f) here.push_back(f);
        frames.emplace_back(label, std::move(here));
      }
      ScopedMany bound(scope_, frames);
      got.push_back(check(d.children[i], child_path(path, i), open));
    }

    if (r->major) {
      auto major = instantiate(*r->major, d.subst);
      if (!(got[0] == major))
        fail(child_path(path, 0), CheckError::MajorMismatch,
             "major premise should be " + to_string(major) + ", found " + to_string(got[0]));
    }

    std::optional<SignedFormula> phi = d.conclusion;
    for (std::size_t i = 0; i < r->premises.size(); ++i) {
      const auto& p = r->premises[i];
      const auto& x = got[i + offset];
      if (p.end.is_arbitrary()) {
        if (!phi) phi = x;
        if (!(*phi == x))
          fail(child_path(path, i + offset), CheckError::ArbitraryMarkInconsistency,
               "side deduction ends in " + to_string(x) + " but the arbitrary formula is " +
                   to_string(*phi));
        continue;
      }
      auto want = instantiate(p.end.formula(), d.subst);
      if (!(want == x))
        fail(child_path(path, i + offset), CheckError::PremiseMismatch,
             "premise should be " + to_string(want) + ", found " + to_string(x));
    }

    if (r->conclusion.is_arbitrary()) {
      if (!phi)
        fail(path, CheckError::ArbitraryMarkInconsistency,
             "rule \"" + d.rule + "\" concludes an arbitrary formula; give (:conclusion ...)");
      if (!phi->formula.is_closed())
        fail(path, CheckError::ShapeMismatch, "conclusion is not a closed formula");
      return *phi;
    }
    auto concl = instantiate(r->conclusion.formula(), d.subst);
    if (d.conclusion && !(*d.conclusion == concl))
      fail(path, CheckError::ShapeMismatch,
           "stated conclusion " + to_string(*d.conclusion) + " differs from " + to_string(concl));
    return concl;
  }

  using Scope = std::map<int, std::vector<SignedFormula>>;

  struct Scoped {
    Scoped(Scope& s, int label, std::vector<SignedFormula> fs) : s_(s), label_(label) {
      auto it = s_.find(label);
      if (it != s_.end()) saved_ = it->second;
      s_[label] = std::move(fs);
    }
    ~Scoped() {
      if (saved_)
        s_[label_] = *saved_;
      else
        s_.erase(label_);
    }
    Scope& s_;
    int label_;
    std::optional<std::vector<SignedFormula>> saved_;
  };

  struct ScopedMany {
    ScopedMany(Scope& s, const std::vector<std::pair<int, std::vector<SignedFormula>>>& frames) {
      for (const auto& [label, fs] : frames) guards_.emplace_back(std::make_unique<Scoped>(s, label, fs));
    }
    std::vector<std::unique_ptr<Scoped>> guards_;
  };

  const std::vector<ConnectiveSpec>& lib_;
  Scope scope_;
  std::set<int> binders_;
};

}  // namespace detail

/// Checks `d` against `lib`. Reports the first offending node in depth-first,
/// left-to-right order; paths are dot-separated child indices from the root "0".
inline CheckOutcome check_derivation(const Derivation& d, const std::vector<ConnectiveSpec>& lib) {
  CheckOutcome out;
  try {
    std::vector<SignedFormula> open;
    out.conclusion = detail::Kernel(lib).check(d, "0", open);
    std::sort(open.begin(), open.end(), PrintedLess{});
    out.open = std::move(open);
    out.valid = true;
  } catch (const detail::KernelFailure& f) {
    out.path = f.path;
    out.error = f.error;
    out.reason = f.reason;
  }
  return out;
}

}  // namespace bilateral

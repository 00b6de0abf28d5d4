// bilateral: command-line front end.
//
//   bilateral check [FILE...] [--builtin NAME...]
//   bilateral complete [FILE | --builtin NAME] --from FAMILY [--type 1|2] [--out PATH]
//   bilateral verify DERIVATION... [--lib FILE-OR-NAME...]
//   bilateral library [--name NAME]
//
// Exit status: 0 success, 1 violation or invalid derivation, 2 usage, parse
// or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bilateral/bilateral.hpp"
#include "report.hpp"

namespace {

using bilateral::ConnectiveSpec;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  bool quiet = false;
};

// Anything that should end the command with exit status 2.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ConnectiveSpec> load_specs(const std::string& path) {
  try {
    return bilateral::parse_spec(read_file(path));
  } catch (const bilateral::ParseError& e) {
    throw UsageError{path + ":" + e.what()};
  }
}

const ConnectiveSpec& lookup_builtin(const std::string& name) {
  if (const auto* s = bilateral::find_builtin(name)) return *s;
  throw UsageError{"no built-in connective named \"" + name + "\""};
}

int type_number(bilateral::RuleType t) { return t == bilateral::RuleType::Type1 ? 1 : 2; }

void emit(const Options& opt, const std::string& text) {
  if (!opt.quiet && !opt.json) std::cout << text;
}

void emit_json(const Options& opt, const json& j) {
  if (opt.json) std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& opt, const std::vector<std::string>& paths,
              const std::vector<std::string>& builtins) {
  if (paths.empty() && builtins.empty()) throw UsageError{"check: give files or --builtin names"};
  std::vector<ConnectiveSpec> specs;
  for (const auto& p : paths)
    for (auto& s : load_specs(p)) specs.push_back(std::move(s));
  for (const auto& b : builtins) specs.push_back(lookup_builtin(b));

  json reports = json::array();
  bool all_ok = true;
  for (const auto& s : specs) {
    auto r = bilateral::check_harmony(s);
    all_ok = all_ok && r.verdict == bilateral::Verdict::Harmonious;
    emit(opt, bilateral::report::text(r));
    reports.push_back(bilateral::report::to_json(r));
  }
  emit_json(opt, {{"reports", reports}});
  return all_ok ? kOk : kViolation;
}

// The type to complete from: declared or visible in the family itself, else
// visible through its partner family.
std::optional<bilateral::RuleType> infer_type(const ConnectiveSpec& spec, bilateral::FamilyKey key,
                                              std::string& why) {
  auto own = bilateral::classify_family(spec, key);
  if (own && own->is_definitely()) return own->type;
  if (own && own->is_ill_formed()) {
    why = own->reason;
    return std::nullopt;
  }
  auto partner = bilateral::classify_family(spec, {key.polarity, bilateral::opposite(key.role)});
  if (partner && partner->is_definitely()) return partner->type;
  why = "type of " + bilateral::to_string(key) + " is ambiguous; pass --type 1 or --type 2";
  return std::nullopt;
}

int cmd_complete(const Options& opt, const std::string& path, const std::string& builtin_name,
                 const std::string& connective, const std::string& from, int type,
                 const std::string& out_path) {
  if (path.empty() == builtin_name.empty())
    throw UsageError{"complete: give exactly one of FILE or --builtin NAME"};
  auto key = bilateral::parse_family_key(from);
  if (!key)
    throw UsageError{"complete: unknown family \"" + from +
                     "\" (use assertive-intro, assertive-elim, rejective-intro or rejective-elim)"};

  ConnectiveSpec spec;
  if (!builtin_name.empty()) {
    spec = lookup_builtin(builtin_name);
  } else {
    auto specs = load_specs(path);
    const ConnectiveSpec* pick = nullptr;
    for (const auto& s : specs)
      if (connective.empty() || s.name == bilateral::normalize_connective(connective)) {
        if (pick) throw UsageError{"complete: file declares several connectives; use --connective"};
        pick = &s;
      }
    if (!pick) throw UsageError{"complete: no matching connective in " + path};
    spec = *pick;
  }
  if (spec.family(*key).empty())
    throw UsageError{"complete: " + spec.name + " has no " + from + " rules"};

  auto fail = [&](const std::string& verdict, const std::string& why) {
    emit(opt, spec.name + ": " + verdict + ": " + why + "\n");
    emit_json(opt, {{"connective", spec.name}, {"from", from}, {"status", verdict}, {"reason", why}});
    return kViolation;
  };

  std::optional<bilateral::RuleType> t;
  if (type == 1) t = bilateral::RuleType::Type1;
  if (type == 2) t = bilateral::RuleType::Type2;
  if (!t) {
    std::string why;
    t = infer_type(spec, *key, why);
    if (!t) return fail("IllFormed", why);
  }

  ConnectiveSpec done;
  try {
    done = bilateral::complete(spec.name, spec.arity, {key->polarity, key->role, *t},
                               spec.family(*key), spec.arg_vars);
  } catch (const bilateral::Error& e) {
    return fail(std::string(bilateral::to_string(e.kind())), e.what());
  }

  std::string dsl = bilateral::print_spec(done);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << dsl)) throw UsageError{out_path + ": cannot write file"};
  } else {
    emit(opt, dsl);
  }
  json families = json::object();
  for (auto k : bilateral::kAllFamilies) {
    json rules = json::array();
    for (const auto& r : bilateral::canonicalize_family(done.family(k), done))
      rules.push_back(bilateral::rule_key(r));
    families[bilateral::to_string(k)] = rules;
  }
  emit_json(opt, {{"connective", done.name},
                  {"from", from},
                  {"type", type_number(*t)},
                  {"status", "ok"},
                  {"families", families},
                  {"dsl", dsl}});
  return kOk;
}

int cmd_verify(const Options& opt, const std::vector<std::string>& paths,
               const std::vector<std::string>& lib_items) {
  std::vector<ConnectiveSpec> lib;
  if (lib_items.empty()) lib = bilateral::builtin_specs();
  for (const auto& item : lib_items) {
    if (const auto* s = bilateral::find_builtin(item)) {
      lib.push_back(*s);
      continue;
    }
    for (auto& s : load_specs(item)) lib.push_back(std::move(s));
  }

  // Parse everything first so a malformed file is a usage error, not a verdict.
  std::vector<bilateral::Derivation> ds;
  for (const auto& p : paths) {
    try {
      ds.push_back(bilateral::parse_derivation(read_file(p)));
    } catch (const bilateral::ParseError& e) {
      throw UsageError{p + ":" + e.what()};
    }
  }

  json results = json::array();
  bool all_valid = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto o = bilateral::check_derivation(ds[i], lib);
    all_valid = all_valid && o.valid;
    emit(opt, bilateral::report::text(paths[i], o));
    results.push_back(bilateral::report::to_json(paths[i], o));
  }
  emit_json(opt, {{"results", results}});
  return all_valid ? kOk : kViolation;
}

int cmd_library(const Options& opt, const std::string& name) {
  std::vector<ConnectiveSpec> specs;
  if (name.empty())
    specs = bilateral::builtin_specs();
  else
    specs.push_back(lookup_builtin(name));
  emit(opt, bilateral::print_specs(specs));
  json list = json::array();
  for (const auto& s : specs)
    list.push_back({{"name", s.name}, {"arity", s.arity}, {"rules", s.rule_count()},
                    {"dsl", bilateral::print_spec(s)}});
  emit_json(opt, {{"connectives", list}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmony checks for bilateral natural-deduction rules"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Write JSON to stdout");
  app.add_flag("--quiet", opt.quiet, "Suppress text output");

  auto* check = app.add_subcommand("check", "Check connectives for harmony")->fallthrough();
  std::vector<std::string> check_paths, check_builtins;
  check->add_option("files", check_paths, "DSL files");
  check->add_option("--builtin", check_builtins, "Built-in connectives")->expected(1, -1);

  auto* complete = app.add_subcommand("complete", "Derive all four rule families from one")->fallthrough();
  std::string c_path, c_builtin, c_connective, c_from, c_out;
  int c_type = 0;
  complete->add_option("file", c_path, "DSL file");
  complete->add_option("--builtin", c_builtin, "Built-in connective");
  complete->add_option("--connective", c_connective, "Connective to use from FILE");
  complete->add_option("--from", c_from, "Given family, e.g. assertive-intro")->required();
  complete->add_option("--type", c_type, "Type of the given family")->check(CLI::IsMember({1, 2}));
  complete->add_option("--out", c_out, "Write the completed DSL here");

  auto* verify = app.add_subcommand("verify", "Check derivation files")->fallthrough();
  std::vector<std::string> v_paths, v_lib;
  verify->add_option("derivations", v_paths, "Derivation files")->required();
  verify->add_option("--lib", v_lib, "Library: DSL files or built-in names (default: all built-ins)")
      ->expected(1, -1);

  auto* library = app.add_subcommand("library", "Print built-in connectives")->fallthrough();
  std::string l_name;
  library->add_option("--name", l_name, "Only this connective");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(opt, check_paths, check_builtins);
    if (*complete) return cmd_complete(opt, c_path, c_builtin, c_connective, c_from, c_type, c_out);
    if (*verify) return cmd_verify(opt, v_paths, v_lib);
    if (*library) return cmd_library(opt, l_name);
  } catch (const UsageError& e) {
    std::cerr << "bilateral: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "bilateral: internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

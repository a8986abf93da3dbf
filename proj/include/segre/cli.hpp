#pragma once

// Command dispatch for the `segre` tool: one command on one problem file,
// rendered as plain text or JSON. Argument parsing lives in tools/segre.cpp.

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "segre/intersect.hpp"
#include "segre/invariants.hpp"
#include "segre/problem.hpp"
#include "segre/render.hpp"
#include "segre/segre_class.hpp"

namespace segre {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitParse = 2, kExitPrecondition = 3, kExitGenericity = 4 };

/// Bad command line (unknown command, wrong number of names).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandOptions {
  std::string command;
  std::vector<std::string> names;
  RunConfig config;
  bool json = false;
  std::optional<int> table_bound;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"projdeg", "segre", "mult", "contains", "component-contains",
                                              "sing-contains", "intersect", "empty", "class", "dim"};
  return names;
}

/// Number of ideal names each command takes.
inline std::size_t command_arity(const std::string& cmd) {
  if (cmd == "intersect") return 3;
  if (cmd == "empty" || cmd == "class" || cmd == "dim") return 1;
  return 2;
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [k, i] : v.integers) witness[k] = bigint_to_json(i);
  for (const auto& [k, c] : v.classes) witness[k] = to_json(c);
  return {{"answer", v.yes() ? "yes" : "no"}, {"witness", witness}};
}

namespace detail {

inline std::string index_label(const MultiIndex& a) {
  std::string s = "g(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

inline void plain_verdict(std::ostream& os, const Verdict& v) {
  os << (v.yes() ? "yes" : "no") << "\n";
  for (const auto& [k, i] : v.integers) os << "  " << k << " = " << i << "\n";
  for (const auto& [k, c] : v.classes) os << "  " << k << " = " << to_plain(c) << "\n";
}

}  // namespace detail

/// Runs one command; errors propagate as exceptions (see run_file for codes).
inline CommandOutput run_command(const CommandOptions& opt, const ProblemFile& pf) {
  const std::string& cmd = opt.command;
  if (std::find(command_names().begin(), command_names().end(), cmd) == command_names().end()) {
    throw UsageError("unknown command '" + cmd + "'");
  }
  if (opt.names.size() != command_arity(cmd)) {
    throw UsageError("command '" + cmd + "' takes " + std::to_string(command_arity(cmd)) + " ideal name(s)");
  }
  const RunConfig& cfg = opt.config;
  const auto& n = opt.names;
  nlohmann::json j{{"command", cmd}, {"seed", cfg.seed}, {"prime", cfg.prime}, {"names", n}};
  std::ostringstream os;
  os << "# seed=" << cfg.seed << " prime=" << cfg.prime << "\n";

  if (cmd == "dim") {
    const int d = dimension_of(pf.scheme(n[0]), cfg);
    j["result"] = d;
    os << "dim " << n[0] << " = " << d << "\n";
  } else if (cmd == "class") {
    const ChowClass c = class_of(pf.scheme(n[0]), cfg);
    j["result"] = to_json(c);
    os << "[" << n[0] << "] = " << to_plain(c) << "\n";
  } else if (cmd == "projdeg") {
    // Default: the full table up to dim Y, so that G is complete.
    const LambdaData d = lambda_data(pf.scheme(n[0]).ideal, pf.scheme(n[1]), cfg, AlphaPolicy::Joint, std::nullopt,
                                     opt.table_bound.value_or(std::numeric_limits<int>::max()));
    nlohmann::json table = nlohmann::json::array();
    os << "alpha = " << to_string(d.alpha) << "\n";
    for (const auto& [a, g] : d.table.entries) {
      table.push_back({{"index", a}, {"g", g}});
      os << detail::index_label(a) << " = " << g << "\n";
    }
    j["result"] = {{"alpha", d.alpha.entries}, {"dim_x", d.dim_x}, {"dim_y", d.dim_y}, {"table", table},
                   {"shadow", to_json(shadow(d.table))}, {"lambda", to_json(d.lambda)}};
    os << "G = " << to_plain(shadow(d.table)) << "\n";
    os << "Lambda = " << to_plain(d.lambda) << "\n";
  } else if (cmd == "segre") {
    const ChowClass s = segre_class(pf.scheme(n[0]).ideal, pf.scheme(n[1]), cfg);
    j["result"] = to_json(s);
    os << "s(" << n[0] << "," << n[1] << ") = " << to_plain(s) << "\n";
  } else if (cmd == "mult") {
    const MultiplicityData m = multiplicity_data(pf.scheme(n[0]), pf.scheme(n[1]), cfg);
    j["result"] = bigint_to_json(m.e);
    os << "e(" << n[0] << "," << n[1] << ") = " << m.e << "\n";
  } else if (cmd == "intersect") {
    const SchemeSpec& y = pf.scheme(n[2]);
    const IntersectionData d = intersection_data(pf.scheme(n[0]), pf.scheme(n[1]), CISpec(pf.ambient, y.ideal.generators), cfg);
    j["result"] = to_json(d.product);
    j["segre_pulled_back"] = to_json(d.segre_pulled);
    j["chern"] = to_json(d.chern);
    os << n[0] << " ._" << n[2] << " " << n[1] << " = " << to_plain(d.product) << "\n";
  } else {
    Verdict v;
    if (cmd == "contains") v = contains(pf.scheme(n[0]), pf.scheme(n[1]), cfg);
    if (cmd == "component-contains") v = component_contained(pf.scheme(n[0]), pf.scheme(n[1]), cfg);
    if (cmd == "sing-contains") v = in_singular_locus(pf.scheme(n[0]), pf.scheme(n[1]), cfg);
    if (cmd == "empty") v = is_empty(pf.scheme(n[0]).ideal, cfg);
    j.update(to_json(v));
    detail::plain_verdict(os, v);
  }
  CommandOutput out;
  out.out = opt.json ? j.dump(2) + "\n" : os.str();
  return out;
}

/// Loads the file and maps failures to exit codes:
/// 2 parse/usage, 3 precondition, 4 genericity exhausted, 1 anything else.
inline CommandOutput run_file(const CommandOptions& opt, const std::string& path) {
  CommandOutput out;
  const std::string echo = "seed=" + std::to_string(opt.config.seed) + " prime=" + std::to_string(opt.config.prime);
  try {
    return run_command(opt, load_problem(path));
  } catch (const ParseError& e) {
    out.exit_code = kExitParse;
    out.err = std::string("parse error: ") + e.what();
  } catch (const UsageError& e) {
    out.exit_code = kExitParse;
    out.err = std::string("usage error: ") + e.what();
  } catch (const PreconditionError& e) {
    out.exit_code = kExitPrecondition;
    out.err = std::string("precondition violated: ") + e.what();
  } catch (const GenericityError& e) {
    out.exit_code = kExitGenericity;
    out.err = std::string("genericity retries exhausted: ") + e.what();
  } catch (const std::exception& e) {
    out.exit_code = kExitFailure;
    out.err = std::string("computation failed: ") + e.what();
  }
  out.err += " (" + echo + ")\n";
  return out;
}

}  // namespace segre

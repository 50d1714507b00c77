#include "csurg/cli.hpp"

#include "csurg/classify.hpp"
#include "csurg/error.hpp"
#include "csurg/expansion.hpp"
#include "csurg/selftest.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace csurg::cli {

namespace {

std::string_view command_name(CommandKind kind) {
  switch (kind) {
    case CommandKind::Expand: return "expand";
    case CommandKind::Invariants: return "invariants";
    case CommandKind::Classify: return "classify";
    case CommandKind::Bennequin: return "bennequin";
    case CommandKind::Selftest: return "selftest";
  }
  return "?";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InconsistentAssumptions:
      return kExitInput;
    case ErrorKind::NonNullhomologousDual:
      return kExitUndefined;
    default:
      return kExitFailure;
  }
}

Json echo(const Command& c) {
  const Options& o = c.options;
  Json j;
  j["name"] = std::string(command_name(c.kind));
  if (!c.input.empty()) j["input"] = c.input.generic_string();
  if (o.chain) j["chain"] = true;
  if (o.dual) j["dual"] = *o.dual;
  if (o.tb) j["tb"] = *o.tb;
  if (o.rot) j["rot"] = *o.rot;
  if (o.chain) j["chi"] = o.chi;
  if (o.n) j["n"] = *o.n;
  if (o.p) j["p"] = *o.p;
  if (o.q) j["q"] = *o.q;
  if (!o.assume_plus_one_tight.empty()) j["assume_plus_one_tight"] = o.assume_plus_one_tight;
  if (c.kind == CommandKind::Expand) j["zigzag_policy"] = o.zigzag_policy;
  if (c.kind == CommandKind::Classify) j["both_orientations"] = o.both_orientations;
  return j;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::ParseError, message);
}

DualKnotInvariants chain_invariants(const Options& o, Json& results) {
  require(o.tb.has_value() && o.n.has_value(), "--chain needs --tb and --n");
  const std::int64_t rot = o.rot.value_or(0);
  results["route"] = "closed-form";
  return dual_invariants_closed_form(*o.tb, rot, o.chi, *o.n);
}

DualKnotInvariants diagram_invariants(const Command& c, Json& results) {
  require(c.options.dual.has_value(), "--dual <component id> is required without --chain");
  const SurgeryDiagram d = parse_diagram_file(c.input);
  results["route"] = "linking-matrix";
  results["dual"] = *c.options.dual;
  return dual_invariants_of(d, *c.options.dual, ZigzagPolicy::parse(c.options.zigzag_policy));
}

std::optional<Rational> query_coefficient(const Options& o) {
  if (o.n) {
    require(!o.p && !o.q, "use either --n or --p/--q");
    require(*o.n >= 1, "--n must be positive");
    return Rational(*o.n);
  }
  if (o.p || o.q) {
    require(o.p && o.q, "--p and --q go together");
    require(*o.p >= 1 && *o.q >= 1, "--p and --q must be positive");
    if (std::gcd(*o.p, *o.q) != 1) {
      throw Error(ErrorKind::NotCoprime, std::to_string(*o.p) + "/" + std::to_string(*o.q) + " is not in lowest terms");
    }
    return Rational(BigInt(*o.p), BigInt(*o.q));
  }
  return std::nullopt;
}

Report execute_single(const Command& c) {
  Report report;
  report.command = echo(c);
  const Options& o = c.options;
  std::set<std::string> citations;
  switch (c.kind) {
    case CommandKind::Expand: {
      const SurgeryDiagram d = parse_diagram_file(c.input);
      report.results = to_json(expand_diagram(d, ZigzagPolicy::parse(o.zigzag_policy)));
      break;
    }
    case CommandKind::Invariants: {
      Json results;
      const DualKnotInvariants inv = o.chain ? chain_invariants(o, results) : diagram_invariants(c, results);
      results["invariants"] = to_json(inv);
      report.results = std::move(results);
      break;
    }
    case CommandKind::Bennequin: {
      Json results;
      const DualKnotInvariants inv = o.chain ? chain_invariants(o, results) : diagram_invariants(c, results);
      const BennequinReport b = bennequin_check(inv);
      const Verdict v = verdict_from_bennequin(inv, b);
      results["invariants"] = to_json(inv);
      results["bennequin"] = to_json(b);
      results["verdict"] = to_json(v);
      if (v.rule != rule::kNone) citations.insert(v.rule);
      report.results = std::move(results);
      break;
    }
    case CommandKind::Classify: {
      const SurgeryDiagram d = parse_diagram_file(c.input);
      ClassifyOptions options;
      for (const auto& id : o.assume_plus_one_tight) {
        d.index_of(id);
        options.facts[id].plus_one_known_tight = true;
      }
      options.query = query_coefficient(o);
      options.both_orientations = o.both_orientations;
      Json verdicts = Json::array();
      for (const auto& v : classify_diagram(d, options)) {
        if (v.rule != rule::kNone) citations.insert(v.rule);
        if (v.has_flag(kConwayCounterexample)) citations.insert(std::string(kConwayCounterexample));
        verdicts.push_back(to_json(v));
      }
      report.results = std::move(verdicts);
      break;
    }
    case CommandKind::Selftest: {
      const SelftestResult st = run_selftest();
      Json checks = Json::array();
      for (const auto& check : st.checks) {
        Json cj;
        cj["name"] = check.name;
        cj["passed"] = check.passed;
        cj["cases"] = check.cases;
        if (!check.passed) cj["detail"] = check.detail;
        checks.push_back(std::move(cj));
      }
      Json results;
      results["passed"] = st.ok();
      results["checks"] = std::move(checks);
      report.results = std::move(results);
      break;
    }
  }
  report.citations.assign(citations.begin(), citations.end());
  return report;
}

bool is_batch(const Command& c) {
  return c.kind != CommandKind::Selftest && !c.options.chain && !c.input.empty() &&
         std::filesystem::is_directory(c.input);
}

std::vector<std::filesystem::path> batch_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

void render(const Json& value, const std::string& indent, std::ostringstream& os);

void render_scalar(const Json& value, std::ostringstream& os) {
  if (value.is_string()) {
    os << value.get<std::string>();
  } else {
    os << value.dump();
  }
}

void render(const Json& value, const std::string& indent, std::ostringstream& os) {
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      os << indent << key << ':';
      if (item.is_structured() && !item.empty()) {
        os << '\n';
        render(item, indent + "  ", os);
      } else {
        os << ' ';
        if (item.is_structured()) {
          os << item.dump();
        } else {
          render_scalar(item, os);
        }
        os << '\n';
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_structured() && !item.empty()) {
        // Arrays of integers (linking rows, signs) stay on one line.
        const bool flat = item.is_array() && std::all_of(item.begin(), item.end(),
                                                         [](const Json& x) { return x.is_primitive(); });
        if (flat) {
          os << indent << "- " << item.dump() << '\n';
        } else {
          os << indent << "-\n";
          render(item, indent + "  ", os);
        }
      } else {
        os << indent << "- ";
        render_scalar(item, os);
        os << '\n';
      }
    }
  } else {
    os << indent;
    render_scalar(value, os);
    os << '\n';
  }
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["results"] = results;
  j["citations"] = citations;
  return j;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  render(report.to_json(), "", os);
  return os.str();
}

Report execute(const Command& command) {
  if (!is_batch(command)) return execute_single(command);
  Report report;
  report.command = echo(command);
  report.results = Json::array();
  std::set<std::string> citations;
  for (const auto& file : batch_files(command.input)) {
    Command one = command;
    one.input = file;
    Json entry;
    entry["file"] = file.filename().generic_string();
    try {
      Report r = execute_single(one);
      entry["results"] = std::move(r.results);
      citations.insert(r.citations.begin(), r.citations.end());
    } catch (const Error& e) {
      entry["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    report.results.push_back(std::move(entry));
  }
  report.citations.assign(citations.begin(), citations.end());
  return report;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = execute(command);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (command.format == Format::Json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << render_text(report);
  }

  int code = kExitOk;
  if (command.kind == CommandKind::Selftest && !report.results.at("passed").get<bool>()) {
    for (const auto& check : report.results.at("checks")) {
      if (!check.at("passed").get<bool>()) {
        err << "error: " << to_string(ErrorKind::SelfTestFailure) << ": " << check.at("name").get<std::string>()
            << ": " << check.at("detail").get<std::string>() << '\n';
        break;
      }
    }
    code = kExitFailure;
  }
  if (is_batch(command)) {
    for (const auto& entry : report.results) {
      if (!entry.contains("error")) continue;
      const std::string kind = entry.at("error").at("kind").get<std::string>();
      int c = kExitFailure;
      if (kind == to_string(ErrorKind::ParseError) || kind == to_string(ErrorKind::ValidationError) ||
          kind == to_string(ErrorKind::InconsistentAssumptions)) {
        c = kExitInput;
      } else if (kind == to_string(ErrorKind::NonNullhomologousDual)) {
        c = kExitUndefined;
      }
      err << "error: " << entry.at("file").get<std::string>() << ": " << entry.at("error").at("message").get<std::string>()
          << '\n';
      code = std::max(code, c);
    }
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact contact surgery calculator: expansions, dual knot invariants, tight/overtwisted verdicts"};
  app.require_subcommand(1);

  Command command;
  std::string format = "text";
  std::string input;
  Options& o = command.options;
  std::optional<std::int64_t> chi;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_chain = [&](CLI::App* sub) {
    sub->add_flag("--chain", o.chain, "Use closed forms for contact (+1/n) surgery instead of a diagram");
    sub->add_option("--tb", o.tb, "Thurston-Bennequin invariant (chain mode)");
    sub->add_option("--rot", o.rot, "Rotation number (chain mode, default 0)");
    sub->add_option("--chi", chi, "Euler characteristic of the Seifert surface (chain mode, default 1)");
    sub->add_option("--n", o.n, "Number of (+1) push-offs, i.e. contact (+1/n) surgery (chain mode)");
    sub->add_option("--dual", o.dual, "Component whose surgery dual is measured");
    sub->add_option("--zigzag-policy", o.zigzag_policy, "all-negative|all-positive|balanced|explicit:+,-,...");
    sub->add_option("input", input, "Diagram JSON file or directory");
    add_format(sub);
  };

  auto* expand = app.add_subcommand("expand", "Expand rational contact surgeries into (+1)/(-1) surgeries");
  expand->add_option("input", input, "Diagram JSON file or directory")->required();
  expand->add_option("--zigzag-policy", o.zigzag_policy, "all-negative|all-positive|balanced|explicit:+,-,...");
  add_format(expand);

  auto* invariants = app.add_subcommand("invariants", "Rational tb, rot and order of a surgery-dual knot");
  add_chain(invariants);

  auto* bennequin = app.add_subcommand("bennequin", "Rational Bennequin bound for a surgery-dual knot");
  add_chain(bennequin);

  auto* classify = app.add_subcommand("classify", "Tight/overtwisted verdicts for a diagram");
  classify->add_option("input", input, "Diagram JSON file or directory")->required();
  classify->add_option("--assume-plus-one-tight", o.assume_plus_one_tight,
                       "Component whose contact (+1) surgery is known to be tight (repeatable)");
  classify->add_option("--n", o.n, "Query contact (+n) surgery on unsurgered components");
  classify->add_option("--p", o.p, "Query contact (+p/q) surgery (numerator)");
  classify->add_option("--q", o.q, "Query contact (+p/q) surgery (denominator)");
  classify->add_option("--both-orientations", o.both_orientations, "Test |rot| instead of rot (default true)");
  add_format(classify);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in identity checks");
  add_format(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (expand->parsed()) command.kind = CommandKind::Expand;
  if (invariants->parsed()) command.kind = CommandKind::Invariants;
  if (bennequin->parsed()) command.kind = CommandKind::Bennequin;
  if (classify->parsed()) command.kind = CommandKind::Classify;
  if (selftest->parsed()) command.kind = CommandKind::Selftest;
  command.input = input;
  command.format = format == "json" ? Format::Json : Format::Text;
  if (chi) o.chi = *chi;

  const bool needs_file = command.kind != CommandKind::Selftest && !o.chain;
  if (needs_file && input.empty()) {
    err << "error: an input diagram is required (or --chain for closed forms)\n";
    return kExitInput;
  }
  return run(command, out, err);
}

}  // namespace csurg::cli

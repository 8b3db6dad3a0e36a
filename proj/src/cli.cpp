#include "weylspecht/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "weylspecht/error.hpp"
#include "weylspecht/report.hpp"

namespace weylspecht {

namespace {

struct Options {
  std::string type;
  std::string j;
  std::string jp;
  std::string field = "Q";
  std::vector<std::string> checks;
  std::string chars;
  bool json = false;
  bool cross_check = false;
  std::size_t limit = kDefaultGroupLimit;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
};

void emit(std::ostream& out, const nlohmann::json& report, bool as_json, std::string text) {
  if (as_json) {
    out << report.dump(2) << '\n';
  } else {
    out << text;
  }
}

Subsystem parse_subsystem(const RootSystem& phi, const std::string& text) {
  const std::vector<Root> roots = parse_root_list(phi, text);
  return closure_from_simples(phi, roots);
}

// One word per line (file) or per ';' (inline). Blank lines and '#' comments
// are skipped.
std::vector<Word> read_words(const std::string& arg) {
  std::string body = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  } else {
    std::replace(body.begin(), body.end(), ';', '\n');
  }
  std::vector<Word> words;
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    words.push_back(parse_word(line));
  }
  return words;
}

int run_roots(const Options& o, std::ostream& out) {
  const RootSystem phi = build_root_system(o.type);
  const auto report = root_system_report(phi);
  emit(out, report, o.json, o.json ? "" : render_roots_text(report));
  return kExitOk;
}

int run_tabloids(const Options& o, std::ostream& out) {
  const RootSystem phi = build_root_system(o.type);
  Subsystem psi = parse_subsystem(phi, o.j);
  Subsystem psi_prime = parse_subsystem(phi, o.jp);
  const WeylGroup group = generate_group(phi, o.limit);
  const TabloidModule module(group, std::move(psi), std::move(psi_prime));
  const auto report = tabloid_report(module);
  emit(out, report, o.json, o.json ? "" : render_tabloids_text(report));
  return kExitOk;
}

int run_specht(const Options& o, std::ostream& out) {
  const RootSystem phi = build_root_system(o.type);
  Subsystem psi = parse_subsystem(phi, o.j);
  Subsystem psi_prime = parse_subsystem(phi, o.jp);
  SpechtOptions so;
  so.field = Field::parse(o.field);
  for (const auto& c : o.checks) {
    if (c == "useful") {
      so.check_useful = true;
    } else if (c == "good") {
      so.check_good = true;
    } else if (c == "probe") {
      so.check_probe = true;
    } else {
      throw ParseError("unknown check '" + c + "' (expected useful, good, probe)");
    }
  }
  so.cross_check = o.cross_check;
  so.probe_trials = o.trials;
  so.probe_seed = o.seed;
  if (!o.chars.empty()) so.character_words = read_words(o.chars);
  for (const Word& w : so.character_words) {
    for (int g : w) {
      if (g > phi.rank()) throw ParseError("generator " + std::to_string(g) + " exceeds the rank");
    }
  }
  const WeylGroup group = generate_group(phi, o.limit);
  const TabloidModule module(group, std::move(psi), std::move(psi_prime));
  const SpechtReport report = specht_report(module, so);
  emit(out, report.json, o.json, o.json ? "" : render_specht_text(report.json));
  return report.checks_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Specht modules for Weyl groups", "weylspecht"};
  app.require_subcommand(1);
  Options o;

  auto* roots = app.add_subcommand("roots", "print a root system");
  roots->add_option("--type", o.type, "Cartan type, e.g. A3, G2, D4")->required();
  roots->add_flag("--json", o.json, "emit JSON");

  auto* tabloids = app.add_subcommand("tabloids", "list the tabloids {wJ}");
  tabloids->add_option("--type", o.type, "Cartan type")->required();
  tabloids->add_option("--J", o.j, "simple system of Psi, e.g. 100,001")->required();
  tabloids->add_option("--Jp", o.jp, "simple system of Psi' (default empty)");
  tabloids->add_option("--limit", o.limit, "group-size limit");
  tabloids->add_flag("--json", o.json, "emit JSON");

  auto* specht = app.add_subcommand("specht", "build S^{Psi,Psi'} and its invariants");
  specht->add_option("--type", o.type, "Cartan type")->required();
  specht->add_option("--J", o.j, "simple system of Psi")->required();
  specht->add_option("--Jp", o.jp, "simple system of Psi'")->required();
  specht->add_option("--field", o.field, "Q or F<p>");
  specht->add_option("--check", o.checks, "useful,good,probe")->delimiter(',');
  specht->add_option("--char", o.chars, "file of words, or inline words separated by ';'");
  specht->add_option("--limit", o.limit, "group-size limit");
  specht->add_option("--trials", o.trials, "probe trials");
  specht->add_option("--seed", o.seed, "probe seed");
  specht->add_flag("--cross-check", o.cross_check, "compare with the span over all of W");
  specht->add_flag("--json", o.json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*roots) return run_roots(o, out);
    if (*tabloids) return run_tabloids(o, out);
    return run_specht(o, out);
  } catch (const GroupLimitError& e) {
    err << "error: " << e.what() << " (raise --limit)\n";
    return kExitGroupLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace weylspecht

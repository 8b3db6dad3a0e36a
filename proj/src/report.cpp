#include "weylspecht/report.hpp"

#include <sstream>

namespace weylspecht {

using nlohmann::json;

namespace {

json root_strings(const RootSystem& phi, std::span<const RootId> ids) {
  json out = json::array();
  for (RootId id : ids) out.push_back(format_root(phi, id));
  return out;
}

json expansion(const TabloidModule& module, const std::map<std::size_t, long>& coeffs) {
  json out = json::array();
  for (const auto& [t, c] : coeffs) {
    out.push_back({{"tabloid", t},
                   {"rep", element_name(module.group(), module.tabloids()[t].rep)},
                   {"display", format_tabloid(module.root_system(), module.tabloids()[t])},
                   {"coefficient", c}});
  }
  return out;
}

std::string expansion_text(const json& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& term : terms) {
    const long c = term["coefficient"].get<long>();
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const long mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += term["display"].get<std::string>();
  }
  return out;
}

}  // namespace

std::string element_name(const WeylGroup& group, ElementId id) {
  const Word& word = group.reduced_word(id);
  return word.empty() ? "e" : format_word(word);
}

json root_system_report(const RootSystem& phi) {
  json report = phi.to_json();
  report["schema"] = kSchemaVersion;
  report["command"] = "roots";
  std::vector<RootId> simples;
  for (int i = 1; i <= phi.rank(); ++i) simples.push_back(phi.simple_root(i));
  std::vector<RootId> positives;
  for (RootId r = 0; r < phi.positive_count(); ++r) positives.push_back(r);
  report["simple_roots"] = root_strings(phi, simples);
  report["positive_roots"] = root_strings(phi, positives);
  return report;
}

json subsystem_report(const Subsystem& psi, const WeylGroup& group) {
  const std::size_t n = normalizer(psi, group).of_subsystem.size();
  return {{"label", psi.label()},
          {"simples", root_strings(psi.ambient(), psi.simples())},
          {"size", psi.size()},
          {"normalizer_order", n},
          {"index", group.order() / n}};
}

json tabloid_report(const TabloidModule& module) {
  const WeylGroup& group = module.group();
  json psi = subsystem_report(module.psi(), group);
  psi["J"] = psi["simples"];
  json psi_prime = subsystem_report(module.psi_prime(), group);
  psi_prime["J'"] = psi_prime["simples"];
  json tabloids = json::array();
  for (std::size_t t = 0; t < module.dimension(); ++t) {
    tabloids.push_back({{"index", t},
                        {"rep", element_name(group, module.tabloids()[t].rep)},
                        {"display", format_tabloid(module.root_system(), module.tabloids()[t])}});
  }
  return {{"schema", kSchemaVersion},
          {"command", "tabloids"},
          {"ambient", module.root_system().label()},
          {"group_order", group.order()},
          {"psi", std::move(psi)},
          {"psi_prime", std::move(psi_prime)},
          {"tabloid_count", module.dimension()},
          {"tabloids", std::move(tabloids)}};
}

SpechtReport specht_report(const TabloidModule& module, const SpechtOptions& options) {
  const WeylGroup& group = module.group();
  const RootSystem& phi = module.root_system();
  SpechtReport out;
  json report = tabloid_report(module);
  report["command"] = "specht";
  report["field"] = options.field.name();

  const bool disjoint = !module.psi().intersects(module.psi_prime());
  report["disjoint"] = disjoint;
  bool useful = false;
  if (disjoint) {
    report["useful_system"] = is_useful_system(group, module.psi(), module.psi_prime());
    useful = is_useful_subsystem(group, module.psi(), module.psi_prime());
  } else {
    report["useful_system"] = false;
  }
  report["useful"] = useful;
  const GoodnessReport goodness = is_good_subsystem(module);
  report["good"] = goodness.good;
  json witnesses = json::array();
  for (ElementId d : goodness.witnesses) witnesses.push_back(element_name(group, d));
  report["good_witnesses"] = std::move(witnesses);

  const auto witness = sign_involution_witness(group, module.psi(), module.psi_prime());
  report["obstruction"] = witness ? json(element_name(group, *witness)) : json(nullptr);

  report["polytabloid"] = expansion(module, polytabloid_coefficients(module, group.identity()));

  const SpechtModuleData s = build_specht_module(module, options.field, options.cross_check);
  json spanning = json::array();
  SubspaceBasis running(module.dimension(), options.field);
  for (const auto& [d, e] : s.generators) {
    if (!running.insert(e)) continue;
    spanning.push_back({{"rep", element_name(group, d)},
                        {"expansion", expansion(module, polytabloid_coefficients(module, d))}});
  }
  report["spanning_generators"] = std::move(spanning);

  const QuotientDimensions dims = quotient_dimension(s);
  report["dim_S"] = dims.specht;
  report["dim_radical"] = dims.radical;
  report["dim_D"] = dims.quotient;

  json characters = json::array();
  for (const Word& word : options.character_words) {
    characters.push_back({{"word", format_word(word)},
                          {"trace", character_value(s, word_to_element(phi, word)).to_string()}});
  }
  report["sample_characters"] = std::move(characters);
  report["character_norm"] =
      options.field.is_rational() && s.dimension() > 0 ? json(character_norm(s).get_str()) : json(nullptr);

  json checks = json::object();
  if (options.check_useful) {
    checks["useful"] = {{"passed", useful}};
    out.checks_passed &= useful;
  }
  if (options.check_good) {
    checks["good"] = {{"passed", goodness.good}, {"reason", goodness.reason}};
    out.checks_passed &= goodness.good;
  }
  if (options.check_probe) {
    const ProbeReport probe = submodule_theorem_probe(s, options.probe_trials, options.probe_seed);
    const bool irreducible = quotient_irreducibility_probe(s);
    checks["probe"] = {{"passed", probe.violations == 0 && irreducible},
                       {"seed", probe.seed},
                       {"trials", probe.trials},
                       {"contains_S", probe.contains_s},
                       {"inside_perp", probe.inside_perp},
                       {"violations", probe.violations},
                       {"violating_trials", probe.violating_trials},
                       {"quotient_irreducible", irreducible}};
    out.checks_passed &= probe.violations == 0 && irreducible;
  }
  if (s.cross_check) {
    checks["cross_check"] = {{"passed", *s.cross_check}};
    out.checks_passed &= *s.cross_check;
  }
  report["checks"] = std::move(checks);
  out.json = std::move(report);
  return out;
}

// ---------------------------------------------------------------------------

std::string render_roots_text(const json& report) {
  std::ostringstream out;
  out << "root system " << report["label"].get<std::string>() << " (rank " << report["rank"]
      << ", " << report["roots"].size() << " roots, " << report["positive_count"] << " positive)\n";
  out << "simple roots:";
  for (const auto& r : report["simple_roots"]) out << ' ' << r.get<std::string>();
  out << "\ngram matrix:\n";
  for (const auto& row : report["gram"]) {
    out << " ";
    for (const auto& x : row) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
    out << '\n';
  }
  out << "positive roots:\n";
  for (const auto& r : report["positive_roots"]) out << "  " << r.get<std::string>() << '\n';
  return out.str();
}

namespace {

void render_subsystems(std::ostringstream& out, const json& report) {
  auto list = [](const json& roots) {
    std::string s = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i > 0) s += ',';
      s += roots[i].get<std::string>();
    }
    return s + "}";
  };
  const json& psi = report["psi"];
  const json& psi_prime = report["psi_prime"];
  out << "ambient " << report["ambient"].get<std::string>() << ", |W| = " << report["group_order"]
      << '\n';
  out << "Psi  = " << psi["label"].get<std::string>() << ", J  = " << list(psi["J"])
      << ", |Psi| = " << psi["size"] << ", |N(Psi)| = " << psi["normalizer_order"]
      << ", index " << psi["index"] << '\n';
  out << "Psi' = " << psi_prime["label"].get<std::string>() << ", J' = " << list(psi_prime["J'"])
      << ", |Psi'| = " << psi_prime["size"] << '\n';
  out << "tabloids: " << report["tabloid_count"] << '\n';
  for (const auto& t : report["tabloids"]) {
    out << "  [" << t["index"] << "] " << t["display"].get<std::string>() << "   d = "
        << t["rep"].get<std::string>() << '\n';
  }
}

}  // namespace

std::string render_tabloids_text(const json& report) {
  std::ostringstream out;
  render_subsystems(out, report);
  return out.str();
}

std::string render_specht_text(const json& report) {
  std::ostringstream out;
  render_subsystems(out, report);
  out << "field " << report["field"].get<std::string>() << '\n';
  out << "useful system: " << (report["useful_system"].get<bool>() ? "yes" : "no")
      << ", useful sub-system: " << (report["useful"].get<bool>() ? "yes" : "no")
      << ", good sub-system: " << (report["good"].get<bool>() ? "yes" : "no") << '\n';
  if (!report["good_witnesses"].empty()) {
    out << "missing tabloids for d =";
    for (const auto& w : report["good_witnesses"]) out << " [" << w.get<std::string>() << ']';
    out << '\n';
  }
  if (!report["obstruction"].is_null()) {
    out << "order-2 element of sign -1 in N(Psi) n W(Psi'): "
        << report["obstruction"].get<std::string>() << " (forces e_{J,J'} = 0)\n";
  }
  out << "e_{J,J'} = " << expansion_text(report["polytabloid"]) << '\n';
  out << "spanning polytabloids:\n";
  for (const auto& g : report["spanning_generators"]) {
    out << "  d = " << g["rep"].get<std::string>() << ": " << expansion_text(g["expansion"]) << '\n';
  }
  out << "dim S = " << report["dim_S"] << ", dim S n S^perp = " << report["dim_radical"]
      << ", dim D = " << report["dim_D"] << '\n';
  if (!report["character_norm"].is_null()) {
    out << "character norm = " << report["character_norm"].get<std::string>() << '\n';
  }
  for (const auto& c : report["sample_characters"]) {
    out << "character at [" << c["word"].get<std::string>() << "] = " << c["trace"].get<std::string>()
        << '\n';
  }
  for (const auto& [name, check] : report["checks"].items()) {
    out << "check " << name << ": " << (check["passed"].get<bool>() ? "passed" : "FAILED");
    if (name == "probe") {
      out << " (" << check["trials"] << " trials, seed " << check["seed"] << ", "
          << check["violations"] << " violations)";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace weylspecht

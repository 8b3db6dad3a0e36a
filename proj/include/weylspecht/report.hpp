#pragma once

// JSON reports emitted by the command-line tool. Every document carries
// "schema": "weyl-specht/1"; the JSON Schemas live in schema/.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylspecht/specht.hpp"
#include "weylspecht/verify.hpp"

namespace weylspecht {

inline constexpr const char* kSchemaVersion = "weyl-specht/1";

// "e" for the identity, otherwise the reduced word "1 2 3".
std::string element_name(const WeylGroup& group, ElementId id);

nlohmann::json root_system_report(const RootSystem& phi);
// {label, simples, size, normalizer_order, index}
nlohmann::json subsystem_report(const Subsystem& psi, const WeylGroup& group);
nlohmann::json tabloid_report(const TabloidModule& module);

struct SpechtOptions {
  Field field;
  bool check_useful = false;
  bool check_good = false;
  bool check_probe = false;
  bool cross_check = false;
  std::vector<Word> character_words;
  std::size_t probe_trials = 50;
  std::uint64_t probe_seed = 1;
};

struct SpechtReport {
  nlohmann::json json;
  // False when any requested check failed.
  bool checks_passed = true;
};

SpechtReport specht_report(const TabloidModule& module, const SpechtOptions& options);

std::string render_roots_text(const nlohmann::json& report);
std::string render_tabloids_text(const nlohmann::json& report);
std::string render_specht_text(const nlohmann::json& report);

}  // namespace weylspecht

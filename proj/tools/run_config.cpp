#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace decoy_lm05::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& path, int line,
                       const std::string& message) {
  throw ConfigError(path + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& path, int line, const std::string& key,
                    const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = first + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    fail(path, line, "expected a number for '" + key + "', got '" + value + "'");
  }
  return out;
}

std::uint64_t parse_u64(const std::string& path, int line,
                        const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = first + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    fail(path, line,
         "expected a non-negative integer for '" + key + "', got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& path, int line, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(path, line,
       "expected true/false for '" + key + "', got '" + value + "'");
}

std::vector<RateFormula> parse_formula_list(const std::string& path, int line,
                                            const std::string& value) {
  std::vector<RateFormula> formulas;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(path, line, "empty formula name in list");
    RateFormula f;
    try {
      f = parse_formula(item);
    } catch (const ConfigError& e) {
      fail(path, line, e.what());
    }
    if (std::find(formulas.begin(), formulas.end(), f) != formulas.end()) {
      fail(path, line, "duplicate formula '" + item + "'");
    }
    formulas.push_back(f);
  }
  if (formulas.empty()) fail(path, line, "empty formula list");
  return formulas;
}

}  // namespace

RateFormula parse_formula(const std::string& name) {
  if (name == "infinite") return RateFormula::Infinite;
  if (name == "finite_a_infinite") return RateFormula::FiniteAInfinite;
  if (name == "finite_a_genuine") return RateFormula::FiniteAGenuine;
  if (name == "finite_b") return RateFormula::FiniteB;
  if (name == "nondecoy") return RateFormula::NonDecoy;
  if (name == "bb84") return RateFormula::Bb84;
  throw ConfigError("unknown formula '" + name +
                    "' (expected one of: infinite, finite_a_infinite, "
                    "finite_a_genuine, finite_b, nondecoy, bb84)");
}

const char* formula_name(RateFormula formula) {
  switch (formula) {
    case RateFormula::Infinite: return "infinite";
    case RateFormula::FiniteAInfinite: return "finite_a_infinite";
    case RateFormula::FiniteAGenuine: return "finite_a_genuine";
    case RateFormula::FiniteB: return "finite_b";
    case RateFormula::NonDecoy: return "nondecoy";
    case RateFormula::Bb84: return "bb84";
  }
  return "?";
}

bool uses_decoys(RateFormula formula) {
  return formula == RateFormula::FiniteAInfinite ||
         formula == RateFormula::FiniteAGenuine ||
         formula == RateFormula::FiniteB;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      fail(path, line, "expected 'key = value', got '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) fail(path, line, "missing key before '='");
    if (value.empty()) fail(path, line, "missing value for '" + key + "'");

    if (key == "alpha") cfg.channel.alpha = parse_double(path, line, key, value);
    else if (key == "eta_ab") cfg.channel.eta_ab = parse_double(path, line, key, value);
    else if (key == "y0") cfg.channel.y0 = parse_double(path, line, key, value);
    else if (key == "e_det") cfg.channel.e_det = parse_double(path, line, key, value);
    else if (key == "e0") cfg.channel.e0 = parse_double(path, line, key, value);
    else if (key == "mu") cfg.intensities.mu = parse_double(path, line, key, value);
    else if (key == "nu1") cfg.intensities.nu1 = parse_double(path, line, key, value);
    else if (key == "nu2") cfg.intensities.nu2 = parse_double(path, line, key, value);
    else if (key == "l_start") cfg.l_start = parse_double(path, line, key, value);
    else if (key == "l_stop") cfg.l_stop = parse_double(path, line, key, value);
    else if (key == "l_step") cfg.l_step = parse_double(path, line, key, value);
    else if (key == "formula") cfg.formulas = parse_formula_list(path, line, value);
    else if (key == "optimize") cfg.optimize = parse_bool(path, line, key, value);
    else if (key == "seed") cfg.seed = parse_u64(path, line, key, value);
    else if (key == "pulses") cfg.pulses = parse_u64(path, line, key, value);
    else fail(path, line, "unknown key '" + key + "'");
  }
}

void validate_config(const RunConfig& cfg, bool sampling) {
  try {
    cfg.channel.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("channel parameters: ") + e.what());
  }
  if (!(cfg.l_step > 0.0)) throw ConfigError("l_step must be > 0");
  if (!(cfg.l_start >= 0.0)) throw ConfigError("l_start must be >= 0");
  if (!(cfg.l_start <= cfg.l_stop)) throw ConfigError("l_start must be <= l_stop");
  if (!(cfg.intensities.mu > 0.0)) throw ConfigError("mu must be > 0");
  if (cfg.formulas.empty()) throw ConfigError("no formula selected");
  for (std::size_t i = 0; i < cfg.formulas.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.formulas.size(); ++j) {
      if (cfg.formulas[i] == cfg.formulas[j]) {
        throw ConfigError(std::string("duplicate formula '") +
                          formula_name(cfg.formulas[i]) + "'");
      }
    }
  }
  const bool needs_decoys =
      sampling || std::any_of(cfg.formulas.begin(), cfg.formulas.end(),
                              [](RateFormula f) { return uses_decoys(f); });
  if (needs_decoys) {
    try {
      cfg.intensities.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("intensities: ") + e.what());
    }
  }
  if (sampling && cfg.pulses == 0) throw ConfigError("pulses must be >= 1");
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
  return std::string(buf, ptr);
}

}  // namespace decoy_lm05::cli

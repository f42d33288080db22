#include "mcsh/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace mcsh::cli {

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::Simulate, "simulate"},
    {Command::GenData, "gen-data"},
    {Command::CheckConstraints, "check-constraints"},
    {Command::CheckEstimates, "check-estimates"},
    {Command::NullformVerify, "nullform-verify"},
    {Command::Converge, "converge"},
    {Command::Norms, "norms"},
};

std::string trim(std::string_view t) {
  const auto a = t.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = t.find_last_not_of(" \t\r");
  return std::string(t.substr(a, b - a + 1));
}

[[noreturn]] void type_error(const std::string& key, const std::string& value, const char* type) {
  throw ConfigError("config key '" + key + "': expected " + type + ", got \"" + value + "\"");
}

double to_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size()) type_error(key, v, "a real number");
  return x;
}

long to_long(const std::string& key, const std::string& v) {
  long x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size()) type_error(key, v, "an integer");
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const long x = to_long(key, v);
  if (x < INT_MIN || x > INT_MAX) type_error(key, v, "a 32-bit integer");
  return static_cast<int>(x);
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size()) type_error(key, v, "a non-negative integer");
  return x;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Key {
  std::function<void(RunConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class T>
Key real_key(T RunConfig::*member) {
  return {[member](RunConfig& c, const std::string& k, const std::string& v) { c.*member = to_double(k, v); },
          [member](const RunConfig& c) { return fmt(c.*member); }};
}

// Ordered as written by write_config.
const std::vector<std::pair<std::string, Key>>& keys() {
  static const std::vector<std::pair<std::string, Key>> k = {
      {"command",
       {[](RunConfig& c, const std::string&, const std::string& v) { c.command = parse_command(v); },
        [](const RunConfig& c) { return std::string(command_name(c.command)); }}},
      {"grid_n",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.grid.n = to_int(k, v); },
        [](const RunConfig& c) { return std::to_string(c.recipe.grid.n); }}},
      {"length",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.grid.length = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.grid.length); }}},
      {"dealias_factor",
       {[](RunConfig& c, const std::string& k, const std::string& v) {
          c.recipe.grid.dealias_factor = to_int(k, v);
        },
        [](const RunConfig& c) { return std::to_string(c.recipe.grid.dealias_factor); }}},
      {"seed",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.seed = to_u64(k, v); },
        [](const RunConfig& c) { return std::to_string(c.recipe.seed); }}},
      {"s_phi",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.s_phi = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.s_phi); }}},
      {"s_a",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.s_a = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.s_a); }}},
      {"s_n",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.s_n = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.s_n); }}},
      {"amp_phi",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.amp_phi = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.amp_phi); }}},
      {"amp_a",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.amp_a = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.amp_a); }}},
      {"amp_n",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.amp_n = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.amp_n); }}},
      {"spectral_cutoff",
       {[](RunConfig& c, const std::string& k, const std::string& v) {
          c.recipe.spectral_cutoff = to_double(k, v);
        },
        [](const RunConfig& c) { return fmt(c.recipe.spectral_cutoff); }}},
      {"e",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.params.e = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.params.e); }}},
      {"kappa",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.params.kappa = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.params.kappa); }}},
      {"v",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.recipe.params.v = to_double(k, v); },
        [](const RunConfig& c) { return fmt(c.recipe.params.v); }}},
      {"t_final", real_key(&RunConfig::t_final)},
      {"dt", real_key(&RunConfig::dt)},
      {"sample_every",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.sample_every = to_int(k, v); },
        [](const RunConfig& c) { return std::to_string(c.sample_every); }}},
      {"potential",
       {[](RunConfig& c, const std::string& k, const std::string& v) {
          if (v == "consistent")
            c.potential = PotentialMode::Consistent;
          else if (v == "paper")
            c.potential = PotentialMode::PaperLiteral;
          else
            type_error(k, v, "'consistent' or 'paper'");
        },
        [](const RunConfig& c) {
          return std::string(c.potential == PotentialMode::Consistent ? "consistent" : "paper");
        }}},
      {"output",
       {[](RunConfig& c, const std::string&, const std::string& v) { c.output = v; },
        [](const RunConfig& c) { return c.output; }}},
      {"data_file",
       {[](RunConfig& c, const std::string&, const std::string& v) { c.data_file = v; },
        [](const RunConfig& c) { return c.data_file; }}},
      {"corpus_file",
       {[](RunConfig& c, const std::string&, const std::string& v) { c.corpus_file = v; },
        [](const RunConfig& c) { return c.corpus_file; }}},
      {"levels",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.levels = to_int(k, v); },
        [](const RunConfig& c) { return std::to_string(c.levels); }}},
      {"samples",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.samples = to_long(k, v); },
        [](const RunConfig& c) { return std::to_string(c.samples); }}},
      {"states",
       {[](RunConfig& c, const std::string& k, const std::string& v) { c.states = to_int(k, v); },
        [](const RunConfig& c) { return std::to_string(c.states); }}},
      {"norm_grids",
       {[](RunConfig& c, const std::string& k, const std::string& v) {
          std::vector<int> out;
          std::stringstream in(v);
          std::string item;
          while (std::getline(in, item, ',')) out.push_back(to_int(k, trim(item)));
          if (out.empty()) type_error(k, v, "a comma-separated list of integers");
          c.norm_grids = std::move(out);
        },
        [](const RunConfig& c) {
          std::string s;
          for (int n : c.norm_grids) s += (s.empty() ? "" : ",") + std::to_string(n);
          return s;
        }}},
      {"constraint_tol", real_key(&RunConfig::constraint_tol)},
  };
  return k;
}

}  // namespace

const char* command_name(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands)
    if (name == n) return cmd;
  throw ConfigError("unknown command \"" + std::string(name) + "\"");
}

void RunConfig::validate() const {
  const auto bad = [](const char* key, const std::string& why) {
    throw ConfigError("config key '" + std::string(key) + "': " + why);
  };
  const auto pow2 = [](int n) { return n >= 8 && (n & (n - 1)) == 0; };
  if (!pow2(recipe.grid.n)) bad("grid_n", "must be a power of two >= 8");
  if (!(recipe.grid.length > 0.0)) bad("length", "must be positive");
  if (recipe.grid.dealias_factor < 1) bad("dealias_factor", "must be >= 1");
  if (!(recipe.params.kappa > 0.0) && !(recipe.params.kappa == 0.0 && recipe.params.e == 0.0))
    bad("kappa", "must be positive (zero only with e = 0)");
  if (!(dt > 0.0)) bad("dt", "must be positive");
  if (!(t_final >= 0.0)) bad("t_final", "must be non-negative");
  if (sample_every < 1) bad("sample_every", "must be >= 1");
  if (recipe.amp_phi < 0.0) bad("amp_phi", "must be non-negative");
  if (recipe.amp_a < 0.0) bad("amp_a", "must be non-negative");
  if (recipe.amp_n < 0.0) bad("amp_n", "must be non-negative");
  if (recipe.spectral_cutoff < 0.0) bad("spectral_cutoff", "must be non-negative");
  if (levels < 2) bad("levels", "must be >= 2");
  if (samples < 1) bad("samples", "must be >= 1");
  if (states < 1) bad("states", "must be >= 1");
  for (int n : norm_grids)
    if (!pow2(n)) bad("norm_grids", "entries must be powers of two >= 8");
  if (!(constraint_tol > 0.0)) bad("constraint_tol", "must be positive");
  if (output.empty()) bad("output", "must not be empty");
}

bool operator==(const RunConfig& a, const RunConfig& b) { return write_config(a) == write_config(b); }

RunConfig parse_config(std::string_view text, const RunConfig& base) {
  RunConfig cfg = base;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(std::string_view(line).substr(0, line.find('#')));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    const auto& ks = keys();
    const auto it = std::find_if(ks.begin(), ks.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == ks.end()) throw ConfigError("unknown config key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError("duplicate config key '" + key + "'");
    it->second.set(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

std::string write_config(const RunConfig& cfg) {
  std::string out;
  for (const auto& [name, key] : keys()) out += name + " = " + key.get(cfg) + "\n";
  return out;
}

}  // namespace mcsh::cli

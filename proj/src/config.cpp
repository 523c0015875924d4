#include "layered/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "layered/errors.hpp"

namespace layered {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "case",  "run_variant", "nx",      "nz",         "n_layers",          "cfl",
      "tf",    "bc_x",        "coupling_form", "omega", "limiter",         "snapshot_interval",
      "output_dir", "epsilon", "r_exponent", "lambda_center"};
  return keys;
}

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::string origin;  // "line N" or "--key"
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string valid_keys_text() {
  std::string out;
  for (const std::string& k : config_keys()) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return "{" + out + "}";
}

void check_key(const Entry& e) {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), e.key) == keys.end()) {
    throw ConfigError(e.origin + ": unknown key '" + e.key + "'; valid keys: " + valid_keys_text());
  }
}

double to_double(const Entry& e) {
  double out = 0.0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError(e.origin + ": key '" + e.key + "' expects a number, got '" + e.value + "'");
  }
  return out;
}

int to_int(const Entry& e) {
  int out = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(e.origin + ": key '" + e.key + "' expects an integer, got '" + e.value + "'");
  }
  return out;
}

template <class Fn>
auto with_origin(const Entry& e, Fn&& fn) {
  try {
    return fn(e.value);
  } catch (const ConfigError& err) {
    throw ConfigError(e.origin + ": " + err.what());
  }
}

void apply(RunConfig& rc, const Entry& e) {
  CaseConfig& c = rc.case_config;
  if (e.key == "case") {
    // Resolved before defaults are applied.
  } else if (e.key == "run_variant") {
    c.run_variant = with_origin(e, [](const std::string& v) { return parse_igw_variant(v); });
  } else if (e.key == "nx") {
    c.nx = to_int(e);
  } else if (e.key == "nz") {
    c.nz = to_int(e);
  } else if (e.key == "n_layers") {
    c.n_layers = to_int(e);
  } else if (e.key == "cfl") {
    c.cfl = to_double(e);
  } else if (e.key == "tf") {
    c.tf = to_double(e);
  } else if (e.key == "bc_x") {
    c.bc_x = with_origin(e, [](const std::string& v) { return parse_boundary(v); });
  } else if (e.key == "coupling_form") {
    c.coupling_form = with_origin(e, [](const std::string& v) { return parse_coupling_form(v); });
  } else if (e.key == "omega") {
    rc.flux.omega = to_double(e);
  } else if (e.key == "limiter") {
    rc.flux.limiter = with_origin(e, [](const std::string& v) { return parse_limiter(v); });
  } else if (e.key == "snapshot_interval") {
    rc.snapshot_interval = to_double(e);
  } else if (e.key == "output_dir") {
    if (e.value.empty()) throw ConfigError(e.origin + ": output_dir must not be empty");
    c.output_dir = e.value;
  } else if (e.key == "epsilon") {
    rc.weno.epsilon = to_double(e);
  } else if (e.key == "r_exponent") {
    rc.weno.r_exponent = to_double(e);
  } else if (e.key == "lambda_center") {
    rc.weno.lambda_center = to_double(e);
  }
}

std::vector<Entry> parse_lines(std::string_view text) {
  std::vector<Entry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string origin = "line " + std::to_string(number);
    if (eq == std::string::npos) {
      throw ConfigError(origin + ": expected 'key = value', got '" + body + "'");
    }
    Entry e{trim(std::string_view(body).substr(0, eq)), trim(std::string_view(body).substr(eq + 1)),
            origin};
    check_key(e);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(std::string_view text, const std::vector<KeyValue>& overrides) {
  std::vector<Entry> entries = parse_lines(text);
  for (const auto& [key, value] : overrides) {
    Entry e{key, value, "--" + key};
    check_key(e);
    entries.push_back(std::move(e));
  }
  CaseId id = CaseId::bubble;
  for (const Entry& e : entries) {
    if (e.key == "case") {
      id = with_origin(e, [](const std::string& v) { return parse_case_id(v); });
    }
  }
  RunConfig rc;
  rc.case_config = default_config(id);
  for (const Entry& e : entries) apply(rc, e);

  if (rc.snapshot_interval < 0.0) throw ConfigError("snapshot_interval must be >= 0");
  if (rc.snapshot_interval > 0.0) {
    auto& times = rc.case_config.snapshot_times;
    times.clear();
    for (long k = 0;; ++k) {
      const double t = static_cast<double>(k) * rc.snapshot_interval;
      if (t > rc.case_config.tf + 1e-9) break;
      times.push_back(t);
    }
  }
  rc.case_config.validate();
  rc.weno.validate();
  rc.flux.validate();
  return rc;
}

RunConfig parse_config_file(const std::filesystem::path& path,
                            const std::vector<KeyValue>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), overrides);
}

std::string format_config(const RunConfig& rc) {
  const CaseConfig& c = rc.case_config;
  std::ostringstream out;
  out.precision(17);
  out << "case = " << to_string(c.case_id) << '\n'
      << "run_variant = " << to_string(c.run_variant) << '\n'
      << "nx = " << c.nx << '\n'
      << "nz = " << c.nz << '\n'
      << "n_layers = " << c.n_layers << '\n'
      << "cfl = " << c.cfl << '\n'
      << "tf = " << c.tf << '\n'
      << "bc_x = " << to_string(c.bc_x) << '\n'
      << "coupling_form = " << to_string(c.coupling_form) << '\n'
      << "omega = " << rc.flux.omega << '\n'
      << "limiter = " << to_string(rc.flux.limiter) << '\n'
      << "snapshot_interval = " << rc.snapshot_interval << '\n'
      << "output_dir = " << c.output_dir << '\n'
      << "epsilon = " << rc.weno.epsilon << '\n'
      << "r_exponent = " << rc.weno.r_exponent << '\n'
      << "lambda_center = " << rc.weno.lambda_center << '\n';
  return out.str();
}

}  // namespace layered

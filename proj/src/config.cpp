#include "irsopt/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace irsopt {

namespace {

using nlohmann::json;

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) {
    throw ConfigError("'" + key + "' must be an integer");
  }
  return v.get<int>();
}

using Setter = std::function<void(ScenarioSpec&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"num_tx_antennas", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.num_tx_antennas = as_int(v, k);
       }},
      {"num_irs_elements", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.num_irs_elements = as_int(v, k);
       }},
      {"tx_power_dbm", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.tx_power_dbm = as_number(v, k);
       }},
      {"noise_power_dbm", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.noise_power_dbm = as_number(v, k);
       }},
      {"pathloss_exponent", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.pathloss_exponent = as_number(v, k);
       }},
      {"ref_distance_m", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.ref_distance_m = as_number(v, k);
       }},
      {"ref_loss_db", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.ref_loss_db = as_number(v, k);
       }},
      {"d_ap_irs_m", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.d_ap_irs_m = as_number(v, k);
       }},
      {"d_ap_user_m", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.d_ap_user_m = as_number(v, k);
       }},
      {"d_irs_user_m", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.base.d_irs_user_m = as_number(v, k);
       }},
      {"sweep_kind", [](ScenarioSpec& s, const json& v, const std::string& k) {
         if (!v.is_string()) throw ConfigError("'" + k + "' must be a string");
         s.sweep_kind = parse_sweep_kind(v.get<std::string>());
       }},
      {"sweep_values", [](ScenarioSpec& s, const json& v, const std::string& k) {
         if (!v.is_array()) throw ConfigError("'" + k + "' must be an array");
         s.sweep_values.clear();
         for (const auto& e : v) s.sweep_values.push_back(as_number(e, k));
       }},
      {"trials", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.trials = as_int(v, k);
       }},
      {"base_seed", [](ScenarioSpec& s, const json& v, const std::string& k) {
         if (!v.is_number_unsigned()) {
           throw ConfigError("'" + k + "' must be a non-negative integer");
         }
         s.base_seed = v.get<std::uint64_t>();
       }},
      {"algorithms", [](ScenarioSpec& s, const json& v, const std::string& k) {
         if (!v.is_array()) throw ConfigError("'" + k + "' must be an array");
         std::string joined;
         for (const auto& e : v) {
           if (!e.is_string()) throw ConfigError("'" + k + "' entries must be strings");
           if (!joined.empty()) joined += ',';
           joined += e.get<std::string>();
         }
         s.algorithms = parse_algorithm_list(joined);
       }},
      {"eps", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.eps = as_number(v, k);
       }},
      {"max_iter", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.max_iter = as_int(v, k);
       }},
      {"distance_sum_m", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.distance_sum_m = as_number(v, k);
       }},
      {"fixed_count", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.fixed_count = as_int(v, k);
       }},
      {"grid_points", [](ScenarioSpec& s, const json& v, const std::string& k) {
         s.grid_points = as_int(v, k);
       }},
  };
  return table;
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const char* required : {"sweep_kind", "sweep_values"}) {
    if (!doc.contains(required)) {
      throw ConfigError(std::string("missing required key '") + required + "'");
    }
  }

  ScenarioSpec spec;
  spec.algorithms = {Algorithm::FixedPoint, Algorithm::Rcg};
  for (const auto& [key, value] : doc.items()) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown key '" + key + "'");
    try {
      it->second(spec, value, key);
    } catch (const json::exception& e) {
      throw ConfigError("bad value for '" + key + "': " + e.what());
    }
  }
  spec.validate();
  return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream buf;
  buf << is.rdbuf();
  if (is.bad()) throw IoError("read failed for '" + path.string() + "'");
  return parse_scenario(buf.str());
}

}  // namespace irsopt

#include "wcx/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "wcx/errors.hpp"

namespace wcx {

using nlohmann::json;

namespace {

std::string subset_key(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

std::vector<std::string> split_slash(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = key.find('/', start);
    parts.push_back(key.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

long long positive_int(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 1) throw InputError("config: '" + key + "' must be a positive integer");
  return v.get<long long>();
}

}  // namespace

std::vector<CosetToken> RunConfig::coset_tokens(int r, const Subset& s) const {
  std::vector<CosetToken> out;
  for (auto& [key, card] : coset_cardinalities)
    if (std::get<0>(key) == r && std::get<1>(key) == s) out.push_back({std::get<2>(key), card});
  if (out.empty()) out.push_back({"p0", strict ? std::nullopt : std::optional<long long>(1)});
  return out;
}

std::vector<std::string> RunConfig::orbit_labels(const Subset& s) const {
  std::vector<std::string> out;
  for (auto& [key, count] : orbit_tokens)
    if (key.first == s) out.push_back(key.second);
  if (out.empty()) out.emplace_back("g0");
  return out;
}

std::optional<Rational> RunConfig::euler_factor(const Subset& t, const std::string& isotype) const {
  if (auto it = euler_factors.find({t, isotype}); it != euler_factors.end()) return it->second;
  if (auto it = euler_factors.find({t, "*"}); it != euler_factors.end()) return it->second;
  return std::nullopt;
}

std::string RunConfig::canonical() const {
  json j = json::object();
  j["strict"] = strict;
  j["format"] = format == OutputFormat::Json ? "json" : "tsv";
  for (auto& [key, card] : coset_cardinalities)
    j["coset/" + std::to_string(std::get<0>(key)) + "/" + subset_key(std::get<1>(key)) + "/" + std::get<2>(key)] = card;
  for (auto& [key, value] : euler_factors) j["euler/" + subset_key(key.first) + "/" + key.second] = to_string(value);
  for (auto& [key, count] : orbit_tokens) j["orbit/" + subset_key(key.first) + "/" + key.second] = count;
  return j.dump();
}

std::string RunConfig::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

RunConfig RunConfig::parse(const std::string& text, bool force_strict) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config: top level must be an object");
  RunConfig cfg;
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) throw InputError("config: 'strict' must be a boolean");
    cfg.strict = j["strict"].get<bool>();
  }
  cfg.strict = cfg.strict || force_strict;
  for (auto& [key, value] : j.items()) {
    if (key == "strict") continue;
    if (key == "format") {
      const auto f = value.is_string() ? value.get<std::string>() : std::string();
      if (f == "json") cfg.format = OutputFormat::Json;
      else if (f == "tsv") cfg.format = OutputFormat::Tsv;
      else throw InputError("config: 'format' must be \"json\" or \"tsv\"");
      continue;
    }
    const auto parts = split_slash(key);
    if (parts[0] == "coset" && parts.size() == 4) {
      const int r = std::stoi(parts[1]);
      cfg.coset_cardinalities[{r, parse_subset(parts[2]), parts[3]}] = positive_int(value, key);
    } else if (parts[0] == "euler" && parts.size() == 3) {
      Rational v = value.is_string() ? parse_rational(value.get<std::string>())
                   : value.is_number_integer() ? Rational(value.get<long long>())
                   : throw InputError("config: '" + key + "' must be an integer or a \"p/q\" string");
      cfg.euler_factors[{parse_subset(parts[1]), parts[2]}] = v;
    } else if (parts[0] == "orbit" && parts.size() == 3) {
      cfg.orbit_tokens[{parse_subset(parts[1]), parts[2]}] = positive_int(value, key);
    } else if (cfg.strict) {
      throw InputError("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path, bool force_strict) {
  std::ifstream in(path);
  if (!in) throw InputError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), force_strict);
}

}  // namespace wcx

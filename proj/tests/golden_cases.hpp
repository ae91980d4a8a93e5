#pragma once

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "extatica/cli.hpp"

namespace extatica::golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  std::map<std::string, std::string> env;
  int exit = 0;
  /// Expected stdout, for successful runs.
  std::optional<std::string> stdout_text;
};

struct Outcome {
  int exit = 0;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<Case> load_cases(const std::string& dir) {
  auto doc = nlohmann::json::parse(read_file(dir + "/cases.json"));
  std::vector<Case> cases;
  for (const auto& c : doc) {
    Case k;
    k.name = c.at("name");
    k.args = c.at("args").get<std::vector<std::string>>();
    if (c.contains("env")) k.env = c["env"].get<std::map<std::string, std::string>>();
    k.exit = c.at("exit");
    if (k.exit == 0) {
      const std::string file = c.value("golden", k.name);
      k.stdout_text = read_file(dir + "/" + file + ".json");
    }
    cases.push_back(std::move(k));
  }
  return cases;
}

inline Outcome run_case(const Case& c) {
  ::unsetenv("EXTATICA_MAX_DIM");
  for (const auto& [key, value] : c.env) ::setenv(key.c_str(), value.c_str(), 1);
  std::ostringstream out, err;
  Outcome o;
  o.exit = cli::run(c.args, out, err);
  for (const auto& kv : c.env) ::unsetenv(kv.first.c_str());
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace extatica::golden

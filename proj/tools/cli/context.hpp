#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace powsec::cli {

using Json = nlohmann::ordered_json;

// Bad flags, config or parameter values; maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldType { Real, Integer, Text, Flag };

struct Field {
  std::string key;  // flag is --key
  FieldType type = FieldType::Real;
  Json fallback;  // null: no default
  std::string help;
};

struct Context {
  std::string command;
  Json config;  // effective values after defaults < config file < flags
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> out_dir;
  std::string format = "json";
  Json inputs = Json::object();  // path -> sha256
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  bool has(const std::string& key) const;
  double real(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::string text(const std::string& key) const;
  bool flag(const std::string& key) const;
  std::optional<double> optional_real(const std::string& key) const;

  double required_real(const std::string& key) const;
  std::string required_text(const std::string& key) const;

  // Records the content hash of an input file and returns its path.
  std::string input(const std::string& path);

  // Report skeleton: command, version, effective config, seed, input hashes.
  Json header() const;

  // Writes <out_dir>/<name> or, without --out, prints to stdout.
  void emit(const std::string& name, const std::string& content) const;
  // Always a file; out_dir defaults to the working directory.
  std::filesystem::path write(const std::string& name, const std::string& content) const;
};

std::string dump(const Json& j);
std::string number(double v);
// "key,value" rows from a flat object.
std::string flat_csv(const Json& j);

std::vector<Field> equilibrium_fields();
std::vector<Field> attack_fields();
std::vector<Field> simulate_fields();
std::vector<Field> ingest_fields();
std::vector<Field> unitroot_fields();
std::vector<Field> ardl_fields();
std::vector<Field> report_fields();

int cmd_equilibrium(Context& ctx);
int cmd_attack(Context& ctx);
int cmd_simulate(Context& ctx);
int cmd_ingest(Context& ctx);
int cmd_unitroot(Context& ctx);
int cmd_ardl(Context& ctx);
int cmd_report(Context& ctx);

std::vector<std::string> split_list(const std::string& text);

}  // namespace powsec::cli

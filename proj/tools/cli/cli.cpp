#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "context.hpp"
#include "powsec/data/csv.hpp"
#include "powsec/error.hpp"
#include "powsec/hash.hpp"

namespace powsec::cli {

bool Context::has(const std::string& key) const { return config.contains(key) && !config[key].is_null(); }

double Context::real(const std::string& key) const { return config.at(key).get<double>(); }

std::int64_t Context::integer(const std::string& key) const { return config.at(key).get<std::int64_t>(); }

std::string Context::text(const std::string& key) const { return config.at(key).get<std::string>(); }

bool Context::flag(const std::string& key) const { return has(key) && config.at(key).get<bool>(); }

std::optional<double> Context::optional_real(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return real(key);
}

double Context::required_real(const std::string& key) const {
  if (!has(key)) throw UsageError("--" + key + " is required");
  return real(key);
}

std::string Context::required_text(const std::string& key) const {
  if (!has(key) || text(key).empty()) throw UsageError("--" + key + " is required");
  return text(key);
}

std::string Context::input(const std::string& path) {
  if (!std::filesystem::exists(path)) throw DataError("input '" + path + "' does not exist");
  inputs[path] = sha256_file(path);
  return path;
}

Json Context::header() const {
  Json j;
  j["command"] = command;
  j["version"] = "0.1.0";
  j["config"] = config;
  j["seed"] = seed;
  j["inputs"] = inputs;
  return j;
}

void Context::emit(const std::string& name, const std::string& content) const {
  if (out_dir) {
    write(name, content);
  } else {
    *out << content;
  }
}

std::filesystem::path Context::write(const std::string& name, const std::string& content) const {
  const std::filesystem::path dir = out_dir.value_or(".");
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write '" + path.string() + "'");
  f << content;
  return path;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string flat_csv(const Json& j) {
  std::ostringstream os;
  os << "quantity,value\n";
  for (const auto& [key, v] : j.items()) {
    os << key << ',';
    if (v.is_number_float()) {
      os << number(v.get<double>());
    } else if (v.is_string()) {
      os << v.get<std::string>();
    } else if (!v.is_null()) {
      os << v.dump();
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  for (auto& s : data::split_line(text, ',')) {
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

namespace {

struct Subcommand {
  std::string name;
  std::string help;
  std::vector<Field> fields;
  std::function<int(Context&)> handler;
  CLI::App* app = nullptr;
  std::vector<std::string> values;
  std::vector<CLI::Option*> options;
  std::unique_ptr<bool[]> flags;
};

Json convert(const Field& f, const std::string& text) {
  switch (f.type) {
    case FieldType::Real: {
      double v = 0;
      if (!data::parse_double(text, v)) throw UsageError("--" + f.key + ": '" + text + "' is not a number");
      return v;
    }
    case FieldType::Integer: {
      long long v = 0;
      if (!data::parse_int(text, v)) throw UsageError("--" + f.key + ": '" + text + "' is not an integer");
      return static_cast<std::int64_t>(v);
    }
    case FieldType::Text: return text;
    case FieldType::Flag: return true;
  }
  return nullptr;
}

void check_type(const Field& f, const Json& v) {
  const bool ok = v.is_null() || (f.type == FieldType::Real && v.is_number()) ||
                  (f.type == FieldType::Integer && v.is_number_integer()) ||
                  (f.type == FieldType::Text && v.is_string()) || (f.type == FieldType::Flag && v.is_boolean());
  if (!ok) throw UsageError("config key '" + f.key + "' has the wrong type");
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || text[0] == '-') throw UsageError("--seed must be a non-negative integer");
  std::uint64_t u = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw UsageError("--seed must be a non-negative integer");
    const std::uint64_t next = u * 10 + static_cast<std::uint64_t>(c - '0');
    if (next / 10 != u) throw UsageError("--seed out of range");
    u = next;
  }
  return u;
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw UsageError("config '" + path + "' must be a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw UsageError("config '" + path + "': " + e.what());
  }
}

int dispatch(std::vector<Subcommand>& subs, const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Proof-of-work security economics: equilibrium, attacks, simulation and time-series estimation",
               "powsec"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, out_text, seed_text, format_text;
  auto* config_opt = app.add_option("--config", config_path, "JSON config file; flags override it");
  auto* out_opt = app.add_option("--out", out_text, "output directory");
  auto* seed_opt = app.add_option("--seed", seed_text, "random seed (unsigned 64-bit)");
  auto* format_opt =
      app.add_option("--format", format_text, "output format")->check(CLI::IsMember({"csv", "json"}));

  for (auto& s : subs) {
    s.app = app.add_subcommand(s.name, s.help);
    s.values.resize(s.fields.size());
    s.flags = std::make_unique<bool[]>(s.fields.size());
    for (std::size_t i = 0; i < s.fields.size(); ++i) {
      const Field& f = s.fields[i];
      std::string help = f.help;
      if (!f.fallback.is_null()) help += " (default " + f.fallback.dump() + ")";
      s.flags[i] = false;
      s.options.push_back(f.type == FieldType::Flag ? s.app->add_flag("--" + f.key, s.flags[i], help)
                                                    : s.app->add_option("--" + f.key, s.values[i], help));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  Subcommand* chosen = nullptr;
  for (auto& s : subs) {
    if (s.app->parsed()) chosen = &s;
  }

  Context ctx;
  ctx.command = chosen->name;
  ctx.out = &out;
  ctx.err = &err;

  std::set<std::string> known;
  for (const auto& s : subs) {
    known.insert(s.name);
    for (const auto& f : s.fields) known.insert(f.key);
  }
  auto field_of = [&](const std::string& key) -> const Field* {
    for (const auto& f : chosen->fields) {
      if (f.key == key) return &f;
    }
    return nullptr;
  };

  for (const auto& f : chosen->fields) ctx.config[f.key] = f.fallback;

  Json file;
  if (*config_opt) {
    file = load_config(config_path);
    ctx.inputs[config_path] = sha256_file(config_path);
  }
  auto apply = [&](const Json& obj) {
    for (const auto& [key, v] : obj.items()) {
      if (key == "seed" || key == "out" || key == "format") continue;
      if (const Field* f = field_of(key)) {
        check_type(*f, v);
        ctx.config[key] = v;
      } else if (!known.contains(key)) {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  };
  apply(file);
  if (file.contains(chosen->name)) {
    if (!file[chosen->name].is_object()) throw UsageError("config section '" + chosen->name + "' must be an object");
    apply(file[chosen->name]);
  }

  for (std::size_t i = 0; i < chosen->fields.size(); ++i) {
    if (chosen->options[i]->count() > 0) {
      ctx.config[chosen->fields[i].key] = convert(chosen->fields[i], chosen->values[i]);
    }
  }

  if (*seed_opt) {
    ctx.seed = parse_seed(seed_text);
  } else if (file.contains("seed")) {
    if (!file["seed"].is_number_unsigned()) throw UsageError("config key 'seed' must be a non-negative integer");
    ctx.seed = file["seed"].get<std::uint64_t>();
  }
  if (*out_opt) {
    ctx.out_dir = out_text;
  } else if (file.contains("out")) {
    if (!file["out"].is_string()) throw UsageError("config key 'out' must be a string");
    ctx.out_dir = file["out"].get<std::string>();
  }
  if (*format_opt) {
    ctx.format = format_text;
  } else if (file.contains("format")) {
    if (!file["format"].is_string()) throw UsageError("config key 'format' must be a string");
    ctx.format = file["format"].get<std::string>();
  }
  if (ctx.format != "csv" && ctx.format != "json") throw UsageError("format must be csv or json");

  return chosen->handler(ctx);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<Subcommand> subs;
  auto add = [&](std::string name, std::string help, std::vector<Field> fields, int (*handler)(Context&)) {
    Subcommand s;
    s.name = std::move(name);
    s.help = std::move(help);
    s.fields = std::move(fields);
    s.handler = handler;
    subs.push_back(std::move(s));
  };
  add("equilibrium", "per-miner and network capacity, free-entry miner count, elasticities", equilibrium_fields(),
      cmd_equilibrium);
  add("attack", "majority-attack cost, gain and incentive compatibility", attack_fields(), cmd_attack);
  add("simulate", "agent-based mining simulation", simulate_fields(), cmd_simulate);
  add("ingest", "block dump and external series to the daily dataset", ingest_fields(), cmd_ingest);
  add("unitroot", "ADF, Phillips-Perron and DF-GLS tests", unitroot_fields(), cmd_unitroot);
  add("ardl", "ARDL order selection, bounds test, error-correction model and diagnostics", ardl_fields(),
      cmd_ardl);
  add("report", "descriptive statistics of a dataset", report_fields(), cmd_report);

  try {
    return dispatch(subs, args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "error: invalid " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace powsec::cli

#include "advlab/io.hpp"

#include <fstream>

#include "advlab/errors.hpp"

namespace advlab {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ConfigError(name, "missing");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(name, e.what());
  }
}

template <typename T>
T field_or(const json& j, const char* name, T fallback) {
  return j.contains(name) ? field<T>(j, name) : fallback;
}

Word word_field(const std::string& text, const char* name) {
  try {
    return Word::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(name, e.what());
  }
}

template <typename Parse>
auto parsed(const char* name, Parse&& parse) {
  try {
    return parse();
  } catch (const SyntaxError& e) {
    throw ConfigError(name, e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("path", "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

Language language_from_json(const json& j) {
  const auto name = field<std::string>(j, "name");
  const auto horizon = field<std::size_t>(j, "horizon");
  const auto kind = field<std::string>(j, "kind");
  if (kind != "explicit" && kind != "predicate" && kind != "np") {
    throw ConfigError("kind", "expected explicit, predicate or np, got '" + kind + "'");
  }
  if (kind == "explicit") {
    std::vector<Word> members;
    for (const auto& text : field<std::vector<std::string>>(j, "members")) {
      members.push_back(word_field(text, "members"));
    }
    try {
      return Language::explicit_set(name, horizon, std::move(members));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("members", e.what());
    }
  }
  const auto text = field<std::string>(j, "expr");
  const Expr expr = parsed("expr", [&] { return parse_expr(text); });
  if (kind == "predicate") {
    try {
      return Language::predicate(name, horizon, expr);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("expr", e.what());
    }
  }
  const auto cert = field<std::string>(j, "cert_len");
  const Poly cert_len = parsed("cert_len", [&] { return parse_poly(cert); });
  return Language::np_verifier(name, horizon, NpMachine{expr, cert_len});
}

json language_to_json(const Language& L) {
  json j;
  j["name"] = L.name();
  j["horizon"] = L.horizon();
  switch (L.kind()) {
    case LanguageKind::Explicit: {
      j["kind"] = "explicit";
      std::vector<std::string> members;
      for (const Word& w : L.explicit_members()) members.push_back(w.str());
      j["members"] = members;
      return j;
    }
    case LanguageKind::Predicate:
      j["kind"] = "predicate";
      j["expr"] = print_expr(*L.expression());
      return j;
    case LanguageKind::NpVerifier:
      j["kind"] = "np";
      j["expr"] = print_expr(L.machine()->verifier);
      j["cert_len"] = L.machine()->cert_len.str();
      return j;
    case LanguageKind::Derived:
      break;
  }
  throw std::invalid_argument("derived language '" + L.name() + "' has no file form");
}

Language load_language(const std::string& path) { return language_from_json(read_json_file(path)); }

json advice_family_to_json(const AdviceFamily& f, std::size_t n_max) {
  json j;
  j["p"] = f.length().str();
  json table = json::object();
  for (std::size_t n = 0; n <= n_max; ++n) table[std::to_string(n)] = f.advice(n).str();
  j["table"] = table;
  return j;
}

AdviceFamily advice_family_from_json(const json& j) {
  const auto text = field<std::string>(j, "p");
  const Poly length = parsed("p", [&] { return parse_poly(text); });
  std::map<std::size_t, Word> table;
  const json entries = field<json>(j, "table");
  if (!entries.is_object()) throw ConfigError("table", "expected an object keyed by length");
  for (const auto& [key, value] : entries.items()) {
    std::size_t n = 0;
    try {
      n = std::stoul(key);
    } catch (const std::exception&) {
      throw ConfigError("table", "key '" + key + "' is not a length");
    }
    if (!value.is_string()) throw ConfigError("table", "entry '" + key + "' is not a string");
    table.emplace(n, word_field(value.get<std::string>(), "table"));
  }
  try {
    return AdviceFamily::from_table(length, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("table", e.what());
  }
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  ExperimentConfig cfg;
  cfg.experiment = parse_experiment(field<std::string>(j, "experiment"));
  cfg.seed = field_or<std::uint64_t>(j, "seed", cfg.seed);
  cfg.n_max = field_or<std::size_t>(j, "n_max", cfg.n_max);
  cfg.trials = field_or<std::uint64_t>(j, "trials", cfg.trials);
  cfg.sparsity_cap = field_or<std::string>(j, "sparsity_cap", cfg.sparsity_cap);
  cfg.output = field_or<std::string>(j, "output", cfg.output);
  cfg.summary = field_or<std::string>(j, "summary", cfg.summary);
  cfg.timing = field_or<bool>(j, "timing", cfg.timing);
  if (j.contains("cert_len")) cfg.cert_len = field<std::string>(j, "cert_len");
  cfg.validate();
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["experiment"] = experiment_name(cfg.experiment);
  j["seed"] = cfg.seed;
  j["n_max"] = cfg.n_max;
  j["trials"] = cfg.trials;
  j["sparsity_cap"] = cfg.sparsity_cap;
  j["output"] = cfg.output;
  j["summary"] = cfg.summary;
  j["timing"] = cfg.timing;
  if (cfg.cert_len) j["cert_len"] = *cfg.cert_len;
  return json(j);
}

ExperimentConfig load_config(const std::string& path) {
  return config_from_json(read_json_file(path));
}

json record_to_json(const CompiledRunRecord& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input.str();
  j["answer_direct"] = r.answer_direct;
  j["answer_compiled"] = r.answer_compiled;
  j["queries_by_oracle"] = r.queries_by_oracle;
  j["budget_ok"] = r.budget_ok;
  return json(j);
}

}  // namespace advlab

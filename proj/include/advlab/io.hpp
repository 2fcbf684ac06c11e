#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "advlab/advice.hpp"
#include "advlab/harness.hpp"
#include "advlab/language.hpp"
#include "advlab/reductions.hpp"

namespace advlab {

/// {name, horizon, kind: "explicit"|"predicate"|"np", members | expr, cert_len}.
/// Throws ConfigError naming the offending field.
Language language_from_json(const nlohmann::json& j);
/// Derived languages have no file form; throws std::invalid_argument.
nlohmann::json language_to_json(const Language& L);
Language load_language(const std::string& path);

/// {p, table: {"n": bits}} for n = 0..n_max.
nlohmann::json advice_family_to_json(const AdviceFamily& f, std::size_t n_max);
AdviceFamily advice_family_from_json(const nlohmann::json& j);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);

nlohmann::json record_to_json(const CompiledRunRecord& r);

}  // namespace advlab

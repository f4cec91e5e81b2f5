/* Copyright 2026 The Percept Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "percept/core/registry.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>

#include "percept/core/builtin_processors.hpp"
#include "percept/error.hpp"

namespace percept {
namespace {

std::map<std::string, ProcessorFactory>& registry() {
  static std::map<std::string, ProcessorFactory> instance;
  return instance;
}

std::mutex& registry_mutex() {
  static std::mutex instance;
  return instance;
}

void ensure_builtins() {
  static std::once_flag once;
  std::call_once(once, register_builtin_processors);
}

}  // namespace

void register_processor_type(const std::string& type_name, ProcessorFactory factory) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  registry()[type_name] = std::move(factory);
}

Processor registry_instantiate(const std::string& type_name, const nlohmann::json& params) {
  ensure_builtins();
  ProcessorFactory factory;
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(type_name);
    if (it == registry().end())
      throw Error(ErrorCode::kUnknownProcessorType,
                  "no processor type named '" + type_name + "'");
    factory = it->second;
  }
  if (!params.is_object())
    throw Error(ErrorCode::kInvalidParam, type_name + ": params must be a JSON object");
  return factory(params);
}

std::vector<std::string> registered_processor_types() {
  ensure_builtins();
  std::lock_guard<std::mutex> lock(registry_mutex());
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const auto& [name, unused_factory] : registry()) names.push_back(name);
  return names;
}

SequentialProcessor pipeline_from_config(const nlohmann::json& config) {
  if (!config.is_object())
    throw Error(ErrorCode::kInvalidParam, "pipeline config must be a JSON object");
  std::string name = "pipeline";
  if (config.contains("name")) {
    if (!config.at("name").is_string())
      throw Error(ErrorCode::kInvalidParam, "pipeline \"name\" must be a string");
    name = config.at("name").get<std::string>();
  }
  for (const auto& [key, unused_value] : config.items()) {
    if (key != "name" && key != "processors")
      throw Error(ErrorCode::kInvalidParam, "unknown pipeline config key \"" + key + "\"");
  }
  SequentialProcessor pipeline(name);
  if (!config.contains("processors")) return pipeline;
  if (!config.at("processors").is_array())
    throw Error(ErrorCode::kInvalidParam, "\"processors\" must be an array");
  for (const auto& entry : config.at("processors")) {
    if (!entry.is_object() || !entry.contains("type") || !entry.at("type").is_string())
      throw Error(ErrorCode::kInvalidParam,
                  "each processor entry must be an object with a string \"type\"");
    for (const auto& [key, unused_value] : entry.items()) {
      if (key != "type" && key != "params")
        throw Error(ErrorCode::kInvalidParam,
                    "unknown processor entry key \"" + key + "\"");
    }
    const auto params =
        entry.contains("params") ? entry.at("params") : nlohmann::json::object();
    pipeline.add(registry_instantiate(entry.at("type").get<std::string>(), params));
  }
  return pipeline;
}

SequentialProcessor load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidParam, path.string() + ": " + e.what());
  }
  return pipeline_from_config(config);
}

ParamReader::ParamReader(const nlohmann::json& params, std::string context)
    : params_(params), context_(std::move(context)) {}

double ParamReader::number(const std::string& key, double fallback) {
  if (!params_.contains(key)) return fallback;
  consumed_.push_back(key);
  const auto& value = params_.at(key);
  if (!value.is_number()) fail("\"" + key + "\" must be a number");
  return value.get<double>();
}

int ParamReader::integer(const std::string& key, int fallback) {
  if (!params_.contains(key)) return fallback;
  consumed_.push_back(key);
  const auto& value = params_.at(key);
  if (!value.is_number_integer()) fail("\"" + key + "\" must be an integer");
  return value.get<int>();
}

bool ParamReader::has(const std::string& key) const { return params_.contains(key); }

const nlohmann::json& ParamReader::raw(const std::string& key) {
  consumed_.push_back(key);
  return params_.at(key);
}

void ParamReader::done() const {
  for (const auto& [key, unused_value] : params_.items()) {
    if (std::find(consumed_.begin(), consumed_.end(), key) == consumed_.end())
      fail("unknown parameter \"" + key + "\"");
  }
}

void ParamReader::fail(const std::string& reason) const {
  throw Error(ErrorCode::kInvalidParam, context_ + ": " + reason);
}

}  // namespace percept

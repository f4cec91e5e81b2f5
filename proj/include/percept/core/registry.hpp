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

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "percept/core/processor.hpp"

namespace percept {

/// Builds a processor from a JSON parameter object. Factories must reject
/// unknown keys and out-of-range values with InvalidParam.
using ProcessorFactory = std::function<Processor(const nlohmann::json& params)>;

/// Registers a processor type for config-file instantiation. Registering
/// an existing name replaces the factory.
void register_processor_type(const std::string& type_name, ProcessorFactory factory);

/// Instantiates a registered type. All built-in processors (see
/// builtin_processors.hpp) are pre-registered. Throws
/// UnknownProcessorType or InvalidParam.
Processor registry_instantiate(const std::string& type_name,
                               const nlohmann::json& params = nlohmann::json::object());

/// Sorted names of all registered types.
std::vector<std::string> registered_processor_types();

/// Builds a pipeline from a config document:
///   {"name": string, "processors": [{"type": string, "params": object}, ...]}
/// Array order is execution order; "params" may be omitted.
SequentialProcessor pipeline_from_config(const nlohmann::json& config);

/// Reads and parses a pipeline config file (UTF-8 JSON).
SequentialProcessor load_pipeline_config(const std::filesystem::path& path);

/// Helper for factories: typed, range-checked parameter access that
/// rejects unknown keys. Call done() after reading all parameters.
class ParamReader {
 public:
  explicit ParamReader(const nlohmann::json& params, std::string context);

  double number(const std::string& key, double fallback);
  int integer(const std::string& key, int fallback);
  bool has(const std::string& key) const;
  const nlohmann::json& raw(const std::string& key);

  /// Throws InvalidParam when any parameter was not consumed.
  void done() const;

  /// Throws InvalidParam with the reader's context attached.
  [[noreturn]] void fail(const std::string& reason) const;

 private:
  const nlohmann::json& params_;
  std::string context_;
  std::vector<std::string> consumed_;
};

}  // namespace percept

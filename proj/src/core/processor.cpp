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

#include "percept/core/processor.hpp"

#include <atomic>
#include <sstream>

#include "percept/error.hpp"

namespace percept {

struct Processor::Impl {
  std::string name;
  int in_arity = kVariadic;
  int out_arity = kVariadic;
  ApplyFn apply;
  std::vector<Processor> steps;  // leaf steps; non-empty marks a composite
  bool composite = false;
};

namespace {

void check_arity_value(int arity, const std::string& name) {
  if (arity != Processor::kVariadic && arity < 1)
    throw Error(ErrorCode::kInvalidParam,
                "processor '" + name + "': arity must be >= 1 or variadic");
}

std::string arity_text(int arity) {
  return arity == Processor::kVariadic ? "*" : std::to_string(arity);
}

}  // namespace

Processor::Processor(std::string name, int in_arity, int out_arity, ApplyFn apply) {
  check_arity_value(in_arity, name);
  check_arity_value(out_arity, name);
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->in_arity = in_arity;
  impl->out_arity = out_arity;
  impl->apply = std::move(apply);
  impl_ = std::move(impl);
}

Processor Processor::from_function(std::string name, ApplyFn apply) {
  return Processor(std::move(name), kVariadic, kVariadic, std::move(apply));
}

Processor Processor::from_function(ApplyFn apply) {
  static std::atomic<int> counter{0};
  return from_function("fn" + std::to_string(counter++), std::move(apply));
}

const std::string& Processor::name() const { return impl_->name; }
int Processor::in_arity() const { return impl_->in_arity; }
int Processor::out_arity() const { return impl_->out_arity; }
bool Processor::is_composite() const { return impl_->composite; }
const std::vector<Processor>& Processor::steps() const { return impl_->steps; }

DataPacket Processor::operator()(const DataPacket& packet, RngStream& rng) const {
  if (impl_->composite) {
    // Behaves exactly like calling the pipeline it was built from.
    SequentialProcessor pipeline(impl_->name, impl_->steps);
    return pipeline(packet, rng);
  }
  if (impl_->in_arity != kVariadic &&
      packet.size() != static_cast<std::size_t>(impl_->in_arity)) {
    throw Error(ErrorCode::kArityMismatch,
                "processor '" + impl_->name + "' expects " + arity_text(impl_->in_arity) +
                    " values, got " + std::to_string(packet.size()));
  }
  DataPacket result = impl_->apply(packet, rng);
  if (impl_->out_arity != kVariadic &&
      result.size() != static_cast<std::size_t>(impl_->out_arity)) {
    throw Error(ErrorCode::kArityMismatch,
                "processor '" + impl_->name + "' declared " + arity_text(impl_->out_arity) +
                    " outputs but produced " + std::to_string(result.size()));
  }
  return result;
}

bool arity_compatible(int out_arity, int in_arity) {
  return out_arity == Processor::kVariadic || in_arity == Processor::kVariadic ||
         out_arity == in_arity;
}

namespace {

void check_chain(const std::vector<Processor>& steps, const std::string& pipeline_name) {
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (!arity_compatible(steps[i].out_arity(), steps[i + 1].in_arity())) {
      throw Error(ErrorCode::kArityMismatch,
                  "pipeline '" + pipeline_name + "': step '" + steps[i].name() +
                      "' produces " + arity_text(steps[i].out_arity()) +
                      " values but step '" + steps[i + 1].name() + "' expects " +
                      arity_text(steps[i + 1].in_arity()));
    }
  }
}

void collect_leaves(const std::vector<Processor>& steps, std::vector<Processor>& leaves) {
  for (const auto& step : steps) {
    if (step.is_composite()) {
      collect_leaves(step.steps(), leaves);
    } else {
      leaves.push_back(step);
    }
  }
}

}  // namespace

SequentialProcessor::SequentialProcessor(std::string name, std::vector<Processor> steps)
    : name_(std::move(name)), steps_(std::move(steps)) {
  check_chain(steps_, name_);
}

int SequentialProcessor::in_arity() const {
  return steps_.empty() ? Processor::kVariadic : steps_.front().in_arity();
}

int SequentialProcessor::out_arity() const {
  return steps_.empty() ? Processor::kVariadic : steps_.back().out_arity();
}

void SequentialProcessor::add(Processor step) {
  if (!steps_.empty() && !arity_compatible(steps_.back().out_arity(), step.in_arity())) {
    throw Error(ErrorCode::kArityMismatch,
                "pipeline '" + name_ + "': step '" + steps_.back().name() + "' produces " +
                    arity_text(steps_.back().out_arity()) + " values but step '" +
                    step.name() + "' expects " + arity_text(step.in_arity()));
  }
  steps_.push_back(std::move(step));
}

SequentialProcessor SequentialProcessor::extend_with(Processor step,
                                                     std::size_t position) const {
  if (position > steps_.size())
    throw Error(ErrorCode::kIndexOutOfRange,
                "pipeline '" + name_ + "': position " + std::to_string(position) +
                    " > " + std::to_string(steps_.size()));
  std::vector<Processor> steps = steps_;
  steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(position), std::move(step));
  return SequentialProcessor(name_, std::move(steps));
}

SequentialProcessor SequentialProcessor::extend_with(Processor step) const {
  return extend_with(std::move(step), steps_.size());
}

SequentialProcessor SequentialProcessor::remove(std::string_view step_name) const {
  std::size_t found = steps_.size();
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].name() == step_name) {
      if (found != steps_.size())
        throw Error(ErrorCode::kNameAmbiguous,
                    "pipeline '" + name_ + "': several steps named '" +
                        std::string(step_name) + "'");
      found = i;
    }
  }
  if (found == steps_.size())
    throw Error(ErrorCode::kNameNotFound,
                "pipeline '" + name_ + "': no step named '" + std::string(step_name) + "'");
  std::vector<Processor> steps = steps_;
  steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(found));
  return SequentialProcessor(name_, std::move(steps));
}

SequentialProcessor SequentialProcessor::flatten() const {
  std::vector<Processor> leaves;
  collect_leaves(steps_, leaves);
  return SequentialProcessor(name_, std::move(leaves));
}

std::string SequentialProcessor::describe() const {
  std::ostringstream out;
  out << "pipeline '" << name_ << "' (" << steps_.size() << " steps)\n";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    out << "  [" << i << "] " << steps_[i].name() << " " << arity_text(steps_[i].in_arity())
        << " -> " << arity_text(steps_[i].out_arity()) << "\n";
  }
  return out.str();
}

DataPacket SequentialProcessor::operator()(const DataPacket& packet, RngStream& rng) const {
  std::vector<Processor> leaves;
  collect_leaves(steps_, leaves);
  DataPacket current = packet;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    RngStream step_rng = rng.fork(static_cast<std::uint64_t>(i)).fork(leaves[i].name());
    try {
      current = leaves[i](current, step_rng);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + " '" + leaves[i].name() +
                                "': " + e.message());
    }
  }
  return current;
}

Processor SequentialProcessor::as_processor() const {
  std::vector<Processor> leaves;
  collect_leaves(steps_, leaves);
  auto impl = std::make_shared<Processor::Impl>();
  impl->name = name_;
  impl->in_arity = in_arity();
  impl->out_arity = out_arity();
  impl->steps = std::move(leaves);
  impl->composite = true;
  return Processor(std::move(impl));
}

}  // namespace percept

#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "logknee/chat_backend.hpp"

namespace logknee {

// Deterministic offline stand-ins for the generator and judge backends.
// Both are pure functions of their prompt (and seed), so the whole
// pipeline is bit-reproducible without network access.
struct MockBackends {
  std::unique_ptr<ChatBackend> template_explainer;
  std::unique_ptr<ChatBackend> coverage_judge;
};

// template_explainer: emits a fixed-template explanation enumerating the
// visible alphabet of the model text inside its prompt, with Description,
// Bottlenecks and Improvements sections.
//
// coverage_judge: scores completeness by the fraction of reference-model
// activities mentioned in the explanation, mapped affinely from [0,1]
// onto [1,10]; bottlenecks and improvements score 10 when the matching
// template section is present and 1 otherwise. Returns one JSON object.
MockBackends mock_backends(std::uint64_t seed = 0);

// Replays a fixed list of responses; used to script failure scenarios.
class ScriptedBackend : public ChatBackend {
 public:
  explicit ScriptedBackend(std::vector<std::string> responses, std::string model_id = "scripted");

  std::string send(const std::vector<ChatMessage>& messages,
                   const DecodingParams& decoding) override;
  std::string model_id() const override { return model_id_; }
  bool supports_concurrency() const override { return false; }

  int calls() const { return calls_; }

 private:
  std::vector<std::string> responses_;
  std::string model_id_;
  int calls_ = 0;
};

}  // namespace logknee

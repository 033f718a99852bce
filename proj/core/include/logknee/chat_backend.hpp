#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logknee {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct DecodingParams {
  double temperature = 0.7;  // must be >= 0
  int max_tokens = 1024;     // must be > 0
  std::optional<std::uint64_t> seed;
};

// Contract for anything that can answer a chat prompt: the HTTP
// chat-completions client, or the deterministic offline mocks.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;

  virtual std::string send(const std::vector<ChatMessage>& messages,
                           const DecodingParams& decoding) = 0;

  virtual std::string model_id() const = 0;

  // Backends that cannot take concurrent send() calls return false and
  // the experiment runner serializes them.
  virtual bool supports_concurrency() const { return false; }
};

}  // namespace logknee

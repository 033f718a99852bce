#pragma once

#include <string>

#include "logknee/chat_backend.hpp"

namespace logknee {

// Environment variables the default configuration reads.
inline constexpr const char* kApiBaseEnv = "LOGKNEE_API_BASE";
inline constexpr const char* kApiKeyEnv = "LOGKNEE_API_KEY";

struct HttpBackendConfig {
  std::string base_url;  // e.g. https://api.example.com/v1
  std::string api_key;
  std::string model;
  int max_retries = 3;          // transport-level retries per request
  int initial_backoff_ms = 500; // doubles per retry
  int timeout_seconds = 120;

  // base_url/api_key from LOGKNEE_API_BASE / LOGKNEE_API_KEY.
  static HttpBackendConfig from_env(std::string model);
};

// Chat-completions client following the common wire convention:
// POST {base}/chat/completions with a messages array, read
// choices[0].message.content. Retries transport failures, HTTP 5xx and
// 429 with exponential backoff before raising BackendUnavailableError.
class HttpChatBackend : public ChatBackend {
 public:
  explicit HttpChatBackend(HttpBackendConfig config);

  std::string send(const std::vector<ChatMessage>& messages,
                   const DecodingParams& decoding) override;
  std::string model_id() const override { return config_.model; }
  bool supports_concurrency() const override { return true; }

 private:
  HttpBackendConfig config_;
  std::string host_;         // scheme://host[:port]
  std::string path_prefix_;  // e.g. /v1
};

}  // namespace logknee

#include "logknee/http_backend.hpp"

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <thread>

#include "logknee/errors.hpp"

namespace logknee {

namespace {

std::string env_or_empty(const char* name) {
  const char* value = std::getenv(name);
  return value ? value : "";
}

// Splits scheme://host[:port]/prefix into the client target and the
// path prefix httplib expects separately.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
  std::string url = base_url;
  while (!url.empty() && url.back() == '/') url.pop_back();
  std::size_t scheme_end = url.find("://");
  std::size_t path_start =
      url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start == std::string::npos) return {url, ""};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

HttpBackendConfig HttpBackendConfig::from_env(std::string model) {
  HttpBackendConfig config;
  config.base_url = env_or_empty(kApiBaseEnv);
  config.api_key = env_or_empty(kApiKeyEnv);
  config.model = std::move(model);
  return config;
}

HttpChatBackend::HttpChatBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty())
    throw BackendUnavailableError(std::string("no API base url; set ") + kApiBaseEnv);
  std::tie(host_, path_prefix_) = split_base_url(config_.base_url);
}

std::string HttpChatBackend::send(const std::vector<ChatMessage>& messages,
                                  const DecodingParams& decoding) {
  nlohmann::json request{
      {"model", config_.model},
      {"temperature", decoding.temperature},
      {"max_tokens", decoding.max_tokens},
  };
  if (decoding.seed) request["seed"] = *decoding.seed;
  auto& message_array = request["messages"] = nlohmann::json::array();
  for (const auto& message : messages)
    message_array.push_back({{"role", message.role}, {"content", message.content}});
  const std::string body = request.dump();

  httplib::Headers headers;
  if (!config_.api_key.empty()) headers.emplace("Authorization", "Bearer " + config_.api_key);

  std::string last_error;
  int backoff_ms = config_.initial_backoff_ms;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    // One client per request: httplib clients are not safe for
    // concurrent use, and send() may run from several workers.
    httplib::Client client(host_);
    client.set_connection_timeout(config_.timeout_seconds);
    client.set_read_timeout(config_.timeout_seconds);
    client.set_follow_location(true);

    auto response = client.Post(path_prefix_ + "/chat/completions", headers, body,
                                "application/json");
    if (!response) {
      last_error = "transport error: " + httplib::to_string(response.error());
      continue;
    }
    if (response->status == 429 || response->status >= 500) {
      last_error = "HTTP " + std::to_string(response->status);
      continue;
    }
    if (response->status != 200)
      throw BackendUnavailableError("HTTP " + std::to_string(response->status) + ": " +
                                    response->body);

    nlohmann::json parsed = nlohmann::json::parse(response->body, nullptr, false);
    if (parsed.is_discarded())
      throw BackendUnavailableError("response is not JSON: " + response->body.substr(0, 200));
    try {
      return parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw BackendUnavailableError(std::string("unexpected response shape: ") + e.what());
    }
  }
  throw BackendUnavailableError("request failed after " + std::to_string(config_.max_retries + 1) +
                                " attempts; last error: " + last_error);
}

}  // namespace logknee

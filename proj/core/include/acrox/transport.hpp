#pragma once

// Chat-completion transports. The live transport talks HTTP; replay answers
// from a fixture keyed by the prompt's SHA-256; recording wraps another
// transport and appends every exchange to a fixture.

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace acrox::llm {

struct LlmConfig;

class Transport {
 public:
  virtual ~Transport() = default;
  // Returns the reply text. Throws acrox::TransportError.
  virtual std::string send(const std::string& prompt) = 0;
};

// Lowercase hex SHA-256 of the prompt bytes.
std::string prompt_hash(std::string_view prompt);

// JSON-lines fixture: {"prompt_hash": "...", "reply_text": "..."} per line.
// Record order carries no meaning; a later record wins on a repeated hash.
class Fixture {
 public:
  static Fixture load(const std::filesystem::path& path);
  static std::string encode_record(std::string_view hash, std::string_view reply);

  const std::string* find(const std::string& hash) const;
  std::size_t size() const { return replies_.size(); }

 private:
  std::unordered_map<std::string, std::string> replies_;
};

class ReplayTransport final : public Transport {
 public:
  explicit ReplayTransport(Fixture fixture) : fixture_(std::move(fixture)) {}
  std::string send(const std::string& prompt) override;

 private:
  Fixture fixture_;
};

class RecordingTransport final : public Transport {
 public:
  RecordingTransport(Transport& inner, std::filesystem::path fixture_path);
  std::string send(const std::string& prompt) override;

 private:
  Transport& inner_;
  std::filesystem::path path_;
  std::mutex mu_;
};

struct Endpoint {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 0;
  std::string path;
};

// Splits "https://api.example.com/v1/chat/completions". Throws acrox::Error.
Endpoint parse_endpoint(std::string_view url);

// POSTs {"model", "temperature", "messages": [{"role": "user", ...}]} and
// returns choices[0].message.content. HTTP 429, 5xx and connection failures
// are retryable; other statuses are not.
class LiveTransport final : public Transport {
 public:
  // Reads the API key from the environment variable named in the config.
  // Throws acrox::Error when the endpoint is unusable or the key is unset.
  explicit LiveTransport(const LlmConfig& config);
  std::string send(const std::string& prompt) override;

  static std::string request_body(std::string_view model, double temperature,
                                  std::string_view prompt);
  static std::string reply_content(std::string_view response_body);

 private:
  Endpoint endpoint_;
  std::string model_;
  double temperature_;
  std::string api_key_;
  int timeout_seconds_;
};

}  // namespace acrox::llm

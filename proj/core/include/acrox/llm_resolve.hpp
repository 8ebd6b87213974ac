#pragma once

// Sends the acronym table to a chat-completion model in chunks, under a
// request-rate limit and a bound on concurrent calls, and folds the JSON
// replies back in table order.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acrox/clock.hpp"
#include "acrox/extract.hpp"
#include "acrox/rate_limit.hpp"
#include "acrox/transport.hpp"

namespace acrox::llm {

inline constexpr std::size_t kDefaultChunkSize = 15;
inline constexpr std::size_t kMaxChunkSize = 20;

struct LlmConfig {
  std::string endpoint;  // empty: no live endpoint configured
  std::string model_name = "gpt-4o-mini";
  double temperature = 0.0;
  std::size_t max_retries = 2;
  std::size_t requests_per_minute = 60;
  std::size_t max_concurrency = 4;
  std::string api_key_env = "OPENAI_API_KEY";
  std::size_t chunk_size = kDefaultChunkSize;
  std::size_t text_chunk_chars = 12000;  // discovery prompts over raw text
  int timeout_seconds = 120;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

using Entry = std::pair<std::string, std::string>;  // acronym, value

struct PromptChunk {
  std::vector<Entry> entries;
  std::string serialized;  // JSON object, keys in entry order, 4-space indent

  static PromptChunk from_entries(std::vector<Entry> entries);
  // Inverse of `serialized`. Throws acrox::Error on malformed input.
  static std::vector<Entry> parse_serialized(std::string_view serialized);
};

// Prompt values per table entry: the expansions joined with "; ", or the
// "(context)" text when there are none.
std::vector<Entry> table_entries(const extract::AcronymTable& table);

// Consecutive chunks of at most `max_entries` (1..20). Empty table -> no chunks.
std::vector<PromptChunk> chunk_entries(const std::vector<Entry>& entries, std::size_t max_entries);
std::vector<PromptChunk> chunk_table(const extract::AcronymTable& table, std::size_t max_entries);

std::string render_prompt(const PromptChunk& chunk);

// Prompt variant for the model-only modes: find every acronym in a passage.
std::string render_discovery_prompt(std::string_view passage);

// Packs sentences (joined by spaces) into passages of at most `max_chars`
// bytes; a longer sentence becomes its own passage.
std::vector<std::string> chunk_text(const preprocess::SentenceStream& stream, std::size_t max_chars);

struct ParsedReply {
  std::vector<Entry> resolved;         // request order, or reply order without a request
  std::vector<std::string> unresolved; // requested keys with no usable value
  std::vector<std::string> warnings;
};

// Strips an optional ``` fence and reads one JSON object of strings. With
// `request_keys`, unknown keys are dropped with a warning and missing keys
// are listed as unresolved. Throws RetryableParseError when the reply is
// not a JSON object.
ParsedReply parse_reply(std::string_view reply,
                        const std::vector<std::string>* request_keys = nullptr);

struct DispatchOutcome {
  std::optional<std::string> reply;  // first reply that passed validation
  std::size_t attempts = 0;
  std::vector<std::string> errors;
};

struct DispatchStats {
  std::size_t transport_calls = 0;
  std::size_t max_in_flight = 0;
};

// Sends each prompt with at most `max_concurrency` calls in flight, every
// call first taking a permit from `gate`. A prompt is retried up to
// `max_retries` times on retryable transport errors or when `validate`
// throws RetryableParseError. Outcomes are returned in prompt order.
std::vector<DispatchOutcome> dispatch_prompts(
    const std::vector<std::string>& prompts, const LlmConfig& config, Transport& transport,
    RateGate& gate, const std::function<void(const std::string&)>& validate,
    DispatchStats* stats = nullptr);

struct KeyOutcome {
  std::string canonical;
  std::optional<std::string> expansion;  // model's value, when it gave one
  std::optional<std::string> context;    // last known context when unresolved
};

struct ResolveResult {
  std::vector<KeyOutcome> outcomes;  // table order
  std::vector<std::string> warnings;
  DispatchStats stats;
};

ResolveResult resolve_all(const extract::AcronymTable& table, const LlmConfig& config,
                          Transport& transport, RateGate& gate);

struct DiscoveryResult {
  std::vector<std::pair<std::string, std::vector<std::string>>> pairs;  // first-seen order
  std::vector<std::string> warnings;
  DispatchStats stats;
};

DiscoveryResult discover_all(const std::vector<std::string>& passages, const LlmConfig& config,
                             Transport& transport, RateGate& gate);

}  // namespace acrox::llm

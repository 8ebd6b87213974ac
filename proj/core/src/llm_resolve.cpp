#include "acrox/llm_resolve.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "acrox/errors.hpp"
#include "acrox/text.hpp"

namespace acrox::llm {

using ordered_json = nlohmann::ordered_json;

void LlmConfig::validate() const {
  if (max_concurrency < 1) throw std::invalid_argument("max_concurrency must be >= 1");
  if (requests_per_minute < 1) throw std::invalid_argument("requests_per_minute must be >= 1");
  if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
  if (chunk_size < 1 || chunk_size > kMaxChunkSize)
    throw std::invalid_argument("chunk_size must be in 1..20");
  if (text_chunk_chars < 1) throw std::invalid_argument("text_chunk_chars must be >= 1");
}

PromptChunk PromptChunk::from_entries(std::vector<Entry> entries) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : entries) obj[key] = value;
  return {std::move(entries), obj.dump(4)};
}

std::vector<Entry> PromptChunk::parse_serialized(std::string_view serialized) {
  std::vector<Entry> out;
  try {
    const auto obj = ordered_json::parse(serialized);
    if (!obj.is_object()) throw Error("serialized chunk is not a JSON object");
    for (const auto& [key, value] : obj.items()) out.emplace_back(key, value.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad serialized chunk: ") + e.what());
  }
  return out;
}

std::vector<Entry> table_entries(const extract::AcronymTable& table) {
  std::vector<Entry> out;
  out.reserve(table.size());
  for (const auto& e : table.entries()) {
    if (!e.expansions.empty()) {
      std::string joined;
      for (const auto& x : e.expansions) {
        if (!joined.empty()) joined += "; ";
        joined += x.text;
      }
      out.emplace_back(e.canonical, std::move(joined));
    } else {
      out.emplace_back(e.canonical, e.context.value_or(std::string(extract::kContextPrefix)));
    }
  }
  return out;
}

std::vector<PromptChunk> chunk_entries(const std::vector<Entry>& entries, std::size_t max_entries) {
  if (max_entries < 1 || max_entries > kMaxChunkSize)
    throw std::invalid_argument("chunk size must be in 1..20");
  std::vector<PromptChunk> out;
  for (std::size_t i = 0; i < entries.size(); i += max_entries) {
    const auto end = std::min(entries.size(), i + max_entries);
    out.push_back(PromptChunk::from_entries({entries.begin() + static_cast<std::ptrdiff_t>(i),
                                             entries.begin() + static_cast<std::ptrdiff_t>(end)}));
  }
  return out;
}

std::vector<PromptChunk> chunk_table(const extract::AcronymTable& table, std::size_t max_entries) {
  return chunk_entries(table_entries(table), max_entries);
}

namespace {

constexpr std::string_view kRefineHead =
    "As an AI language model, you are tasked with refining a dictionary of acronyms and their "
    "explanations provided below:\n";

constexpr std::string_view kRefineTail = R"P(

Please follow these instructions carefully:

1. Each entry in the dictionary consists of an `ACRONYM` and its corresponding `value` (full form or context).
2. The `value` may contain the full form of the acronym or a context in which the acronym is used.
3. If the `value` does not start with "(context)", check the accuracy and conciseness of the full form and make adjustments as necessary.
4. If the `value` starts with "(context)", the full form of the acronym should be extracted based on the context provided.
5. If the full form cannot be determined from the context, use your best judgment to provide the most accurate and concise full form.
6. If you cannot determine the full form from the context, ignore the entry.
7. Ignore author names, publication titles, locations, roman numerals, and other proper nouns that are not acronyms.

Your output should be an updated dictionary in JSON format, adhering to the following structure:
{
    "ACRONYM": "Full Expansion of the Acronym",
    "ANOTHER_ACRONYM": "Full Expansion of Another Acronym",
    ...
}

Ensure the final dictionary is accurate, concise, and formatted correctly for JSON compatibility. Exclude any additional text, comments, notes, or explanations outside of the updated dictionary entries.)P";

constexpr std::string_view kDiscoverHead =
    "As an AI language model, you are tasked with identifying every acronym in the scientific "
    "text provided below and determining its full form:\n";

constexpr std::string_view kDiscoverTail = R"P(

Please follow these instructions carefully:

1. Identify each acronym or initialism that appears in the text.
2. If the text defines the acronym, use the definition given in the text as its full form.
3. If the text does not define the acronym, use your best judgment to provide the most accurate and concise full form.
4. If you cannot determine the full form, ignore the acronym.
5. Ignore author names, publication titles, locations, roman numerals, and other proper nouns that are not acronyms.

Your output should be a dictionary in JSON format, adhering to the following structure:
{
    "ACRONYM": "Full Expansion of the Acronym",
    "ANOTHER_ACRONYM": "Full Expansion of Another Acronym",
    ...
}

Ensure the final dictionary is accurate, concise, and formatted correctly for JSON compatibility. Exclude any additional text, comments, notes, or explanations outside of the dictionary entries.)P";

}  // namespace

std::string render_prompt(const PromptChunk& chunk) {
  std::string out;
  out.reserve(kRefineHead.size() + chunk.serialized.size() + kRefineTail.size());
  out.append(kRefineHead).append(chunk.serialized).append(kRefineTail);
  return out;
}

std::string render_discovery_prompt(std::string_view passage) {
  std::string out;
  out.append(kDiscoverHead).append(passage).append(kDiscoverTail);
  return out;
}

std::vector<std::string> chunk_text(const preprocess::SentenceStream& stream, std::size_t max_chars) {
  std::vector<std::string> out;
  std::string current;
  for (const auto& s : stream.sentences) {
    const auto sentence = text::squeeze_whitespace(s.text);
    if (!current.empty() && current.size() + 1 + sentence.size() > max_chars) {
      out.push_back(std::move(current));
      current.clear();
    }
    if (!current.empty()) current += ' ';
    current += sentence;
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

namespace {

std::string_view strip_fence(std::string_view reply) {
  auto t = text::trim(reply);
  if (t.substr(0, 3) == "```") {
    const auto nl = t.find('\n');
    t = nl == std::string_view::npos ? t.substr(3) : t.substr(nl + 1);
    t = text::trim(t);
    if (t.size() >= 3 && t.substr(t.size() - 3) == "```") t.remove_suffix(3);
  }
  return text::trim(t);
}

}  // namespace

ParsedReply parse_reply(std::string_view reply, const std::vector<std::string>* request_keys) {
  ordered_json obj;
  try {
    obj = ordered_json::parse(strip_fence(reply));
  } catch (const nlohmann::json::parse_error& e) {
    throw RetryableParseError(std::string("reply is not JSON: ") + e.what());
  }
  if (!obj.is_object()) throw RetryableParseError("reply is not a JSON object");

  ParsedReply out;
  std::vector<Entry> usable;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) {
      out.warnings.push_back("ignored non-string value for key " + key);
      continue;
    }
    auto v = std::string(text::trim(value.get_ref<const std::string&>()));
    if (v.empty()) continue;
    usable.emplace_back(key, std::move(v));
  }

  if (request_keys == nullptr) {
    out.resolved = std::move(usable);
    return out;
  }

  const std::unordered_set<std::string> requested(request_keys->begin(), request_keys->end());
  std::unordered_map<std::string, std::string> by_key;
  for (auto& [k, v] : usable) {
    if (!requested.count(k)) {
      out.warnings.push_back("dropped key not in request: " + k);
      continue;
    }
    by_key.emplace(k, std::move(v));
  }
  for (const auto& k : *request_keys) {
    if (auto it = by_key.find(k); it != by_key.end())
      out.resolved.emplace_back(k, it->second);
    else
      out.unresolved.push_back(k);
  }
  return out;
}

std::vector<DispatchOutcome> dispatch_prompts(
    const std::vector<std::string>& prompts, const LlmConfig& config, Transport& transport,
    RateGate& gate, const std::function<void(const std::string&)>& validate,
    DispatchStats* stats) {
  std::vector<DispatchOutcome> outcomes(prompts.size());
  if (prompts.empty()) return outcomes;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> in_flight{0};
  std::atomic<std::size_t> peak{0};
  std::atomic<std::size_t> calls{0};

  auto send_once = [&](const std::string& prompt) {
    const std::size_t now_in = ++in_flight;
    std::size_t seen = peak.load();
    while (now_in > seen && !peak.compare_exchange_weak(seen, now_in)) {
    }
    ++calls;
    try {
      auto reply = transport.send(prompt);
      --in_flight;
      return reply;
    } catch (...) {
      --in_flight;
      throw;
    }
  };

  auto work = [&] {
    ClockParticipant participant(gate.clock());
    for (std::size_t i = next++; i < prompts.size(); i = next++) {
      DispatchOutcome& out = outcomes[i];
      for (std::size_t attempt = 0; attempt <= config.max_retries; ++attempt) {
        ++out.attempts;
        try {
          gate.acquire();
          auto reply = send_once(prompts[i]);
          validate(reply);
          out.reply = std::move(reply);
          break;
        } catch (const TransportError& e) {
          out.errors.emplace_back(e.what());
          if (!e.retryable()) break;
        } catch (const RetryableParseError& e) {
          out.errors.emplace_back(e.what());
        } catch (const std::exception& e) {
          out.errors.emplace_back(e.what());
          break;
        }
      }
    }
  };

  const std::size_t workers = std::min(config.max_concurrency, prompts.size());
  gate.clock().add_participants(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (stats) {
    stats->transport_calls += calls.load();
    stats->max_in_flight = std::max(stats->max_in_flight, peak.load());
  }
  return outcomes;
}

ResolveResult resolve_all(const extract::AcronymTable& table, const LlmConfig& config,
                          Transport& transport, RateGate& gate) {
  config.validate();
  ResolveResult result;
  const auto chunks = chunk_table(table, config.chunk_size);

  std::vector<std::string> prompts;
  std::vector<std::vector<std::string>> keys;
  for (const auto& chunk : chunks) {
    prompts.push_back(render_prompt(chunk));
    auto& k = keys.emplace_back();
    for (const auto& e : chunk.entries) k.push_back(e.first);
  }

  // Only the JSON shape decides a retry; key checks run once replies are in.
  const auto outcomes = dispatch_prompts(
      prompts, config, transport, gate, [](const std::string& reply) { parse_reply(reply); },
      &result.stats);

  std::unordered_map<std::string, std::string> answered;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& out = outcomes[i];
    for (const auto& err : out.errors)
      result.warnings.push_back("chunk " + std::to_string(i + 1) + ": " + err);
    if (!out.reply) {
      result.warnings.push_back("chunk " + std::to_string(i + 1) + ": no usable reply; " +
                                std::to_string(keys[i].size()) + " entries left unresolved");
      continue;
    }
    auto parsed = parse_reply(*out.reply, &keys[i]);
    for (auto& w : parsed.warnings)
      result.warnings.push_back("chunk " + std::to_string(i + 1) + ": " + std::move(w));
    for (auto& [k, v] : parsed.resolved) answered.emplace(k, std::move(v));
  }

  for (const auto& entry : table.entries()) {
    KeyOutcome o{entry.canonical, std::nullopt, std::nullopt};
    if (auto it = answered.find(entry.canonical); it != answered.end())
      o.expansion = it->second;
    else
      o.context = entry.context;
    result.outcomes.push_back(std::move(o));
  }
  return result;
}

DiscoveryResult discover_all(const std::vector<std::string>& passages, const LlmConfig& config,
                             Transport& transport, RateGate& gate) {
  config.validate();
  DiscoveryResult result;
  std::vector<std::string> prompts;
  prompts.reserve(passages.size());
  for (const auto& p : passages) prompts.push_back(render_discovery_prompt(p));

  const auto outcomes = dispatch_prompts(
      prompts, config, transport, gate, [](const std::string& reply) { parse_reply(reply); },
      &result.stats);

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& out = outcomes[i];
    for (const auto& err : out.errors)
      result.warnings.push_back("passage " + std::to_string(i + 1) + ": " + err);
    if (!out.reply) continue;
    auto parsed = parse_reply(*out.reply);
    for (auto& w : parsed.warnings)
      result.warnings.push_back("passage " + std::to_string(i + 1) + ": " + std::move(w));
    for (auto& [k, v] : parsed.resolved) {
      auto [it, inserted] = index.try_emplace(k, result.pairs.size());
      if (inserted) result.pairs.push_back({k, {}});
      auto& values = result.pairs[it->second].second;
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(std::move(v));
    }
  }
  return result;
}

}  // namespace acrox::llm

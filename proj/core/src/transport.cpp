#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "acrox/transport.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "acrox/errors.hpp"
#include "acrox/llm_resolve.hpp"
#include "acrox/text.hpp"

namespace acrox::llm {

using json = nlohmann::json;

std::string prompt_hash(std::string_view prompt) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(prompt.data(), prompt.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

Fixture Fixture::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read fixture: " + path.string());
  Fixture f;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    try {
      const auto rec = json::parse(line);
      f.replies_[rec.at("prompt_hash").get<std::string>()] = rec.at("reply_text").get<std::string>();
    } catch (const json::exception& e) {
      throw Error(path.string() + ":" + std::to_string(lineno) + ": bad fixture record: " + e.what());
    }
  }
  return f;
}

std::string Fixture::encode_record(std::string_view hash, std::string_view reply) {
  json rec = json::object();
  rec["prompt_hash"] = hash;
  rec["reply_text"] = reply;
  return rec.dump();
}

const std::string* Fixture::find(const std::string& hash) const {
  const auto it = replies_.find(hash);
  return it == replies_.end() ? nullptr : &it->second;
}

std::string ReplayTransport::send(const std::string& prompt) {
  const auto hash = prompt_hash(prompt);
  if (const auto* reply = fixture_.find(hash)) return *reply;
  throw TransportError("no fixture reply for prompt " + hash, /*retryable=*/false);
}

RecordingTransport::RecordingTransport(Transport& inner, std::filesystem::path fixture_path)
    : inner_(inner), path_(std::move(fixture_path)) {}

std::string RecordingTransport::send(const std::string& prompt) {
  auto reply = inner_.send(prompt);
  const auto record = Fixture::encode_record(prompt_hash(prompt), reply);
  std::lock_guard lock(mu_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw TransportError("cannot append to fixture " + path_.string(), false);
  out << record << '\n';
  return reply;
}

Endpoint parse_endpoint(std::string_view url) {
  Endpoint ep;
  const auto sep = url.find("://");
  if (sep == std::string_view::npos) throw Error("endpoint must include a scheme: " + std::string(url));
  ep.scheme = text::to_lower(url.substr(0, sep));
  if (ep.scheme != "http" && ep.scheme != "https")
    throw Error("unsupported endpoint scheme: " + ep.scheme);
  auto rest = url.substr(sep + 3);
  const auto slash = rest.find('/');
  auto authority = rest.substr(0, slash);
  ep.path = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
  ep.port = ep.scheme == "https" ? 443 : 80;
  if (const auto colon = authority.rfind(':'); colon != std::string_view::npos) {
    try {
      ep.port = std::stoi(std::string(authority.substr(colon + 1)));
    } catch (const std::exception&) {
      throw Error("bad endpoint port: " + std::string(url));
    }
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) throw Error("endpoint has no host: " + std::string(url));
  ep.host = std::string(authority);
  return ep;
}

LiveTransport::LiveTransport(const LlmConfig& config)
    : endpoint_(parse_endpoint(config.endpoint)),
      model_(config.model_name),
      temperature_(config.temperature),
      timeout_seconds_(config.timeout_seconds) {
  const char* key = std::getenv(config.api_key_env.c_str());
  if (key == nullptr || *key == '\0')
    throw Error("environment variable " + config.api_key_env + " is not set");
  api_key_ = key;
}

std::string LiveTransport::request_body(std::string_view model, double temperature,
                                        std::string_view prompt) {
  json body = json::object();
  body["model"] = model;
  body["temperature"] = temperature;
  body["messages"] = json::array({json{{"role", "user"}, {"content", prompt}}});
  return body.dump();
}

std::string LiveTransport::reply_content(std::string_view response_body) {
  try {
    const auto j = json::parse(response_body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw TransportError(std::string("malformed completion response: ") + e.what(), true);
  }
}

std::string LiveTransport::send(const std::string& prompt) {
  const std::string base = endpoint_.scheme + "://" + endpoint_.host + ":" + std::to_string(endpoint_.port);
  httplib::Client client(base);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  client.set_write_timeout(timeout_seconds_, 0);
  const httplib::Headers headers{{"Authorization", "Bearer " + api_key_}};

  const auto res = client.Post(endpoint_.path, headers, request_body(model_, temperature_, prompt),
                               "application/json");
  if (!res) throw TransportError("request failed: " + httplib::to_string(res.error()), true);
  if (res->status == 200) return reply_content(res->body);
  const bool retryable = res->status == 429 || res->status >= 500;
  throw TransportError("HTTP " + std::to_string(res->status) + " from " + endpoint_.host, retryable);
}

}  // namespace acrox::llm

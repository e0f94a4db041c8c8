#include "gelato/chat_client.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include "gelato/errors.hpp"
#include "gelato/http_util.hpp"

namespace gelato {

namespace {

std::string env_or(const char* key, const std::string& fallback) {
  const char* value = std::getenv(key);
  return value ? value : fallback;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto time = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&time, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

EndpointConfig EndpointConfig::from_env() {
  EndpointConfig config;
  config.base_url = env_or("LLM_BASE_URL", "");
  config.model = env_or("LLM_MODEL", "");
  config.api_key = env_or("LLM_API_KEY", "");
  return config;
}

void EndpointConfig::check() const {
  if (base_url.empty()) throw ConfigError("endpoint base URL is empty (set LLM_BASE_URL)");
  if (base_url.find("://") == std::string::npos) {
    throw ConfigError("endpoint base URL must include a scheme: " + base_url);
  }
  if (model.empty()) throw ConfigError("model name is empty (set LLM_MODEL)");
  if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
  if (max_parallel < 1) throw ConfigError("max_parallel must be >= 1");
  if (max_tokens < 1) throw ConfigError("max_tokens must be >= 1");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* kHex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0F]);
  }
  return out;
}

TranscriptCache::TranscriptCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // fresh cache
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("request_hash") ||
        !record.contains("response")) {
      throw FormatError(lineno, "malformed transcript record in " + path_);
    }
    entries_[record["request_hash"].get<std::string>()] =
        record["response"].get<std::string>();
  }
}

std::optional<std::string> TranscriptCache::lookup(const std::string& request_hash) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(request_hash);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TranscriptCache::insert(const std::string& request_hash,
                             const std::string& prompt_json, const std::string& response) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (entries_.count(request_hash)) return;
  entries_[request_hash] = response;
  nlohmann::json record;
  record["request_hash"] = request_hash;
  record["prompt"] = nlohmann::json::parse(prompt_json);
  record["response"] = response;
  record["timestamp"] = utc_timestamp();
  std::ofstream out(path_, std::ios::app);
  if (!out) throw ConfigError("cannot append to transcript cache: " + path_);
  out << record.dump() << '\n';
}

std::size_t TranscriptCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

LlmClient::LlmClient(EndpointConfig config, std::shared_ptr<TranscriptCache> cache,
                     bool offline)
    : config_(std::move(config)), cache_(std::move(cache)), offline_(offline) {
  if (!offline_) config_.check();
}

std::string LlmClient::request_body(const std::string& system_message,
                                    const std::string& user_message) const {
  nlohmann::json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["max_tokens"] = config_.max_tokens;
  body["messages"] = nlohmann::json::array(
      {{{"role", "system"}, {"content", system_message}},
       {{"role", "user"}, {"content", user_message}}});
  return body.dump();
}

std::string LlmClient::complete(const std::string& system_message,
                                const std::string& user_message) {
  const std::string body = request_body(system_message, user_message);
  const std::string hash = sha256_hex(body);
  if (cache_) {
    if (auto hit = cache_->lookup(hash)) return *hit;
  }
  if (offline_) {
    throw HttpError(0, "offline mode and no transcript entry for request " + hash);
  }
  HttpResponse response = http_post_json(config_.base_url, "/v1/chat/completions", body,
                                         config_.api_key, config_.timeout_seconds);
  if (response.status < 200 || response.status >= 300) {
    throw HttpError(response.status, response.body.substr(0, 200));
  }
  nlohmann::json payload = nlohmann::json::parse(response.body, nullptr, false);
  if (payload.is_discarded() || !payload.contains("choices") || payload["choices"].empty() ||
      !payload["choices"][0].contains("message")) {
    throw HttpError(response.status, "response is not a chat completion");
  }
  const std::string content =
      payload["choices"][0]["message"].value("content", std::string());
  if (cache_) cache_->insert(hash, body, content);
  return content;
}

}  // namespace gelato

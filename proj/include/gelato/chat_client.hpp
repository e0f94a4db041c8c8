#ifndef GELATO_CHAT_CLIENT_HPP
#define GELATO_CHAT_CLIENT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace gelato {

// Anything that can answer one system+user exchange with raw assistant
// text. Implementations must be safe to call from multiple threads.
class SublabelClient {
 public:
  virtual ~SublabelClient() = default;
  virtual std::string complete(const std::string& system_message,
                               const std::string& user_message) = 0;
};

struct EndpointConfig {
  std::string base_url;  // e.g. http://localhost:8000
  std::string model;
  std::string api_key;
  double temperature = 0.0;
  int max_tokens = 1024;
  int timeout_seconds = 60;
  int max_parallel = 4;

  // Reads LLM_BASE_URL, LLM_MODEL, LLM_API_KEY.
  static EndpointConfig from_env();
  void check() const;  // throws ConfigError on unusable values
};

// Append-only request-hash -> response store, one JSON record per line:
// {request_hash, prompt, response, timestamp}. Safe for concurrent insert.
class TranscriptCache {
 public:
  // Opens or creates the backing file; existing records are loaded.
  explicit TranscriptCache(std::string path);

  std::optional<std::string> lookup(const std::string& request_hash) const;
  void insert(const std::string& request_hash, const std::string& prompt_json,
              const std::string& response);
  std::size_t size() const;

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, std::string> entries_;
};

std::string sha256_hex(const std::string& data);

// Chat-completions client with an optional transcript cache. In offline
// mode no request leaves the process; a cache miss is a transport error.
class LlmClient : public SublabelClient {
 public:
  LlmClient(EndpointConfig config, std::shared_ptr<TranscriptCache> cache,
            bool offline);

  std::string complete(const std::string& system_message,
                       const std::string& user_message) override;

  // Body and hash for one exchange; exposed so replays can be audited.
  std::string request_body(const std::string& system_message,
                           const std::string& user_message) const;

 private:
  EndpointConfig config_;
  std::shared_ptr<TranscriptCache> cache_;
  bool offline_;
};

}  // namespace gelato

#endif  // GELATO_CHAT_CLIENT_HPP

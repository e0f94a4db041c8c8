#include "gelato/congress_client.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include <nlohmann/json.hpp>

#include "gelato/errors.hpp"
#include "gelato/http_util.hpp"

namespace gelato {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string unescape_entities(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '&') {
      if (text.compare(i, 5, "&amp;") == 0) { out += '&'; i += 5; continue; }
      if (text.compare(i, 4, "&lt;") == 0) { out += '<'; i += 4; continue; }
      if (text.compare(i, 4, "&gt;") == 0) { out += '>'; i += 4; continue; }
      if (text.compare(i, 6, "&quot;") == 0) { out += '"'; i += 6; continue; }
      if (text.compare(i, 5, "&#39;") == 0) { out += '\''; i += 5; continue; }
    }
    out += text[i];
    ++i;
  }
  return out;
}

// Pick the URL of the introduced version's text, preferring the GPO
// "Formatted Text" format.
std::string select_text_url(const nlohmann::json& payload, const std::string& bill) {
  if (!payload.contains("textVersions") || !payload["textVersions"].is_array() ||
      payload["textVersions"].empty()) {
    throw MissingTextVersionError(bill);
  }
  const nlohmann::json* version = nullptr;
  for (const auto& candidate : payload["textVersions"]) {
    const auto type = lower(candidate.value("type", std::string()));
    if (type.find("introduced") != std::string::npos) {
      version = &candidate;
      break;
    }
  }
  if (!version) version = &payload["textVersions"][0];
  if (!version->contains("formats") || !(*version)["formats"].is_array() ||
      (*version)["formats"].empty()) {
    throw MissingTextVersionError(bill);
  }
  const nlohmann::json* format = nullptr;
  for (const auto& candidate : (*version)["formats"]) {
    const auto type = lower(candidate.value("type", std::string()));
    if (type.find("formatted text") != std::string::npos || type == "txt") {
      format = &candidate;
      break;
    }
  }
  if (!format) format = &(*version)["formats"][0];
  const auto url = format->value("url", std::string());
  if (url.empty()) throw MissingTextVersionError(bill);
  return url;
}

}  // namespace

CongressClientConfig CongressClientConfig::from_env() {
  CongressClientConfig config;
  if (const char* key = std::getenv("CONGRESS_API_KEY")) config.api_key = key;
  if (const char* base = std::getenv("CONGRESS_BASE_URL")) config.base_url = base;
  return config;
}

CongressClient::CongressClient(CongressClientConfig config) : config_(std::move(config)) {
  if (config_.api_key.empty()) {
    throw ConfigError("missing API key (set CONGRESS_API_KEY)");
  }
  split_url(config_.base_url);  // validates the scheme
  if (config_.max_parallel < 1) throw ConfigError("max_parallel must be >= 1");
}

std::string extract_plain_text(const std::string& body) {
  const auto open = body.find("<pre>");
  if (open == std::string::npos) return body;
  const auto start = open + 5;
  const auto close = body.find("</pre>", start);
  if (close == std::string::npos) return body;
  return unescape_entities(body.substr(start, close - start));
}

std::string CongressClient::fetch_bill(const BillId& id) const {
  const std::string path = "/v3/bill/" + std::to_string(id.congress) + "/" +
                           id.type_code() + "/" + std::to_string(id.number) +
                           "/text?format=json&api_key=" + config_.api_key;
  const auto response = http_get(config_.base_url, path, config_.timeout_seconds);
  if (response.status < 200 || response.status >= 300) {
    throw HttpError(response.status, "bill text listing for " + id.str());
  }
  nlohmann::json payload = nlohmann::json::parse(response.body, nullptr, false);
  if (payload.is_discarded()) {
    throw HttpError(response.status, "bill text listing is not JSON for " + id.str());
  }
  std::string url = select_text_url(payload, id.str());
  // Text URLs may point at a different host; same-origin ones keep the
  // configured base so tests can serve both endpoints locally.
  if (url.find("://") == std::string::npos) url = config_.base_url + url;
  const auto text = http_get_url(url, config_.timeout_seconds);
  if (text.status < 200 || text.status >= 300) {
    throw HttpError(text.status, "bill text body for " + id.str());
  }
  return extract_plain_text(text.body);
}

std::vector<std::string> CongressClient::fetch_bills(const std::vector<BillId>& ids) const {
  std::vector<std::string> out(ids.size());
  std::vector<std::exception_ptr> failures(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      try {
        out[i] = fetch_bill(ids[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const auto threads = std::min<std::size_t>(
      static_cast<std::size_t>(config_.max_parallel), ids.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace gelato

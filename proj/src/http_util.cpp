#include <httplib.h>

#include "gelato/http_util.hpp"

#include "gelato/errors.hpp"

namespace gelato {

namespace {

HttpResponse finish(const httplib::Result& result, const std::string& what) {
  if (!result) {
    throw HttpError(0, what + ": " + httplib::to_string(result.error()));
  }
  return HttpResponse{result->status, result->body};
}

httplib::Client make_client(const std::string& origin, int timeout_seconds) {
  httplib::Client client(origin);
  client.set_connection_timeout(timeout_seconds, 0);
  client.set_read_timeout(timeout_seconds, 0);
  client.set_write_timeout(timeout_seconds, 0);
  client.set_follow_location(true);
  return client;
}

}  // namespace

std::pair<std::string, std::string> split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw ConfigError("URL must include a scheme: " + url);
  }
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

HttpResponse http_get(const std::string& origin, const std::string& path,
                      int timeout_seconds) {
  auto client = make_client(origin, timeout_seconds);
  return finish(client.Get(path), "GET " + origin + path);
}

HttpResponse http_get_url(const std::string& url, int timeout_seconds) {
  const auto [origin, path] = split_url(url);
  return http_get(origin, path, timeout_seconds);
}

HttpResponse http_post_json(const std::string& origin, const std::string& path,
                            const std::string& body, const std::string& bearer,
                            int timeout_seconds) {
  auto client = make_client(origin, timeout_seconds);
  httplib::Headers headers;
  if (!bearer.empty()) headers.emplace("Authorization", "Bearer " + bearer);
  return finish(client.Post(path, headers, body, "application/json"),
                "POST " + origin + path);
}

}  // namespace gelato

#ifndef GELATO_HTTP_UTIL_HPP
#define GELATO_HTTP_UTIL_HPP

#include <string>
#include <utility>

namespace gelato {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Splits an absolute URL into (origin, path): origin keeps scheme, host and
// port; path defaults to "/". Throws ConfigError when no scheme is present.
std::pair<std::string, std::string> split_url(const std::string& url);

// Plain GET against origin+path. Transport failures throw HttpError(0).
HttpResponse http_get(const std::string& origin, const std::string& path,
                      int timeout_seconds);

// GET on a full absolute URL.
HttpResponse http_get_url(const std::string& url, int timeout_seconds);

// JSON POST with optional bearer token.
HttpResponse http_post_json(const std::string& origin, const std::string& path,
                            const std::string& body, const std::string& bearer,
                            int timeout_seconds);

}  // namespace gelato

#endif  // GELATO_HTTP_UTIL_HPP

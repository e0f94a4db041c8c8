#ifndef GELATO_CONGRESS_CLIENT_HPP
#define GELATO_CONGRESS_CLIENT_HPP

#include <string>
#include <vector>

#include "gelato/document.hpp"

namespace gelato {

struct CongressClientConfig {
  std::string base_url = "https://api.congress.gov";
  std::string api_key;  // CONGRESS_API_KEY
  int timeout_seconds = 30;
  int max_parallel = 4;

  static CongressClientConfig from_env();
};

// Client for the bill-text endpoint /v3/bill/{congress}/{type}/{number}/text.
// Selects the introduced version (IH/IS) and returns its plain-text body.
class CongressClient {
 public:
  explicit CongressClient(CongressClientConfig config);

  std::string fetch_bill(const BillId& id) const;

  // Bounded-concurrency fetch; results keep input order. The first failure
  // is rethrown after all workers drain.
  std::vector<std::string> fetch_bills(const std::vector<BillId>& ids) const;

 private:
  CongressClientConfig config_;
};

// Unwraps GPO "Formatted Text" pages: returns the first <pre> block with
// entities unescaped, or the input unchanged when there is none.
std::string extract_plain_text(const std::string& body);

}  // namespace gelato

#endif  // GELATO_CONGRESS_CLIENT_HPP

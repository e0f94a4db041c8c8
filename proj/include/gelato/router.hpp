#ifndef GELATO_ROUTER_HPP
#define GELATO_ROUTER_HPP

#include <cstdint>
#include <vector>

#include "gelato/chat_client.hpp"
#include "gelato/document.hpp"
#include "gelato/prompt.hpp"

namespace gelato {

struct SublabelResult {
  SublabelRequest request;
  std::string raw_response;
  SublabelOutcome outcome;
  std::int64_t latency_ms = 0;
};

struct RouterRun {
  std::vector<Document> documents;      // inputs plus a level-2 tag layer
  std::vector<SublabelResult> results;  // one per mention, in input order
  std::int64_t refusals = 0;
  std::int64_t transport_errors = 0;
};

// One request per level-1 mention; a parsed tag writes the subclass over the
// level-1 span skeleton, anything else writes the UNRESOLVED sentinel.
// Requests run concurrently up to max_parallel; output does not depend on
// the schedule. Per-request failures are recorded, never fatal.
RouterRun classify_mentions(const std::vector<Document>& docs, SublabelClient& client,
                            int max_parallel = 4, std::size_t window = kContextWindow);

// JSONL audit dump of a run, one record per mention.
std::string results_jsonl(const std::vector<SublabelResult>& results);

}  // namespace gelato

#endif  // GELATO_ROUTER_HPP

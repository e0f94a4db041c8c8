#ifndef GELATO_PROMPT_HPP
#define GELATO_PROMPT_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "gelato/document.hpp"
#include "gelato/ontology.hpp"
#include "gelato/seqlabel.hpp"

namespace gelato {

// Tokens kept on each side of a mention when building prompt context.
inline constexpr std::size_t kContextWindow = 50;

// One level-two classification exchange, before transport.
struct SublabelRequest {
  std::string doc_id;
  Mention mention;
  std::string mention_text;  // mention tokens joined by single spaces
  std::string context;       // window tokens joined by single spaces
  RoutingSet routing;
};

struct PromptMessages {
  std::string system;
  std::string user;
};

// Window is clamped at document boundaries; it truncates, never pads.
SublabelRequest build_request(const Document& doc, const Mention& mention,
                              std::size_t window = kContextWindow);

// Pure function of the request; identical requests give identical bytes.
PromptMessages build_prompt(const SublabelRequest& request);

// The shared instruction text sent as the system message.
const std::string& system_prompt();

struct SublabelOutcome {
  enum class Kind { Tag, Refusal, TransportError };
  Kind kind = Kind::Refusal;
  std::optional<Level2Label> tag;  // set iff kind == Tag
  std::string detail;              // refused tag text, or transport detail

  bool operator==(const SublabelOutcome&) const = default;
};

// Extracts the first non-empty line after the final [[ ## tag ## ]] marker,
// stopping at [[ ## completed ## ]]; matches it case-insensitively against
// the routing set. Anything else is a refusal carrying the raw tag text.
SublabelOutcome parse_response(const std::string& raw, const RoutingSet& routing);

}  // namespace gelato

#endif  // GELATO_PROMPT_HPP

#include "gelato/prompt.hpp"

#include <cctype>

#include "gelato/errors.hpp"
#include "gelato/tokenizer.hpp"

namespace gelato {

namespace {

constexpr const char kTagMarker[] = "[[ ## tag ## ]]";
constexpr const char kCompletedMarker[] = "[[ ## completed ## ]]";

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::string quoted_tag_list(const RoutingSet& routing) {
  std::string out = "[";
  for (std::size_t i = 0; i < routing.allowed_prompt_tags.size(); ++i) {
    if (i) out += ", ";
    out += '"';
    out += routing.allowed_prompt_tags[i];
    out += '"';
  }
  out += ']';
  return out;
}

}  // namespace

const std::string& system_prompt() {
  static const std::string kSystem =
      "Your input fields are:\n"
      "1. `mention` (str): the mention to extract the type from\n"
      "2. `context` (str): the context surrounding the mention\n"
      "3. `possible_tags` (list[str]): list of possible level-2 tags\n"
      "\n"
      "Your output fields are:\n"
      "1. `reasoning` (str)\n"
      "2. `tag` (str): the type of mention. MUST BE ONE OF THE POSSIBLE TAGS "
      "PROVIDED.\n"
      "\n"
      "All interactions will be structured in the following way, with the "
      "appropriate values filled in.\n"
      "\n"
      "[[ ## mention ## ]]\n"
      "{mention}\n"
      "\n"
      "[[ ## context ## ]]\n"
      "{context}\n"
      "\n"
      "[[ ## possible_tags ## ]]\n"
      "{possible_tags}\n"
      "\n"
      "[[ ## reasoning ## ]]\n"
      "{reasoning}\n"
      "\n"
      "[[ ## tag ## ]]\n"
      "{tag}\n"
      "\n"
      "[[ ## completed ## ]]\n"
      "\n"
      "In adhering to this structure, your objective is:\n"
      "Extract contiguous tokens referring to members of congress, titles, or "
      "simple names, if any, from a list of string tokens. Output a list of "
      "tokens.";
  return kSystem;
}

SublabelRequest build_request(const Document& doc, const Mention& mention,
                              std::size_t window) {
  if (mention.end > doc.tokens.size() || mention.start >= mention.end) {
    throw OutOfRangeError("mention span outside document " + doc.id);
  }
  SublabelRequest request;
  request.doc_id = doc.id;
  request.mention = mention;
  const std::size_t left = mention.start > window ? mention.start - window : 0;
  const std::size_t right = std::min(doc.tokens.size(), mention.end + window);
  request.mention_text = join_tokens(
      {doc.tokens.begin() + static_cast<std::ptrdiff_t>(mention.start),
       doc.tokens.begin() + static_cast<std::ptrdiff_t>(mention.end)});
  request.context = join_tokens(
      {doc.tokens.begin() + static_cast<std::ptrdiff_t>(left),
       doc.tokens.begin() + static_cast<std::ptrdiff_t>(right)});
  request.routing = routing_set(mention.level1);
  return request;
}

PromptMessages build_prompt(const SublabelRequest& request) {
  PromptMessages messages;
  messages.system = system_prompt();
  messages.user = "[[ ## mention ## ]]\n" + request.mention_text +
                  "\n\n[[ ## context ## ]]\n" + request.context +
                  "\n\n[[ ## possible_tags ## ]]\n" + quoted_tag_list(request.routing) +
                  "\n\nRespond with the corresponding output fields, starting with "
                  "the field [[ ## reasoning ## ]], then [[ ## tag ## ]], and then "
                  "ending with the marker for [[ ## completed ## ]].";
  return messages;
}

SublabelOutcome parse_response(const std::string& raw, const RoutingSet& routing) {
  SublabelOutcome outcome;
  const auto marker = raw.rfind(kTagMarker);
  if (marker == std::string::npos) {
    outcome.kind = SublabelOutcome::Kind::Refusal;
    outcome.detail = "";
    return outcome;
  }
  std::string after = raw.substr(marker + sizeof(kTagMarker) - 1);
  const auto completed = after.find(kCompletedMarker);
  if (completed != std::string::npos) after = after.substr(0, completed);
  std::string candidate;
  std::size_t start = 0;
  while (start <= after.size()) {
    const auto newline = after.find('\n', start);
    const auto line =
        newline == std::string::npos ? after.substr(start) : after.substr(start, newline - start);
    candidate = trim(line);
    if (!candidate.empty()) break;
    if (newline == std::string::npos) break;
    start = newline + 1;
  }
  if (auto tag = routing.match(candidate)) {
    outcome.kind = SublabelOutcome::Kind::Tag;
    outcome.tag = *tag;
    outcome.detail = candidate;
  } else {
    outcome.kind = SublabelOutcome::Kind::Refusal;
    outcome.detail = candidate;
  }
  return outcome;
}

}  // namespace gelato

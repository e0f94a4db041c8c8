#include "gelato/seqlabel.hpp"

#include <algorithm>

#include "gelato/errors.hpp"

namespace gelato {

namespace {

struct ParsedTag {
  bool outside = false;
  bool begin = false;  // B- prefix (otherwise I-)
  std::string label;
  bool malformed = false;
};

ParsedTag parse_tag(const std::string& tag) {
  ParsedTag parsed;
  if (tag == "O") {
    parsed.outside = true;
    return parsed;
  }
  if (tag.size() >= 3 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') {
    parsed.begin = tag[0] == 'B';
    parsed.label = tag.substr(2);
    return parsed;
  }
  parsed.malformed = true;
  return parsed;
}

bool label_known(const std::string& label, LabelUniverse universe) {
  switch (universe) {
    case LabelUniverse::Any:
      return true;
    case LabelUniverse::LevelOne: {
      auto found = try_resolve_label(label);
      return found && std::holds_alternative<Level1Label>(*found) &&
             label == name(std::get<Level1Label>(*found));
    }
    case LabelUniverse::LevelTwo: {
      if (label == kUnresolvedSublabel) return true;
      auto found = try_resolve_label(label);
      return found && std::holds_alternative<Level2Label>(*found) &&
             label == prompt_name(std::get<Level2Label>(*found));
    }
  }
  return false;
}

}  // namespace

std::string_view violation_kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::MalformedTag: return "malformed-tag";
    case Violation::Kind::UnknownLabel: return "unknown-label";
    case Violation::Kind::InvalidTransition: return "invalid-transition";
    case Violation::Kind::SchemeViolation: return "scheme-violation";
  }
  return "";
}

std::vector<std::string> encode_tags(const std::vector<Span>& spans,
                                     std::size_t length, Scheme scheme) {
  std::vector<std::string> tags(length, "O");
  std::size_t previous_end = 0;
  bool first = true;
  for (const auto& span : spans) {
    if (span.start >= span.end) {
      throw OutOfRangeError("span has start >= end");
    }
    if (span.end > length) {
      throw OutOfRangeError("span end " + std::to_string(span.end) +
                            " exceeds length " + std::to_string(length));
    }
    if (!first && span.start < previous_end) {
      throw OverlapError("spans overlap or are unsorted at token " +
                         std::to_string(span.start));
    }
    first = false;
    previous_end = span.end;
    for (std::size_t i = span.start; i < span.end; ++i) {
      const bool begin = scheme == Scheme::BIO && i == span.start;
      tags[i] = (begin ? "B-" : "I-") + span.label;
    }
  }
  return tags;
}

std::vector<Span> decode_tags(const std::vector<std::string>& tags, Scheme scheme) {
  const auto violations = validate_tags(tags, scheme, LabelUniverse::Any);
  if (!violations.empty()) {
    throw InvalidSequenceError("sequence has " + std::to_string(violations.size()) +
                               " violations; first at index " +
                               std::to_string(violations.front().index) + " (" +
                               std::string(violation_kind_name(violations.front().kind)) +
                               ")");
  }
  std::vector<Span> spans;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const auto parsed = parse_tag(tags[i]);
    if (parsed.outside) continue;
    const bool starts_new =
        scheme == Scheme::BIO
            ? parsed.begin
            : (spans.empty() || spans.back().end != i || spans.back().label != parsed.label);
    if (starts_new) {
      spans.push_back(Span{i, i + 1, parsed.label});
    } else {
      spans.back().end = i + 1;
    }
  }
  return spans;
}

std::vector<Violation> validate_tags(const std::vector<std::string>& tags,
                                     Scheme scheme, LabelUniverse universe) {
  std::vector<Violation> out;
  std::string previous_label;  // empty when previous token is O or invalid
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const auto parsed = parse_tag(tags[i]);
    if (parsed.malformed) {
      out.push_back({i, Violation::Kind::MalformedTag, tags[i]});
      previous_label.clear();
      continue;
    }
    if (parsed.outside) {
      previous_label.clear();
      continue;
    }
    if (!label_known(parsed.label, universe)) {
      out.push_back({i, Violation::Kind::UnknownLabel, tags[i]});
      previous_label.clear();
      continue;
    }
    if (scheme == Scheme::IO && parsed.begin) {
      out.push_back({i, Violation::Kind::SchemeViolation, tags[i]});
      previous_label.clear();
      continue;
    }
    if (scheme == Scheme::BIO && !parsed.begin && previous_label != parsed.label) {
      out.push_back({i, Violation::Kind::InvalidTransition, tags[i]});
      // The run it starts is reported once, not per token.
    }
    previous_label = parsed.label;
  }
  return out;
}

std::vector<std::string> repair_tags(const std::vector<std::string>& tags,
                                     Scheme scheme, RepairPolicy policy,
                                     LabelUniverse universe) {
  std::vector<std::string> out = tags;
  // Unknown and malformed tags cannot be repaired into entities.
  for (auto& tag : out) {
    const auto parsed = parse_tag(tag);
    if (parsed.malformed || (!parsed.outside && !label_known(parsed.label, universe))) {
      tag = "O";
    }
  }
  if (scheme == Scheme::IO) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto parsed = parse_tag(out[i]);
      if (!parsed.begin) continue;
      if (policy == RepairPolicy::Conll) {
        out[i] = "I-" + parsed.label;
      } else {
        out[i] = "O";
      }
    }
    return out;
  }
  // BIO: an I-X that does not continue an entity either starts one (conll)
  // or discards the whole ill-formed run (discard).
  std::string previous_label;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto parsed = parse_tag(out[i]);
    if (parsed.outside) {
      previous_label.clear();
      continue;
    }
    if (!parsed.begin && previous_label != parsed.label) {
      if (policy == RepairPolicy::Conll) {
        out[i] = "B-" + parsed.label;
        previous_label = parsed.label;
      } else {
        // Blank the maximal run of I-X starting here.
        std::size_t j = i;
        while (j < out.size()) {
          const auto run = parse_tag(out[j]);
          if (run.outside || run.begin || run.label != parsed.label) break;
          out[j] = "O";
          ++j;
        }
        i = j - 1;
        previous_label.clear();
      }
    } else {
      previous_label = parsed.label;
    }
  }
  return out;
}

std::vector<std::string> encode_mentions(const std::vector<Mention>& mentions,
                                         std::size_t length, Scheme scheme,
                                         TagLevel level) {
  std::vector<Span> spans;
  spans.reserve(mentions.size());
  for (const auto& mention : mentions) {
    std::string label;
    if (level == TagLevel::One) {
      label = std::string(name(mention.level1));
    } else if (mention.level2) {
      if (parent_of(*mention.level2) != mention.level1) {
        throw InvalidSequenceError("mention level-2 label does not belong to its level-1 class");
      }
      label = std::string(prompt_name(*mention.level2));
    } else {
      label = kUnresolvedSublabel;
    }
    spans.push_back(Span{mention.start, mention.end, std::move(label)});
  }
  return encode_tags(spans, length, scheme);
}

std::vector<Mention> decode_level1(const std::vector<std::string>& tags, Scheme scheme) {
  std::vector<Mention> mentions;
  for (const auto& span : decode_tags(tags, scheme)) {
    Mention m;
    m.start = span.start;
    m.end = span.end;
    m.level1 = resolve_level1(span.label);
    mentions.push_back(m);
  }
  return mentions;
}

std::vector<Violation> check_layer_consistency(
    const std::vector<std::string>& level1_tags,
    const std::vector<std::string>& level2_tags) {
  std::vector<Violation> out;
  const std::size_t n = std::min(level1_tags.size(), level2_tags.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto l1 = parse_tag(level1_tags[i]);
    const auto l2 = parse_tag(level2_tags[i]);
    if (l1.malformed || l2.malformed) {
      out.push_back({i, Violation::Kind::MalformedTag, level2_tags[i]});
      continue;
    }
    if (l1.outside != l2.outside || (!l1.outside && l1.begin != l2.begin)) {
      out.push_back({i, Violation::Kind::InvalidTransition, level2_tags[i]});
      continue;
    }
    if (l1.outside || l2.label == kUnresolvedSublabel) continue;
    auto sub = try_resolve_label(l2.label);
    if (!sub || !std::holds_alternative<Level2Label>(*sub)) {
      out.push_back({i, Violation::Kind::UnknownLabel, level2_tags[i]});
      continue;
    }
    if (name(parent_of(std::get<Level2Label>(*sub))) != l1.label) {
      out.push_back({i, Violation::Kind::UnknownLabel, level2_tags[i]});
    }
  }
  for (std::size_t i = n; i < std::max(level1_tags.size(), level2_tags.size()); ++i) {
    out.push_back({i, Violation::Kind::InvalidTransition, ""});
  }
  return out;
}

}  // namespace gelato

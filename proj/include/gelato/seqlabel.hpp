#ifndef GELATO_SEQLABEL_HPP
#define GELATO_SEQLABEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gelato/ontology.hpp"

namespace gelato {

enum class Scheme { BIO, IO };

enum class RepairPolicy { Conll, Discard };

// Sentinel sublabel written when the router cannot resolve a tag. It is a
// structurally valid level-2 label that never matches any real one.
inline constexpr const char kUnresolvedSublabel[] = "UNRESOLVED";

// A typed contiguous token span; [start, end) with end exclusive.
struct Mention {
  std::size_t start = 0;
  std::size_t end = 0;
  Level1Label level1 = Level1Label::Person;
  std::optional<Level2Label> level2;

  bool operator==(const Mention&) const = default;
};

// An untyped labeled span, the unit the tag algebra works over.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label;

  bool operator==(const Span&) const = default;
};

struct Violation {
  enum class Kind {
    MalformedTag,       // not "O", "B-X" or "I-X"
    UnknownLabel,       // label after the prefix is not in the universe
    InvalidTransition,  // BIO: I-X with no preceding B-X/I-X of the same X
    SchemeViolation,    // IO: B- prefix present
  };
  std::size_t index = 0;
  Kind kind = Kind::MalformedTag;
  std::string tag;

  bool operator==(const Violation&) const = default;
};

std::string_view violation_kind_name(Violation::Kind kind);

// Label universe used for the unknown-label check.
enum class LabelUniverse {
  LevelOne,  // the six top-level class names
  LevelTwo,  // the thirty prompt names plus the UNRESOLVED sentinel
  Any,       // skip the unknown-label check
};

// --- string-level algebra -------------------------------------------------

std::vector<std::string> encode_tags(const std::vector<Span>& spans,
                                     std::size_t length, Scheme scheme);

// Requires a sequence that validates cleanly; throws InvalidSequenceError.
std::vector<Span> decode_tags(const std::vector<std::string>& tags, Scheme scheme);

std::vector<Violation> validate_tags(const std::vector<std::string>& tags,
                                     Scheme scheme,
                                     LabelUniverse universe = LabelUniverse::Any);

// Total: any input comes out validating cleanly. Unknown or malformed tags
// become O under both policies.
std::vector<std::string> repair_tags(const std::vector<std::string>& tags,
                                     Scheme scheme, RepairPolicy policy,
                                     LabelUniverse universe = LabelUniverse::Any);

// --- mention-level wrappers ------------------------------------------------

enum class TagLevel { One, Two };

// Encodes mentions using level-1 names or level-2 prompt names. Mentions
// must be sorted, non-overlapping and inside [0, length); level-2 encoding
// uses kUnresolvedSublabel for mentions without a sublabel.
std::vector<std::string> encode_mentions(const std::vector<Mention>& mentions,
                                         std::size_t length, Scheme scheme,
                                         TagLevel level);

// Decodes a level-1 tag layer into mentions (level2 left empty).
std::vector<Mention> decode_level1(const std::vector<std::string>& tags, Scheme scheme);

// Cross-layer consistency: identical B/I/O skeleton and, for every span,
// parent_of(level-2 label) equal to the level-1 label (UNRESOLVED passes).
std::vector<Violation> check_layer_consistency(
    const std::vector<std::string>& level1_tags,
    const std::vector<std::string>& level2_tags);

}  // namespace gelato

#endif  // GELATO_SEQLABEL_HPP

#ifndef GELATO_ONTOLOGY_HPP
#define GELATO_ONTOLOGY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gelato {

// The six top-level entity classes.
enum class Level1Label {
  Person,
  Organization,
  Document,
  Act,
  Abstraction,
  Class,
};

inline constexpr std::size_t kLevel1Count = 6;

// The thirty subclasses. Each has exactly one Level1Label parent.
enum class Level2Label {
  // Person
  Member,
  Title,
  Name,
  // Organization
  Nation,
  State,
  Locality,
  Committee,
  Agency,
  LegislativeBody,
  InternationalInstitution,
  Association,
  // Document
  Code,
  Bill,
  Reference,
  Parenthetical,
  Treaty,
  Report,
  // Act
  PublicAct,
  Amendment,
  // Abstraction
  Program,
  Session,
  System,
  Infrastructure,
  Fund,
  Doctrine,
  Specification,
  Case,
  Misc,
  // Class
  ProtectedClass,
  NonProtectedClass,
};

inline constexpr std::size_t kLevel2Count = 30;

std::array<Level1Label, kLevel1Count> all_level1();
std::array<Level2Label, kLevel2Count> all_level2();

// Canonical identifier, e.g. "Organization", "LegislativeBody",
// "Non-ProtectedClass". Identifiers are case-sensitive on output.
std::string_view name(Level1Label label);
std::string_view name(Level2Label label);

// Two-to-four letter code from the annotation guidelines, e.g. MBC, PA, LEG.
std::string_view short_code(Level2Label label);

// Spelling used inside prompt possible_tags lists. Same as name() for every
// subclass; kept as a separate accessor because files and prompts are
// distinct surfaces.
std::string_view prompt_name(Level2Label label);

Level1Label parent_of(Level2Label sub);

// Subclasses of a parent, in declaration order.
std::vector<Level2Label> children_of(Level1Label parent);

// The subclass names offered to the sublabel prompt for one parent, in the
// fixed published order. Case and Treaty are valid labels but are absent
// from every routing set.
struct RoutingSet {
  Level1Label parent;
  std::vector<std::string> allowed_prompt_tags;

  // Case-insensitive lookup of a tag against this set.
  std::optional<Level2Label> match(std::string_view text) const;
};

RoutingSet routing_set(Level1Label parent);

using ResolvedLabel = std::variant<Level1Label, Level2Label>;

// Case-insensitive match of `text` against ids, short codes, prompt names,
// and aliases (e.g. "Individual" -> Name, "Non-Protected Class" ->
// Non-ProtectedClass). Throws UnknownLabelError if nothing matches.
ResolvedLabel resolve_label(std::string_view text);
std::optional<ResolvedLabel> try_resolve_label(std::string_view text);

// Level-aware variants for tag-file parsing.
Level1Label resolve_level1(std::string_view text);
Level2Label resolve_level2(std::string_view text);

// The full label system as a deterministic JSON document (sorted keys).
std::string ontology_json();

}  // namespace gelato

#endif  // GELATO_ONTOLOGY_HPP

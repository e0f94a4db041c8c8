#include "gelato/ontology.hpp"

#include <cctype>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "gelato/errors.hpp"

namespace gelato {

namespace {

struct Level2Info {
  Level2Label id;
  Level1Label parent;
  const char* name;        // canonical id and prompt spelling
  const char* short_code;  // guideline code
  bool routable;           // appears in the parent's possible_tags list
};

// Declaration order within each parent follows the guideline tables.
constexpr Level2Info kLevel2Table[kLevel2Count] = {
    {Level2Label::Member, Level1Label::Person, "Member", "MBC", true},
    {Level2Label::Title, Level1Label::Person, "Title", "TTL", true},
    {Level2Label::Name, Level1Label::Person, "Name", "IND", true},

    {Level2Label::Nation, Level1Label::Organization, "Nation", "NAT", true},
    {Level2Label::State, Level1Label::Organization, "State", "STA", true},
    {Level2Label::Locality, Level1Label::Organization, "Locality", "LOC", true},
    {Level2Label::Committee, Level1Label::Organization, "Committee", "COM", true},
    {Level2Label::Agency, Level1Label::Organization, "Agency", "AGC", true},
    {Level2Label::LegislativeBody, Level1Label::Organization, "LegislativeBody", "LEG", true},
    {Level2Label::InternationalInstitution, Level1Label::Organization,
     "InternationalInstitution", "INT", true},
    {Level2Label::Association, Level1Label::Organization, "Association", "ASC", true},

    {Level2Label::Code, Level1Label::Document, "Code", "CODE", true},
    {Level2Label::Bill, Level1Label::Document, "Bill", "BILL", true},
    {Level2Label::Reference, Level1Label::Document, "Reference", "REF", true},
    {Level2Label::Parenthetical, Level1Label::Document, "Parenthetical", "PAR", true},
    {Level2Label::Treaty, Level1Label::Document, "Treaty", "TRE", false},
    {Level2Label::Report, Level1Label::Document, "Report", "REP", true},

    {Level2Label::PublicAct, Level1Label::Act, "PublicAct", "PA", true},
    {Level2Label::Amendment, Level1Label::Act, "Amendment", "AMD", true},

    {Level2Label::Program, Level1Label::Abstraction, "Program", "PRO", true},
    {Level2Label::Session, Level1Label::Abstraction, "Session", "SES", true},
    {Level2Label::System, Level1Label::Abstraction, "System", "SYS", true},
    {Level2Label::Infrastructure, Level1Label::Abstraction, "Infrastructure", "INF", true},
    {Level2Label::Fund, Level1Label::Abstraction, "Fund", "FUND", true},
    {Level2Label::Doctrine, Level1Label::Abstraction, "Doctrine", "DTR", true},
    {Level2Label::Specification, Level1Label::Abstraction, "Specification", "SPC", true},
    {Level2Label::Case, Level1Label::Abstraction, "Case", "CASE", false},
    {Level2Label::Misc, Level1Label::Abstraction, "Misc", "MISC", true},

    {Level2Label::ProtectedClass, Level1Label::Class, "ProtectedClass", "PC", true},
    {Level2Label::NonProtectedClass, Level1Label::Class, "Non-ProtectedClass", "NPC", true},
};

constexpr const char* kLevel1Names[kLevel1Count] = {
    "Person", "Organization", "Document", "Act", "Abstraction", "Class",
};

// Prompt possible_tags per parent, in the published order.
const std::vector<std::string>& routing_tags(Level1Label parent) {
  static const std::vector<std::string> kPerson = {"Member", "Name", "Title"};
  static const std::vector<std::string> kOrganization = {
      "Agency",   "Association",     "Committee", "InternationalInstitution",
      "LegislativeBody", "Locality", "Nation",    "State"};
  static const std::vector<std::string> kDocument = {
      "Bill", "Code", "Parenthetical", "Reference", "Report"};
  static const std::vector<std::string> kAct = {"Amendment", "PublicAct"};
  static const std::vector<std::string> kAbstraction = {
      "Doctrine", "Fund",    "Infrastructure", "Misc",
      "Program",  "Session", "Specification",  "System"};
  static const std::vector<std::string> kClass = {"Non-ProtectedClass", "ProtectedClass"};
  switch (parent) {
    case Level1Label::Person: return kPerson;
    case Level1Label::Organization: return kOrganization;
    case Level1Label::Document: return kDocument;
    case Level1Label::Act: return kAct;
    case Level1Label::Abstraction: return kAbstraction;
    case Level1Label::Class: return kClass;
  }
  throw Error("invalid Level1Label");
}

const Level2Info& info(Level2Label label) {
  for (const auto& row : kLevel2Table) {
    if (row.id == label) return row;
  }
  throw Error("invalid Level2Label");
}

std::string fold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

// Spellings accepted on input beyond the canonical names. Values observed
// in annotation exports and summary tables: spaced subclass names, the
// guideline's "Individual" for Name, and class abbreviations.
const std::unordered_map<std::string, ResolvedLabel>& alias_map() {
  static const std::unordered_map<std::string, ResolvedLabel> kAliases = {
      {"individual", Level2Label::Name},
      {"legislative body", Level2Label::LegislativeBody},
      {"leg. body", Level2Label::LegislativeBody},
      {"international institution", Level2Label::InternationalInstitution},
      {"international", Level2Label::InternationalInstitution},
      {"public act", Level2Label::PublicAct},
      {"protected class", Level2Label::ProtectedClass},
      {"non-protected class", Level2Label::NonProtectedClass},
      {"nonprotectedclass", Level2Label::NonProtectedClass},
      {"per", Level1Label::Person},
      {"org", Level1Label::Organization},
      {"doc", Level1Label::Document},
      {"abs", Level1Label::Abstraction},
      {"cls", Level1Label::Class},
  };
  return kAliases;
}

const std::unordered_map<std::string, ResolvedLabel>& lookup_map() {
  static std::unordered_map<std::string, ResolvedLabel> table = [] {
    std::unordered_map<std::string, ResolvedLabel> m;
    for (std::size_t i = 0; i < kLevel1Count; ++i) {
      m.emplace(fold(kLevel1Names[i]), static_cast<Level1Label>(i));
    }
    for (const auto& row : kLevel2Table) {
      m.emplace(fold(row.name), row.id);
      m.emplace(fold(row.short_code), row.id);
    }
    for (const auto& [key, value] : alias_map()) {
      m.emplace(key, value);
    }
    return m;
  }();
  return table;
}

}  // namespace

std::array<Level1Label, kLevel1Count> all_level1() {
  std::array<Level1Label, kLevel1Count> out{};
  for (std::size_t i = 0; i < kLevel1Count; ++i) out[i] = static_cast<Level1Label>(i);
  return out;
}

std::array<Level2Label, kLevel2Count> all_level2() {
  std::array<Level2Label, kLevel2Count> out{};
  for (std::size_t i = 0; i < kLevel2Count; ++i) out[i] = kLevel2Table[i].id;
  return out;
}

std::string_view name(Level1Label label) {
  return kLevel1Names[static_cast<std::size_t>(label)];
}

std::string_view name(Level2Label label) { return info(label).name; }

std::string_view short_code(Level2Label label) { return info(label).short_code; }

std::string_view prompt_name(Level2Label label) { return info(label).name; }

Level1Label parent_of(Level2Label sub) { return info(sub).parent; }

std::vector<Level2Label> children_of(Level1Label parent) {
  std::vector<Level2Label> out;
  for (const auto& row : kLevel2Table) {
    if (row.parent == parent) out.push_back(row.id);
  }
  return out;
}

std::optional<Level2Label> RoutingSet::match(std::string_view text) const {
  const std::string folded = fold(text);
  for (const auto& tag : allowed_prompt_tags) {
    if (fold(tag) == folded) return resolve_level2(tag);
  }
  return std::nullopt;
}

RoutingSet routing_set(Level1Label parent) {
  return RoutingSet{parent, routing_tags(parent)};
}

std::optional<ResolvedLabel> try_resolve_label(std::string_view text) {
  const auto& table = lookup_map();
  auto it = table.find(fold(text));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

ResolvedLabel resolve_label(std::string_view text) {
  auto found = try_resolve_label(text);
  if (!found) throw UnknownLabelError(std::string(text));
  return *found;
}

Level1Label resolve_level1(std::string_view text) {
  auto found = try_resolve_label(text);
  if (found) {
    if (auto* l1 = std::get_if<Level1Label>(&*found)) return *l1;
  }
  throw UnknownLabelError(std::string(text));
}

Level2Label resolve_level2(std::string_view text) {
  auto found = try_resolve_label(text);
  if (found) {
    if (auto* l2 = std::get_if<Level2Label>(&*found)) return *l2;
  }
  throw UnknownLabelError(std::string(text));
}

std::string ontology_json() {
  nlohmann::json doc;  // nlohmann objects keep keys sorted
  for (auto parent : all_level1()) {
    nlohmann::json entry;
    nlohmann::json subs;
    for (auto sub : children_of(parent)) {
      nlohmann::json s;
      s["short_code"] = std::string(short_code(sub));
      s["prompt_name"] = std::string(prompt_name(sub));
      s["routable"] = routing_set(parent).match(prompt_name(sub)).has_value();
      subs[std::string(name(sub))] = s;
    }
    entry["subclasses"] = subs;
    entry["possible_tags"] = routing_set(parent).allowed_prompt_tags;
    doc[std::string(name(parent))] = entry;
  }
  return doc.dump(2) + "\n";
}

}  // namespace gelato

#include "gelato/document.hpp"

#include <cctype>

#include "gelato/errors.hpp"

namespace gelato {

std::string BillId::type_code() const {
  return chamber == Chamber::House ? "hr" : "s";
}

std::string BillId::str() const {
  return std::to_string(congress) + "-" + type_code() + "-" + std::to_string(number);
}

BillId BillId::parse(const std::string& text) {
  const auto first = text.find('-');
  const auto second = text.find('-', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw ConfigError("bill id must look like 118-hr-189, got: " + text);
  }
  BillId id;
  try {
    id.congress = std::stoi(text.substr(0, first));
    id.number = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    throw ConfigError("bill id must look like 118-hr-189, got: " + text);
  }
  const std::string type = text.substr(first + 1, second - first - 1);
  if (type == "hr") {
    id.chamber = Chamber::House;
  } else if (type == "s") {
    id.chamber = Chamber::Senate;
  } else {
    throw ConfigError("bill type must be hr or s, got: " + type);
  }
  if (id.congress < 1 || id.number < 1) {
    throw ConfigError("bill congress and number must be positive: " + text);
  }
  return id;
}

std::string_view split_name(SplitName s) {
  switch (s) {
    case SplitName::Train: return "train";
    case SplitName::Dev: return "dev";
    case SplitName::Test: return "test";
  }
  return "";
}

void check_document(const Document& doc) {
  for (const auto& token : doc.tokens) {
    if (token.empty()) throw FormatError(0, "empty token in document " + doc.id);
    for (char c : token) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw FormatError(0, "token contains whitespace in document " + doc.id);
      }
    }
  }
  if (doc.level1_tags && doc.level1_tags->size() != doc.tokens.size()) {
    throw LengthMismatchError(doc.id);
  }
  if (doc.level2_tags && doc.level2_tags->size() != doc.tokens.size()) {
    throw LengthMismatchError(doc.id);
  }
  if (doc.level2_tags && !doc.level1_tags) {
    throw FormatError(0, "level-2 tags without level-1 tags in document " + doc.id);
  }
}

}  // namespace gelato

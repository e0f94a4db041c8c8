#ifndef GELATO_DOCUMENT_HPP
#define GELATO_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

namespace gelato {

enum class Chamber { House, Senate };

// Identifier of one bill, e.g. 118-hr-189.
struct BillId {
  int congress = 0;
  Chamber chamber = Chamber::House;
  int number = 0;

  std::string str() const;
  // API path segment: "hr" or "s".
  std::string type_code() const;
  static BillId parse(const std::string& text);

  bool operator==(const BillId&) const = default;
};

// One bill as a token sequence with up to two aligned tag layers.
struct Document {
  std::string id;
  std::vector<std::string> tokens;
  std::optional<std::vector<std::string>> level1_tags;
  std::optional<std::vector<std::string>> level2_tags;

  bool operator==(const Document&) const = default;
};

enum class SplitName { Train, Dev, Test };

std::string_view split_name(SplitName s);

struct SplitManifest {
  std::string name;  // "train", "dev", "test", or a free-form label
  std::vector<Document> documents;

  bool operator==(const SplitManifest&) const = default;
};

// Throws LengthMismatchError if a present tag layer disagrees with the
// token count, or FormatError for empty/whitespace-bearing tokens.
void check_document(const Document& doc);

}  // namespace gelato

#endif  // GELATO_DOCUMENT_HPP

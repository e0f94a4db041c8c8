#include <doctest.h>

#include <sstream>

#include "gelato/conll.hpp"
#include "gelato/errors.hpp"
#include "support/generators.hpp"

using namespace gelato;
using gelato::testing::Rng;

namespace {

SplitManifest roundtrip(const SplitManifest& manifest) {
  std::ostringstream out;
  write_split(manifest, out);
  std::istringstream in(out.str());
  return read_split(in, manifest.name);
}

}  // namespace

TEST_CASE("empty file reads as zero documents") {
  std::istringstream in("");
  const auto manifest = read_split(in, "train");
  CHECK(manifest.documents.empty());
}

TEST_CASE("three-column documents round-trip byte-exactly") {
  SplitManifest manifest;
  manifest.name = "dev";
  Rng rng(42);
  for (int d = 0; d < 25; ++d) {
    manifest.documents.push_back(
        gelato::testing::random_tagged_document(rng, "118-hr-" + std::to_string(100 + d), 60));
  }
  CHECK(roundtrip(manifest) == manifest);

  std::ostringstream first;
  write_split(manifest, first);
  std::ostringstream second;
  write_split(roundtrip(manifest), second);
  CHECK(first.str() == second.str());
}

TEST_CASE("untagged and level-1-only documents are allowed") {
  SplitManifest manifest;
  manifest.name = "raw";
  Document plain;
  plain.id = "a";
  plain.tokens = {"only", "tokens"};
  Document tagged;
  tagged.id = "b";
  tagged.tokens = {"x"};
  tagged.level1_tags = std::vector<std::string>{"O"};
  manifest.documents = {plain, tagged};
  const auto back = roundtrip(manifest);
  CHECK(back == manifest);
  CHECK(!back.documents[0].level1_tags.has_value());
  CHECK(back.documents[1].level1_tags.has_value());
  CHECK(!back.documents[1].level2_tags.has_value());
}

TEST_CASE("missing tag column is a format error with the line number") {
  std::istringstream in("# id = doc1\ntoken\tB-Person\ntoken\n");
  try {
    read_split(in, "x");
    FAIL("expected FormatError");
  } catch (const FormatError& error) {
    CHECK(error.line() == 3);
  }
}

TEST_CASE("rows before an id line are rejected") {
  std::istringstream in("token\tO\n");
  CHECK_THROWS_AS(read_split(in, "x"), FormatError);
}

TEST_CASE("empty columns and overwide rows are rejected") {
  std::istringstream in1("# id = doc1\ntoken\t\n");
  CHECK_THROWS_AS(read_split(in1, "x"), FormatError);
  std::istringstream in2("# id = doc1\na\tO\tO\tO\n");
  CHECK_THROWS_AS(read_split(in2, "x"), FormatError);
}

TEST_CASE("token counts flow through unchanged") {
  SplitManifest manifest;
  manifest.name = "train";
  Rng rng(11);
  std::size_t tokens = 0;
  for (int d = 0; d < 80; ++d) {
    auto doc = gelato::testing::random_tagged_document(rng, "d" + std::to_string(d), 40 + d);
    tokens += doc.tokens.size();
    manifest.documents.push_back(std::move(doc));
  }
  const auto back = roundtrip(manifest);
  std::size_t total = 0;
  for (const auto& doc : back.documents) total += doc.tokens.size();
  CHECK(back.documents.size() == 80);
  CHECK(total == tokens);
}

TEST_CASE("a bare # token is data, not a comment") {
  SplitManifest manifest;
  manifest.name = "hash";
  Document doc;
  doc.id = "d";
  doc.tokens = {"#", "#1", "x"};
  doc.level1_tags = std::vector<std::string>{"O", "O", "O"};
  manifest.documents = {doc};
  CHECK(roundtrip(manifest) == manifest);
}

TEST_CASE("writer refuses documents with mismatched layers") {
  SplitManifest manifest;
  manifest.name = "bad";
  Document doc;
  doc.id = "d";
  doc.tokens = {"a", "b"};
  doc.level1_tags = std::vector<std::string>{"O"};
  manifest.documents = {doc};
  std::ostringstream out;
  CHECK_THROWS_AS(write_split(manifest, out), LengthMismatchError);
}

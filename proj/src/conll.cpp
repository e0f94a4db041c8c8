#include "gelato/conll.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "gelato/errors.hpp"

namespace gelato {

namespace {

constexpr const char kIdPrefix[] = "# id = ";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

struct DocBuilder {
  Document doc;
  int columns = 0;  // 0 until the first row fixes the width
  bool open = false;

  void flush(SplitManifest& manifest) {
    if (!open) return;
    check_document(doc);
    manifest.documents.push_back(std::move(doc));
    doc = Document{};
    columns = 0;
    open = false;
  }
};

}  // namespace

SplitManifest read_split(std::istream& in, const std::string& name) {
  SplitManifest manifest;
  manifest.name = name;
  DocBuilder builder;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      builder.flush(manifest);
      continue;
    }
    if (line.rfind(kIdPrefix, 0) == 0) {
      builder.flush(manifest);
      builder.doc.id = line.substr(sizeof(kIdPrefix) - 1);
      if (builder.doc.id.empty()) throw FormatError(lineno, "empty document id");
      builder.open = true;
      continue;
    }
    // Comments need "# " so a bare "#" token stays data.
    if (line.rfind("# ", 0) == 0) continue;
    if (!builder.open) {
      throw FormatError(lineno, "token row before any '# id =' line");
    }
    const auto cols = split_tabs(line);
    if (cols.size() > 3) {
      throw FormatError(lineno, "expected at most 3 tab-separated columns, got " +
                                    std::to_string(cols.size()));
    }
    if (builder.columns == 0) {
      builder.columns = static_cast<int>(cols.size());
      if (builder.columns >= 2) builder.doc.level1_tags.emplace();
      if (builder.columns == 3) builder.doc.level2_tags.emplace();
    } else if (static_cast<int>(cols.size()) != builder.columns) {
      throw FormatError(lineno, "row has " + std::to_string(cols.size()) +
                                    " columns but document uses " +
                                    std::to_string(builder.columns));
    }
    for (const auto& col : cols) {
      if (col.empty()) throw FormatError(lineno, "empty column");
    }
    for (char c : cols[0]) {
      if (c == ' ') throw FormatError(lineno, "token contains whitespace");
    }
    builder.doc.tokens.push_back(cols[0]);
    if (builder.columns >= 2) builder.doc.level1_tags->push_back(cols[1]);
    if (builder.columns == 3) builder.doc.level2_tags->push_back(cols[2]);
  }
  builder.flush(manifest);
  return manifest;
}

SplitManifest read_split(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open split file: " + path);
  const auto stem = std::filesystem::path(path).stem().string();
  return read_split(in, stem);
}

void write_split(const SplitManifest& manifest, std::ostream& out) {
  bool first = true;
  for (const auto& doc : manifest.documents) {
    check_document(doc);
    if (!first) out << '\n';
    first = false;
    out << kIdPrefix << doc.id << '\n';
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      out << doc.tokens[i];
      if (doc.level1_tags) out << '\t' << (*doc.level1_tags)[i];
      if (doc.level2_tags) out << '\t' << (*doc.level2_tags)[i];
      out << '\n';
    }
  }
}

void write_split(const SplitManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  write_split(manifest, out);
  if (!out) throw ConfigError("failed writing split file: " + path);
}

}  // namespace gelato

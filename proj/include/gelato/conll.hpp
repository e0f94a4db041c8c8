#ifndef GELATO_CONLL_HPP
#define GELATO_CONLL_HPP

#include <iosfwd>
#include <string>

#include "gelato/document.hpp"

namespace gelato {

// Split file format: UTF-8, one token per line, single TAB between columns.
// Column 1 token, column 2 level-1 BIO tag, optional column 3 level-2 BIO
// tag. A `# id = <doc-id>` line precedes each document; documents are
// separated by one blank line. Column counts are uniform within a document.

SplitManifest read_split(std::istream& in, const std::string& name);
SplitManifest read_split(const std::string& path);

void write_split(const SplitManifest& manifest, std::ostream& out);
void write_split(const SplitManifest& manifest, const std::string& path);

}  // namespace gelato

#endif  // GELATO_CONLL_HPP

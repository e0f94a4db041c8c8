#include "gelato/tokenizer.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>

#include "gelato/errors.hpp"

namespace gelato {

namespace {

struct Codepoint {
  char32_t value;
  int bytes;
};

// Decodes one UTF-8 sequence; a malformed byte is passed through as a
// single word character so tokens preserve the input bytes.
Codepoint decode(const std::string& s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1};
  }
  if (i + len > s.size()) return {b0, 1};
  for (int k = 1; k < len; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) return {b0, 1};
    cp = (cp << 6) | (bk & 0x3F);
  }
  return {cp, len};
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U'\t': case U'\n': case U'\v': case U'\f': case U'\r': case U' ':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
  if (cp >= 0x2010 && cp <= 0x2027) return true;  // dashes, quotes, bullets
  if (cp >= 0x2030 && cp <= 0x205E) return true;  // primes, brackets
  switch (cp) {
    case 0x00A1: case 0x00AB: case 0x00B6: case 0x00B7: case 0x00BB:
    case 0x00BF:
      return true;
    default:
      return false;
  }
}

bool is_upper_ascii(char c) { return c >= 'A' && c <= 'Z'; }

// Length of a capital dotted abbreviation anchored at i: one or two
// uppercase letters before each period, at least one group. 0 if no match.
std::size_t match_abbreviation(const std::string& s, std::size_t i) {
  std::size_t j = i;
  std::size_t groups = 0;
  while (j < s.size()) {
    std::size_t letters = 0;
    std::size_t k = j;
    while (k < s.size() && letters < 2 && is_upper_ascii(s[k])) {
      ++k;
      ++letters;
    }
    if (letters == 0 || k >= s.size() || s[k] != '.') break;
    j = k + 1;
    ++groups;
  }
  return groups > 0 ? j - i : 0;
}

// Splits one whitespace-free chunk into tokens.
void emit_chunk(const std::string& chunk, const std::set<std::string>& keep,
                std::vector<std::string>& out) {
  if (keep.count(chunk)) {
    out.push_back(chunk);
    return;
  }
  std::size_t i = 0;
  const std::size_t n = chunk.size();
  while (i < n) {
    if (std::size_t abbrev = match_abbreviation(chunk, i)) {
      out.push_back(chunk.substr(i, abbrev));
      i += abbrev;
      continue;
    }
    const Codepoint first = decode(chunk, i);
    if (is_punct_cp(first.value)) {
      // Run of the same punctuation character: one token (``, '', --).
      std::size_t j = i + first.bytes;
      while (j < n) {
        const Codepoint next = decode(chunk, j);
        if (next.value != first.value) break;
        j += next.bytes;
      }
      out.push_back(chunk.substr(i, j - i));
      i = j;
      continue;
    }
    // Word: non-punctuation characters, plus single hyphens joining them.
    // Abbreviations are only recognized at token starts, so SEC. still
    // splits as SEC + period.
    std::size_t j = i + first.bytes;
    while (j < n) {
      const Codepoint next = decode(chunk, j);
      if (next.value == U'-') {
        const std::size_t after = j + 1;
        if (after >= n) break;
        const Codepoint follow = decode(chunk, after);
        if (follow.value == U'-' || is_punct_cp(follow.value)) break;
        j = after + follow.bytes;
        continue;
      }
      if (is_punct_cp(next.value)) break;
      j += next.bytes;
    }
    out.push_back(chunk.substr(i, j - i));
    i = j;
  }
}

}  // namespace

void Tokenizer::load_keep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open keep-list file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    add_keep(line);
  }
}

std::vector<std::string> Tokenizer::tokenize(const std::string& text) const {
  std::vector<std::string> out;
  std::string chunk;
  std::size_t i = 0;
  while (i <= text.size()) {
    bool at_end = i == text.size();
    Codepoint cp{U' ', 1};
    if (!at_end) cp = decode(text, i);
    if (at_end || is_space_cp(cp.value)) {
      if (!chunk.empty()) {
        emit_chunk(chunk, keep_, out);
        chunk.clear();
      }
      if (at_end) break;
    } else {
      chunk.append(text, i, static_cast<std::size_t>(cp.bytes));
    }
    i += static_cast<std::size_t>(cp.bytes);
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& text) {
  static const Tokenizer kDefault;
  return kDefault.tokenize(text);
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace gelato

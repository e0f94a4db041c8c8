#ifndef GELATO_TOKENIZER_HPP
#define GELATO_TOKENIZER_HPP

#include <set>
#include <string>
#include <vector>

namespace gelato {

// Whitespace segmentation followed by punctuation splitting.
//
// Every punctuation character becomes its own token, with three exceptions:
//   - capital dotted abbreviations such as U.S.C., S., H.R. (one or two
//     uppercase letters before each period) stay whole;
//   - a single hyphen between two alphanumerics stays inside the word
//     (pre-placement, Old-Age);
//   - a run of the same punctuation character is one token, so the paired
//     quote marks `` and '' and the dash -- come out standalone.
//
// Joining the output with single spaces and re-tokenizing is a fixed point.
class Tokenizer {
 public:
  Tokenizer() = default;

  // Extra whitespace-delimited chunks to keep whole, beyond the
  // abbreviation pattern.
  void add_keep(std::string chunk) { keep_.insert(std::move(chunk)); }
  void load_keep_file(const std::string& path);

  std::vector<std::string> tokenize(const std::string& text) const;

 private:
  std::set<std::string> keep_;
};

// One-off call with the default keep-list.
std::vector<std::string> tokenize(const std::string& text);

// Inverse-ish of tokenize: tokens joined by single spaces.
std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace gelato

#endif  // GELATO_TOKENIZER_HPP

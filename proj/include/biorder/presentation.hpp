#pragma once

// Line-oriented presentation files for Z x F_n groups:
//
//   # comment
//   name: trefoil
//   fibered: true
//   generators: a b
//   map:
//     a -> b
//     b -> b A
//   inverse:
//     a -> B a
//     b -> a
//
// Uppercase letters are inverses and "e" is the identity word.

#include "biorder/verdict.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biorder {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct PresentationFile {
  std::vector<std::string> comments;  // leading comment lines, without "# "
  KnotRecord record;
};

PresentationFile parse_presentation_file(std::string_view text);
KnotRecord parse_presentation(std::string_view text);
/// Canonical form; parse followed by serialize reproduces canonical files
/// byte for byte.
std::string serialize(const PresentationFile& file);

struct CorpusEntry {
  std::string key;  // the name after "corpus:"
  std::string text;
  Outcome expected;
  int expected_level;
  std::string expected_rule;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus_entry(std::string_view key);

}  // namespace biorder

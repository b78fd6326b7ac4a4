#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "typoster/rng.hpp"

namespace typoster {

// Lowercase abbreviations without the trailing period ("dr", "mr", "etc", "sr", "mme").
const std::unordered_set<std::string>& default_abbreviations();

// Rule-based sentence boundary detection. A run of . ! ? or … ends a sentence
// when followed by whitespace and then an uppercase letter, a digit, a line
// break or the end of the text, unless the word before it is a known
// abbreviation or a single-letter initial.
std::vector<std::string> split_sentences(std::string_view text,
                                         const std::unordered_set<std::string>& abbreviations = default_abbreviations());

struct LineRange {
  std::size_t min_chars = 8;
  std::size_t max_chars = 16;
};

// Breaks sentences longer than max_chars at the word boundary nearest a
// uniformly drawn target length, recursively. Throws DegenerateRange.
std::vector<std::string> divide_lines(const std::vector<std::string>& sentences, const LineRange& range, Rng& rng);

}  // namespace typoster

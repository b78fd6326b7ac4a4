#include "typoster/textsplit.hpp"

#include <cstdlib>

#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

bool is_terminal(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'…'; }

bool is_closing(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' || cp == U'”' || cp == U'’' || cp == U'»';
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Word immediately before position `end` (exclusive), lowercased, stripped of
// leading punctuation.
std::u32string word_before(const std::u32string& text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_space(text[begin - 1])) {
    --begin;
  }
  std::u32string word = text.substr(begin, end - begin);
  std::size_t lead = 0;
  while (lead < word.size() && !is_letter(word[lead]) && !is_digit(word[lead])) {
    ++lead;
  }
  word.erase(0, lead);
  for (auto& cp : word) {
    cp = to_lower(cp);
  }
  return word;
}

}  // namespace

const std::unordered_set<std::string>& default_abbreviations() {
  static const std::unordered_set<std::string> kAbbreviations{
      "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc", "e.g", "i.e", "inc", "ltd", "co",
      "jan", "feb", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec", "mt", "ave",
      "sra", "srs", "dra", "av", "pág", "mme", "mlle", "mm", "cf", "p", "pp", "vol", "fig"};
  return kAbbreviations;
}

std::vector<std::string> split_sentences(std::string_view text, const std::unordered_set<std::string>& abbreviations) {
  const auto cps = utf8_decode(text);
  std::vector<std::string> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    auto s = trim(utf8_encode(std::u32string_view(cps).substr(begin, end - begin)));
    if (!s.empty()) {
      sentences.push_back(std::move(s));
    }
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_terminal(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t punct_begin = i;
    std::size_t j = i;
    while (j < cps.size() && (is_terminal(cps[j]) || is_closing(cps[j]))) {
      ++j;
    }
    const std::size_t punct_end = j;
    bool newline = false;
    std::size_t k = j;
    while (k < cps.size() && is_space(cps[k])) {
      newline = newline || cps[k] == U'\n' || cps[k] == U'\r';
      ++k;
    }
    const bool at_end = k >= cps.size();
    const bool spaced = k > j;
    bool boundary = at_end || (spaced && (newline || is_upper(cps[k]) || is_digit(cps[k])));
    if (boundary && !at_end && cps[punct_begin] == U'.' && punct_end == punct_begin + 1) {
      // A lone period may belong to an abbreviation or an initial.
      const auto word = word_before(cps, punct_begin);
      const bool initial = word.size() == 1 && is_letter(word[0]);
      if (initial || abbreviations.contains(utf8_encode(word))) {
        boundary = newline;
      }
    }
    if (boundary) {
      emit(start, punct_end);
      start = punct_end;
    }
    i = punct_end;
  }
  emit(start, cps.size());
  return sentences;
}

std::vector<std::string> divide_lines(const std::vector<std::string>& sentences, const LineRange& range, Rng& rng) {
  if (range.min_chars == 0 || range.min_chars > range.max_chars) {
    throw DegenerateRange("line range needs 0 < min_chars <= max_chars");
  }
  std::vector<std::string> lines;
  for (const auto& sentence : sentences) {
    auto words = split_whitespace(sentence);
    std::size_t first = 0;
    while (first < words.size()) {
      // Remaining text joined by single spaces.
      std::vector<std::size_t> ends;  // code-point length of the head ending after word w
      std::size_t length = 0;
      for (std::size_t w = first; w < words.size(); ++w) {
        length += (w == first ? 0 : 1) + utf8_length(words[w]);
        ends.push_back(length);
      }
      std::size_t take = words.size() - first;
      if (ends.back() > range.max_chars) {
        const auto target = static_cast<std::size_t>(rng.uniform_int(
            static_cast<std::int64_t>(range.min_chars), static_cast<std::int64_t>(range.max_chars)));
        take = 1;
        std::size_t best_gap = static_cast<std::size_t>(-1);
        for (std::size_t n = 1; n < ends.size(); ++n) {
          const std::size_t head = ends[n - 1];
          if (head > range.max_chars) {
            break;
          }
          const std::size_t gap = head > target ? head - target : target - head;
          if (gap < best_gap) {
            best_gap = gap;
            take = n;
          }
        }
      }
      std::string line;
      for (std::size_t w = first; w < first + take; ++w) {
        if (w > first) {
          line.push_back(' ');
        }
        line += words[w];
      }
      lines.push_back(std::move(line));
      first += take;
    }
  }
  return lines;
}

}  // namespace typoster

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace typoster {

// Index order of an EmotionVector. The eight emotions come first, alphabetically.
enum class Emotion { anger, anticipation, disgust, fear, joy, sadness, surprise, trust, positive, negative };

inline constexpr std::size_t kEmotionCount = 10;
inline constexpr std::size_t kChargedEmotionCount = 8;

std::string_view to_string(Emotion e);
std::optional<Emotion> parse_emotion(std::string_view name);

using EmotionVector = std::array<int, kEmotionCount>;

class EmotionLexicon {
 public:
  // NRC-EmoLex style rows: word<TAB>emotion<TAB>0|1. Blank lines and '#' comments are skipped.
  static EmotionLexicon from_tsv(std::string_view tsv);
  static EmotionLexicon load(const std::filesystem::path& path);

  void set(const std::string& word, Emotion e, bool flag);
  // Case-insensitive; nullptr when the word is absent.
  const EmotionVector* lookup(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_map<std::string, EmotionVector> words_;
};

struct ResourceMaps {
  std::string language;
  std::unordered_map<std::string, std::string> contractions;
  std::unordered_map<std::string, std::string> slang;
  std::unordered_map<std::string, std::string> emoji;
  std::unordered_map<std::string, std::string> antonyms;
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> negations;
};

// Reads contractions/slang/emoji/antonyms JSON maps and stopwords.<lang>.txt
// from `dir`. Throws UnsupportedLanguage when the stopword list is missing.
ResourceMaps load_resources(const std::filesystem::path& dir, const std::string& language);

// Six steps in order: contractions, slang/abbreviations, emoji, negation to
// antonym, stopword and URL removal, tokenisation. Returns lowercase tokens.
std::vector<std::string> preprocess(std::string_view line, const ResourceMaps& resources);

struct LineEmotion {
  EmotionVector vector{};
  int charge = 0;
  std::string dominant = "neutral";
};

struct EmotionProfile {
  std::vector<LineEmotion> lines;
  std::string dominant = "neutral";
  std::vector<double> optimal_heights;

  std::vector<int> charges() const;
};

EmotionProfile score_lines(const std::vector<std::vector<std::string>>& lines, const EmotionLexicon& lexicon);

// Percent of the available height per line: 100 (1 + charge_i) / sum_j (1 + charge_j).
std::vector<double> optimal_layout(const EmotionProfile& profile);

// preprocess + score_lines + optimal_layout.
EmotionProfile analyse_lines(const std::vector<std::string>& lines, const ResourceMaps& resources,
                             const EmotionLexicon& lexicon);

// A profile where every line carries the given charge; handy for metric work.
EmotionProfile profile_from_charges(const std::vector<int>& charges);

nlohmann::ordered_json to_json(const EmotionProfile& profile, const std::vector<std::string>& lines);

}  // namespace typoster

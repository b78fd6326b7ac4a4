#include "typoster/emotion.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

constexpr std::array<std::string_view, kEmotionCount> kEmotionNames{
    "anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust", "positive", "negative"};

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ResourceError("cannot read resource '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::unordered_map<std::string, std::string> read_map(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ResourceError("malformed resource '" + path.string() + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw ResourceError("resource '" + path.string() + "' must be a flat object");
  }
  std::unordered_map<std::string, std::string> out;
  for (const auto& [k, v] : doc.items()) {
    if (!v.is_string()) {
      throw ResourceError("resource '" + path.string() + "': value for '" + k + "' must be a string");
    }
    out.emplace(to_lower(k), to_lower(v.get<std::string>()));
  }
  return out;
}

std::unordered_set<std::string> negations_for(const std::string& language) {
  if (language == "pt") {
    return {"não", "nao", "nunca", "nem", "jamais"};
  }
  if (language == "fr") {
    return {"ne", "pas", "jamais", "non", "aucun"};
  }
  return {"not", "no", "never", "n't", "nor"};
}

bool is_word_char(char32_t cp) { return is_letter(cp) || (cp >= U'0' && cp <= U'9'); }

// Strips everything that is not a letter or digit from both ends.
struct Core {
  std::string prefix;
  std::string core;
  std::string suffix;
};

Core split_core(std::string_view token) {
  const auto cps = utf8_decode(token);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && !is_word_char(cps[b])) {
    ++b;
  }
  while (e > b && !is_word_char(cps[e - 1])) {
    --e;
  }
  const std::u32string_view view(cps);
  return {utf8_encode(view.substr(0, b)), utf8_encode(view.substr(b, e - b)), utf8_encode(view.substr(e))};
}

std::string normalize_apostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8_decode(text)) {
    utf8_append(out, (cp == U'’' || cp == U'‘' || cp == U'`') ? U'\'' : cp);
  }
  return out;
}

void append_words(std::vector<std::string>& out, std::string_view text) {
  for (auto& w : split_whitespace(text)) {
    out.push_back(std::move(w));
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_url(std::string_view token) {
  return token.starts_with("http://") || token.starts_with("https://") || token.starts_with("www.") ||
         token.starts_with("ftp://");
}

// French elided articles and pronouns ("l'amour" -> "le amour").
std::optional<std::string> expand_elision(const std::string& core) {
  static const std::array<std::pair<std::string_view, std::string_view>, 9> kElisions{{
      {"l'", "le"}, {"d'", "de"}, {"j'", "je"}, {"n'", "ne"}, {"qu'", "que"},
      {"c'", "ce"}, {"s'", "se"}, {"m'", "me"}, {"t'", "te"}}};
  for (const auto& [prefix, word] : kElisions) {
    if (core.size() > prefix.size() && core.starts_with(prefix)) {
      return std::string(word) + " " + core.substr(prefix.size());
    }
  }
  return std::nullopt;
}

// Steps (i) and (ii): whole-token replacement through a lookup map.
std::vector<std::string> replace_tokens(const std::vector<std::string>& tokens,
                                        const std::unordered_map<std::string, std::string>& map,
                                        bool expand_nt, bool expand_elisions = false) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto parts = split_core(token);
    const auto it = map.find(parts.core);
    std::string replacement;
    if (it != map.end()) {
      replacement = it->second;
    } else if (expand_nt && ends_with(parts.core, "n't") && parts.core.size() > 3) {
      replacement = parts.core.substr(0, parts.core.size() - 3) + " not";
    } else if (auto elided = expand_elisions ? expand_elision(parts.core) : std::nullopt) {
      replacement = *elided;
    } else {
      out.push_back(token);
      continue;
    }
    append_words(out, parts.prefix);
    append_words(out, replacement);
    append_words(out, parts.suffix);
  }
  return out;
}

std::vector<std::string> substitute_emoji(const std::vector<std::string>& tokens,
                                          const std::unordered_map<std::string, std::string>& emoji) {
  if (emoji.empty()) {
    return tokens;
  }
  std::size_t longest = 0;
  for (const auto& [k, v] : emoji) {
    longest = std::max(longest, k.size());
  }
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    std::string rebuilt;
    bool changed = false;
    std::size_t i = 0;
    while (i < token.size()) {
      bool matched = false;
      for (std::size_t len = std::min(longest, token.size() - i); len > 0; --len) {
        const auto it = emoji.find(token.substr(i, len));
        if (it != emoji.end()) {
          rebuilt += " " + it->second + " ";
          i += len;
          matched = true;
          changed = true;
          break;
        }
      }
      if (!matched) {
        rebuilt.push_back(token[i]);
        ++i;
      }
    }
    if (changed) {
      append_words(out, rebuilt);
    } else {
      out.push_back(token);
    }
  }
  return out;
}

std::vector<std::string> negations_to_antonyms(const std::vector<std::string>& tokens, const ResourceMaps& res) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto core = split_core(tokens[i]).core;
    const bool negation = res.negations.contains(core) || res.negations.contains(tokens[i]);
    if (negation && i + 1 < tokens.size()) {
      const auto next = split_core(tokens[i + 1]);
      const auto it = res.antonyms.find(next.core);
      if (it != res.antonyms.end()) {
        append_words(out, it->second);
        append_words(out, next.suffix);
        ++i;
        continue;
      }
    }
    out.push_back(tokens[i]);
  }
  return out;
}

std::vector<std::string> remove_stopwords_and_urls(const std::vector<std::string>& tokens, const ResourceMaps& res) {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    const auto core = split_core(token).core;
    if (is_url(token) || is_url(core) || res.stopwords.contains(core)) {
      continue;
    }
    out.push_back(token);
  }
  return out;
}

// Keeps the letter/digit core of every token; internal punctuation survives
// ("u.s", "rock-n-roll") so a second pass sees the same tokens.
std::vector<std::string> tokenise(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    auto core = split_core(token).core;
    if (!core.empty()) {
      out.push_back(std::move(core));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Emotion e) { return kEmotionNames[static_cast<std::size_t>(e)]; }

std::optional<Emotion> parse_emotion(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionNames.size(); ++i) {
    if (kEmotionNames[i] == name) {
      return static_cast<Emotion>(i);
    }
  }
  return std::nullopt;
}

EmotionLexicon EmotionLexicon::from_tsv(std::string_view tsv) {
  EmotionLexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= tsv.size()) {
    const auto nl = tsv.find('\n', pos);
    auto line = tsv.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? tsv.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw ResourceError("lexicon line " + std::to_string(line_no) + ": expected word<TAB>emotion<TAB>flag");
    }
    const auto word = line.substr(0, t1);
    const auto emotion = parse_emotion(line.substr(t1 + 1, t2 - t1 - 1));
    const auto flag = line.substr(t2 + 1);
    if (!emotion) {
      throw ResourceError("lexicon line " + std::to_string(line_no) + ": unknown emotion");
    }
    if (flag != "0" && flag != "1") {
      throw ResourceError("lexicon line " + std::to_string(line_no) + ": flag must be 0 or 1");
    }
    lex.set(std::string(word), *emotion, flag == "1");
  }
  return lex;
}

EmotionLexicon EmotionLexicon::load(const std::filesystem::path& path) { return from_tsv(read_text(path)); }

void EmotionLexicon::set(const std::string& word, Emotion e, bool flag) {
  auto& v = words_[to_lower(word)];
  v[static_cast<std::size_t>(e)] = flag ? 1 : 0;
}

const EmotionVector* EmotionLexicon::lookup(std::string_view word) const {
  const auto it = words_.find(to_lower(word));
  return it == words_.end() ? nullptr : &it->second;
}

ResourceMaps load_resources(const std::filesystem::path& dir, const std::string& language) {
  const auto stopword_path = dir / ("stopwords." + language + ".txt");
  if (!std::filesystem::exists(stopword_path)) {
    throw UnsupportedLanguage("no stopword list for language '" + language + "' in " + dir.string());
  }
  ResourceMaps res;
  res.language = language;
  res.contractions = read_map(dir / "contractions.json");
  res.slang = read_map(dir / "slang.json");
  res.emoji = read_map(dir / "emoji.json");
  res.antonyms = read_map(dir / "antonyms.json");
  std::istringstream lines(read_text(stopword_path));
  std::string word;
  while (std::getline(lines, word)) {
    word = trim(word);
    if (!word.empty() && word.front() != '#') {
      res.stopwords.insert(to_lower(word));
    }
  }
  res.negations = negations_for(language);
  return res;
}

std::vector<std::string> preprocess(std::string_view line, const ResourceMaps& resources) {
  auto tokens = split_whitespace(to_lower(normalize_apostrophes(line)));
  tokens = replace_tokens(tokens, resources.contractions, resources.language == "en",
                          resources.language == "fr");                       // (i)
  tokens = replace_tokens(tokens, resources.slang, false);         // (ii)
  tokens = substitute_emoji(tokens, resources.emoji);              // (iii)
  tokens = negations_to_antonyms(tokens, resources);               // (iv)
  tokens = remove_stopwords_and_urls(tokens, resources);           // (v)
  return tokenise(tokens);                                         // (vi)
}

std::vector<int> EmotionProfile::charges() const {
  std::vector<int> out;
  out.reserve(lines.size());
  for (const auto& l : lines) {
    out.push_back(l.charge);
  }
  return out;
}

namespace {

std::string dominant_of(const EmotionVector& v) {
  int best = 0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < kChargedEmotionCount; ++i) {
    if (v[i] > best) {
      best = v[i];
      arg = i;
    }
  }
  return best == 0 ? std::string("neutral") : std::string(kEmotionNames[arg]);
}

}  // namespace

EmotionProfile score_lines(const std::vector<std::vector<std::string>>& lines, const EmotionLexicon& lexicon) {
  EmotionProfile profile;
  EmotionVector total{};
  for (const auto& tokens : lines) {
    LineEmotion line;
    for (const auto& token : tokens) {
      if (const auto* flags = lexicon.lookup(token)) {
        for (std::size_t i = 0; i < kEmotionCount; ++i) {
          line.vector[i] += (*flags)[i];
        }
      }
    }
    line.charge = std::accumulate(line.vector.begin(), line.vector.begin() + kChargedEmotionCount, 0);
    line.dominant = dominant_of(line.vector);
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
      total[i] += line.vector[i];
    }
    profile.lines.push_back(std::move(line));
  }
  profile.dominant = dominant_of(total);
  return profile;
}

std::vector<double> optimal_layout(const EmotionProfile& profile) {
  double total = 0.0;
  for (const auto& line : profile.lines) {
    total += 1.0 + line.charge;
  }
  std::vector<double> heights;
  heights.reserve(profile.lines.size());
  for (const auto& line : profile.lines) {
    heights.push_back(100.0 * (1.0 + line.charge) / total);
  }
  return heights;
}

EmotionProfile analyse_lines(const std::vector<std::string>& lines, const ResourceMaps& resources,
                             const EmotionLexicon& lexicon) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(lines.size());
  for (const auto& line : lines) {
    tokens.push_back(preprocess(line, resources));
  }
  auto profile = score_lines(tokens, lexicon);
  profile.optimal_heights = optimal_layout(profile);
  return profile;
}

EmotionProfile profile_from_charges(const std::vector<int>& charges) {
  EmotionProfile profile;
  EmotionVector total{};
  for (int c : charges) {
    LineEmotion line;
    line.vector[static_cast<std::size_t>(Emotion::joy)] = c;
    line.charge = c;
    line.dominant = dominant_of(line.vector);
    total[static_cast<std::size_t>(Emotion::joy)] += c;
    profile.lines.push_back(line);
  }
  profile.dominant = dominant_of(total);
  profile.optimal_heights = optimal_layout(profile);
  return profile;
}

nlohmann::ordered_json to_json(const EmotionProfile& profile, const std::vector<std::string>& lines) {
  nlohmann::ordered_json doc;
  doc["dominant"] = profile.dominant;
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < profile.lines.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["line"] = i < lines.size() ? lines[i] : std::string{};
    nlohmann::ordered_json vec;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      vec[std::string(kEmotionNames[e])] = profile.lines[i].vector[e];
    }
    entry["emotions"] = vec;
    entry["charge"] = profile.lines[i].charge;
    entry["dominant"] = profile.lines[i].dominant;
    entry["optimalHeight"] = i < profile.optimal_heights.size() ? profile.optimal_heights[i] : 0.0;
    arr.push_back(entry);
  }
  doc["lines"] = arr;
  return doc;
}

}  // namespace typoster

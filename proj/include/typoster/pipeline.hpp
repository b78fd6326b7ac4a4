#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typoster/config.hpp"

namespace typoster {

// Fonts and language resources named by a config.
struct LoadedResources {
  FontCatalog fonts;
  ResourceMaps language;
  EmotionLexicon lexicon;
};

// Throws ResourceError, UnsupportedLanguage, ParseError, EmptyCatalog.
LoadedResources load_resources(const AppConfig& config);

// Sentence split followed by line division; the division draws from an Rng
// seeded with `seed`.
std::vector<std::string> text_to_lines(std::string_view text, const LineRange& range, std::uint64_t seed);

// Non-empty trimmed lines of a pre-split text.
std::vector<std::string> parse_lines(std::string_view text);

EvaluationContext make_context(const AppConfig& config, const LoadedResources& resources,
                               const std::vector<std::string>& lines);

PosterGenotype read_genotype_file(const std::filesystem::path& path, const FontCatalog& fonts,
                                  const GenotypeLimits& limits);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace typoster

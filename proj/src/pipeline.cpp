#include "typoster/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

LoadedResources load_resources(const AppConfig& config) {
  LoadedResources r;
  r.fonts = load_catalog(config.fonts);
  r.language = load_resources(config.emotion.resources_dir, config.emotion.language);
  r.lexicon = EmotionLexicon::load(config.emotion.lexicon);
  return r;
}

std::vector<std::string> text_to_lines(std::string_view text, const LineRange& range, std::uint64_t seed) {
  Rng rng(seed);
  return divide_lines(split_sentences(text), range, rng);
}

std::vector<std::string> parse_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  return lines;
}

EvaluationContext make_context(const AppConfig& config, const LoadedResources& resources,
                               const std::vector<std::string>& lines) {
  EvaluationContext ctx;
  ctx.fonts = &resources.fonts;
  ctx.colors = config.color_scheme();
  ctx.layout = config.layout;
  ctx.profile = analyse_lines(lines, resources.language, resources.lexicon);
  ctx.weights = config.weights;
  ctx.params = config.metrics;
  ctx.stage = config.evolution.stage;
  return ctx;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ResourceError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

PosterGenotype read_genotype_file(const std::filesystem::path& path, const FontCatalog& fonts,
                                  const GenotypeLimits& limits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SchemaError("cannot read genotype file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_genotype(buf.str(), fonts, limits);
}

}  // namespace typoster

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "typoster/config.hpp"
#include "typoster/errors.hpp"
#include "typoster/pipeline.hpp"
#include "typoster/render.hpp"
#include "typoster/text_util.hpp"

namespace fs = std::filesystem;
using namespace typoster;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> stage;
  std::optional<int> generations;
  std::optional<int> population;
  std::optional<int> threads;
  std::optional<std::string> lang;
  std::optional<std::string> text;
  std::string lines_file;
  std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--stage", f.stage, "objective stage")->check(CLI::IsMember({"S1", "S2", "S3"}));
  cmd->add_option("--generations", f.generations, "number of generations");
  cmd->add_option("--population", f.population, "population size");
  cmd->add_option("--threads", f.threads, "fitness evaluation threads");
  cmd->add_option("--lang", f.lang, "emotion language (en, pt, fr)");
  cmd->add_option("--text", f.text, "input text (stdin when absent)");
  cmd->add_option("--lines-file", f.lines_file, "one poster line per line, skips splitting");
  cmd->add_option("--out-dir", f.out_dir, "output directory");
}

AppConfig build_config(const CommonFlags& f) {
  AppConfig config = f.config_path.empty() ? AppConfig::defaults() : load_config(f.config_path);
  ConfigOverrides o;
  o.seed = f.seed;
  if (f.stage) {
    o.stage = parse_stage(*f.stage);
  }
  o.generations = f.generations;
  o.population = f.population;
  o.threads = f.threads;
  o.language = f.lang;
  apply_overrides(config, o);
  return config;
}

std::vector<std::string> input_lines(const CommonFlags& f, const AppConfig& config) {
  if (!f.lines_file.empty()) {
    std::string text;
    try {
      text = read_file(f.lines_file);
    } catch (const ResourceError& e) {
      throw ConfigError(e.what());
    }
    auto lines = parse_lines(text);
    if (lines.empty()) {
      throw ConfigError("lines file is empty");
    }
    return lines;
  }
  std::string text;
  if (f.text) {
    text = *f.text;
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  auto lines = text_to_lines(text, config.split, config.evolution.seed);
  if (lines.empty()) {
    throw ConfigError("no input text");
  }
  return lines;
}

std::string run_id(const AppConfig& config) {
  return "s" + std::to_string(config.evolution.seed) + "_" + std::string(to_string(config.evolution.stage));
}

// Chart topics per stage: the stage's own metrics plus the legibility pair.
std::vector<std::pair<std::string, std::vector<std::string>>> chart_topics(Stage stage) {
  std::vector<std::pair<std::string, std::vector<std::string>>> topics;
  topics.push_back({"fitness", {"objective", "penalty"}});
  topics.push_back({"legibility", {"text_legibility", "grid_appropriateness", "penalty"}});
  if (stage != Stage::S2) {
    topics.push_back({"semantics", {"semantic_layout", "semantic_typography", "penalty"}});
  }
  if (stage != Stage::S1) {
    topics.push_back({"aesthetics",
                      {"alignment", "regularity", "balance", "justification", "typeface_pairing", "negative_space",
                       "penalty"}});
  }
  return topics;
}

int cmd_evolve(const CommonFlags& f, int top) {
  const AppConfig config = build_config(f);
  const auto lines = input_lines(f, config);
  const LoadedResources res = load_resources(config);
  const EvaluationContext ctx = make_context(config, res, lines);
  const EvolutionResult result = evolve(lines, config.poster, config.evolution, ctx);

  const fs::path out(f.out_dir);
  const std::string id = run_id(config);
  const std::string gen = std::to_string(config.evolution.generations);
  const ColorScheme colors = config.color_scheme();
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(top, 1)), result.population.size());
  for (std::size_t rank = 0; rank < count; ++rank) {
    const auto& g = result.population[rank].genotype();
    const auto layout = resolve_layout(g, res.fonts, colors, config.layout);
    write_file(out / ("poster_" + id + "_" + gen + "_" + std::to_string(rank + 1) + ".svg"),
               render_poster_svg(g, layout, colors));
  }
  write_file(out / ("stats_" + id + ".csv"), result.stats.to_csv());
  for (const auto& [topic, series] : chart_topics(config.evolution.stage)) {
    write_file(out / ("chart_" + id + "_" + topic + ".svg"), plot_run_stats(result.stats, series, topic));
  }
  write_file(out / ("best_" + id + ".json"), serialize_genotype(result.best.genotype()) + "\n");
  const std::string report = to_json(result.best.report()).dump(2);
  write_file(out / ("report_" + id + ".json"), report + "\n");
  std::cout << report << "\n";
  return 0;
}

int cmd_evaluate(const CommonFlags& f, const std::string& genotype_path) {
  const AppConfig config = build_config(f);
  const LoadedResources res = load_resources(config);
  const PosterGenotype g = read_genotype_file(genotype_path, res.fonts, config.evolution.font_size_range);
  std::vector<std::string> lines;
  for (const auto& box : g.textboxes) {
    lines.push_back(box.content);
  }
  const EvaluationContext ctx = make_context(config, res, lines);
  std::cout << to_json(ctx.evaluate(g)).dump(2) << "\n";
  return 0;
}

int cmd_config(const CommonFlags& f) {
  std::cout << to_json(build_config(f)).dump(2) << "\n";
  return 0;
}

int cmd_split(const CommonFlags& f) {
  const AppConfig config = build_config(f);
  std::cout << nlohmann::json(input_lines(f, config)).dump() << "\n";
  return 0;
}

int cmd_emotions(const CommonFlags& f) {
  const AppConfig config = build_config(f);
  const auto lines = input_lines(f, config);
  const auto resources = load_resources(config.emotion.resources_dir, config.emotion.language);
  const auto lexicon = EmotionLexicon::load(config.emotion.lexicon);
  std::cout << to_json(analyse_lines(lines, resources, lexicon), lines).dump(2) << "\n";
  return 0;
}

int cmd_render(const CommonFlags& f, const std::string& genotype_path, const std::string& out_path) {
  const AppConfig config = build_config(f);
  const FontCatalog fonts = load_catalog(config.fonts);
  const PosterGenotype g = read_genotype_file(genotype_path, fonts, config.evolution.font_size_range);
  const ColorScheme colors = config.color_scheme();
  const std::string svg = render_poster_svg(g, resolve_layout(g, fonts, colors, config.layout), colors);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    write_file(out_path, svg);
  }
  return 0;
}

int cmd_plot(const std::string& stats_path, const std::vector<std::string>& series, const std::string& title,
             const std::string& out_path) {
  std::string csv;
  try {
    csv = read_file(stats_path);
  } catch (const ResourceError& e) {
    throw ConfigError(e.what());
  }
  const std::string svg = plot_run_stats(RunStats::from_csv(csv), series, title);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    write_file(out_path, svg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolve and evaluate typographic posters"};
  app.require_subcommand(1);

  CommonFlags flags;
  int top = 3;
  std::string genotype_path;
  std::string out_path;
  std::string stats_path;
  std::vector<std::string> series{"objective", "penalty"};
  std::string title;

  auto* evolve_cmd = app.add_subcommand("evolve", "run the genetic algorithm and write posters, stats and charts");
  add_common(evolve_cmd, flags);
  evolve_cmd->add_option("--top", top, "number of final posters to render")->capture_default_str();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "score a genotype JSON file");
  add_common(evaluate_cmd, flags);
  evaluate_cmd->add_option("genotype", genotype_path, "genotype JSON")->required();

  auto* split_cmd = app.add_subcommand("split", "print the poster lines for a text");
  add_common(split_cmd, flags);

  auto* emotions_cmd = app.add_subcommand("emotions", "print per-line emotions and optimal heights");
  add_common(emotions_cmd, flags);

  auto* render_cmd = app.add_subcommand("render", "render a genotype JSON file as SVG");
  add_common(render_cmd, flags);
  render_cmd->add_option("genotype", genotype_path, "genotype JSON")->required();
  render_cmd->add_option("-o,--out", out_path, "output SVG (stdout when absent)");

  auto* config_cmd = app.add_subcommand("config", "print the effective configuration as JSON");
  add_common(config_cmd, flags);

  auto* plot_cmd = app.add_subcommand("plot", "chart a stats CSV");
  plot_cmd->add_option("stats", stats_path, "stats CSV")->required();
  plot_cmd->add_option("--series", series, "series names")->delimiter(',');
  plot_cmd->add_option("--title", title, "chart title");
  plot_cmd->add_option("-o,--out", out_path, "output SVG (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*evolve_cmd) return cmd_evolve(flags, top);
    if (*evaluate_cmd) return cmd_evaluate(flags, genotype_path);
    if (*split_cmd) return cmd_split(flags);
    if (*emotions_cmd) return cmd_emotions(flags);
    if (*render_cmd) return cmd_render(flags, genotype_path, out_path);
    if (*config_cmd) return cmd_config(flags);
    if (*plot_cmd) return cmd_plot(stats_path, series, title, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnknownTypeface& e) {
    std::cerr << "unknown typeface: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnknownMetric& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const UnsupportedLanguage& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const EmptyCatalog& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const DuplicateId& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}

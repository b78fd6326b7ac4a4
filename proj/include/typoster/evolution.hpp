#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "typoster/core_model.hpp"
#include "typoster/emotion.hpp"
#include "typoster/font_metrics.hpp"
#include "typoster/metrics.hpp"
#include "typoster/rng.hpp"

namespace typoster {

struct IntRange {
  int min = 0;
  int max = 0;
};

struct EvolutionConfig {
  int generations = 400;
  int population_size = 30;
  int elite_size = 1;
  double crossover_probability = 0.9;
  double mutation_probability = 0.1;
  int tournament_size = 10;
  Stage stage = Stage::S3;
  double stochastic_ranking_pf = 0.45;
  GenotypeLimits font_size_range{6.0, 60.0};
  IntRange size_delta{-5, 5};
  std::uint64_t seed = 1;
  int threads = 1;

  // Throws ConfigError.
  void validate() const;
};

// Poster-level genes that are fixed for a run.
struct PosterTemplate {
  PosterSize size;
  Margins margins;
};

// Everything needed to score a genotype.
struct EvaluationContext {
  const FontCatalog* fonts = nullptr;
  ColorScheme colors;
  LayoutParams layout;
  EmotionProfile profile;
  ObjectiveWeights weights;
  MetricParams params;
  Stage stage = Stage::S3;

  EvalReport evaluate(const PosterGenotype& g) const;
};

class Individual {
 public:
  Individual() = default;
  explicit Individual(PosterGenotype genotype) : genotype_(std::move(genotype)) {}

  const PosterGenotype& genotype() const { return genotype_; }
  // Mutable access drops the cached report.
  PosterGenotype& edit() {
    report_.reset();
    return genotype_;
  }

  bool evaluated() const { return report_.has_value(); }
  const EvalReport& report() const { return report_.value(); }
  void set_report(const EvalReport& r) { report_ = r; }
  void evaluate(const EvaluationContext& ctx) { report_ = ctx.evaluate(genotype_); }

  double objective() const { return report().objective; }
  double penalty() const { return report().penalty; }
  bool feasible() const { return report().penalty == 0.0; }

 private:
  PosterGenotype genotype_;
  std::optional<EvalReport> report_;
};

using Population = std::vector<Individual>;

struct RankKey {
  double objective = 0.0;
  double penalty = 0.0;
};

// (penalty ascending, objective descending); true when `a` ranks strictly ahead of `b`.
bool lexicographically_better(const RankKey& a, const RankKey& b);

// Stable feasibility-first order as a permutation of indices.
std::vector<std::size_t> lexicographic_order(std::span<const RankKey> keys);

// Stochastic ranking bubble sort. Adjacent pairs compare by objective when both
// are feasible or with probability pf, otherwise by penalty (ties by
// objective). Up to `sweeps` passes (0 means one per individual), stopping
// after a pass without swaps. Returns indices, best first.
std::vector<std::size_t> stochastic_rank(std::span<const RankKey> keys, double pf, Rng& rng, std::size_t sweeps = 0);

std::vector<RankKey> rank_keys(const Population& population);

// Reorders an evaluated population by stochastic ranking.
Population stochastic_rank(const Population& population, double pf, Rng& rng);

// Draws k ranks uniformly with replacement out of `population_size` and returns the lowest.
std::size_t tournament_select(std::size_t population_size, std::size_t k, Rng& rng);

Population init_population(const std::vector<std::string>& lines, const PosterTemplate& poster,
                           const EvolutionConfig& config, const FontCatalog& fonts, Rng& rng);

// Uniform crossover: one fair coin for the vertical alignment gene, one per
// text box (boxes travel whole). Throws MismatchedLines.
PosterGenotype crossover(const PosterGenotype& a, const PosterGenotype& b, Rng& rng);

// Per-attribute mutation; returns true if anything changed.
bool mutate(PosterGenotype& g, const EvolutionConfig& config, const FontCatalog& fonts, Rng& rng);

struct GenerationStats {
  int generation = 0;
  double best_objective = 0.0;
  double mean_objective = 0.0;
  double best_penalty = 0.0;
  double mean_penalty = 0.0;
  int feasible_count = 0;
  MetricScores best_metrics{};
  MetricScores mean_metrics{};
};

struct RunStats {
  std::vector<GenerationStats> rows;

  std::string to_csv() const;
  static RunStats from_csv(std::string_view csv);
  static std::string csv_header();
};

GenerationStats summarize(int generation, const Population& population);

struct EvolutionResult {
  Individual best;
  RunStats stats;
  Population population;  // final generation, lexicographic order
};

EvolutionResult evolve(const std::vector<std::string>& lines, const PosterTemplate& poster,
                       const EvolutionConfig& config, const EvaluationContext& context);

// Evaluates every unevaluated individual, optionally over several threads.
void evaluate_population(Population& population, const EvaluationContext& context, int threads = 1);

}  // namespace typoster

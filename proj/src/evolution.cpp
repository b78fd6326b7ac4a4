#include "typoster/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

// Axis values are kept at two decimals so the canonical JSON is lossless.
double quantize(double v, const AxisRange& axis) { return axis.clamp(std::round(v * 100.0) / 100.0); }

double draw_on_axis(const AxisRange& axis, Rng& rng) {
  if (axis.degenerate()) {
    return axis.min;
  }
  return quantize(rng.uniform_real(axis.min, axis.max), axis);
}

int size_floor(const GenotypeLimits& limits) { return static_cast<int>(std::ceil(limits.min_font_size)); }
int size_ceil(const GenotypeLimits& limits) { return static_cast<int>(std::floor(limits.max_font_size)); }

template <typename Enum>
Enum redraw_other(Enum current, std::initializer_list<Enum> options, Rng& rng) {
  std::vector<Enum> others;
  for (auto o : options) {
    if (o != current) {
      others.push_back(o);
    }
  }
  return others[rng.index(others.size())];
}

}  // namespace

void EvolutionConfig::validate() const {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (generations < 0) {
    throw ConfigError("generations must be >= 0");
  }
  if (population_size < 1 || elite_size < 0 || elite_size >= population_size) {
    throw ConfigError("need population_size > elite_size >= 0");
  }
  if (tournament_size < 1 || tournament_size > population_size) {
    throw ConfigError("tournament size must lie in [1, population_size]");
  }
  if (!prob(crossover_probability) || !prob(mutation_probability) || !prob(stochastic_ranking_pf)) {
    throw ConfigError("probabilities must lie in [0, 1]");
  }
  if (size_floor(font_size_range) > size_ceil(font_size_range) || font_size_range.min_font_size <= 0.0) {
    throw ConfigError("font size range must contain a positive integer size");
  }
  if (size_delta.min > size_delta.max) {
    throw ConfigError("mutation size delta range is empty");
  }
  if (threads < 1) {
    throw ConfigError("threads must be >= 1");
  }
}

EvalReport EvaluationContext::evaluate(const PosterGenotype& g) const {
  const auto layout_solution = resolve_layout(g, *fonts, colors, layout);
  return typoster::evaluate(g, layout_solution, profile, *fonts, weights, params, stage);
}

bool lexicographically_better(const RankKey& a, const RankKey& b) {
  if (a.penalty != b.penalty) {
    return a.penalty < b.penalty;
  }
  return a.objective > b.objective;
}

std::vector<std::size_t> lexicographic_order(std::span<const RankKey> keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lexicographically_better(keys[a], keys[b]); });
  return order;
}

std::vector<std::size_t> stochastic_rank(std::span<const RankKey> keys, double pf, Rng& rng, std::size_t sweeps) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  if (sweeps == 0) {
    sweeps = keys.size();
  }
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    bool swapped = false;
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
      const auto& a = keys[order[j]];
      const auto& b = keys[order[j + 1]];
      const double u = rng.uniform01();
      bool swap = false;
      if ((a.penalty == 0.0 && b.penalty == 0.0) || u < pf) {
        swap = a.objective < b.objective;
      } else if (a.penalty != b.penalty) {
        swap = a.penalty > b.penalty;
      } else {
        swap = a.objective < b.objective;
      }
      if (swap) {
        std::swap(order[j], order[j + 1]);
        swapped = true;
      }
    }
    if (!swapped) {
      break;
    }
  }
  return order;
}

std::vector<RankKey> rank_keys(const Population& population) {
  std::vector<RankKey> keys;
  keys.reserve(population.size());
  for (const auto& ind : population) {
    keys.push_back({ind.objective(), ind.penalty()});
  }
  return keys;
}

Population stochastic_rank(const Population& population, double pf, Rng& rng) {
  const auto keys = rank_keys(population);
  const auto order = stochastic_rank(keys, pf, rng);
  Population ranked;
  ranked.reserve(population.size());
  for (auto i : order) {
    ranked.push_back(population[i]);
  }
  return ranked;
}

std::size_t tournament_select(std::size_t population_size, std::size_t k, Rng& rng) {
  std::size_t best = rng.index(population_size);
  for (std::size_t i = 1; i < k; ++i) {
    best = std::min(best, rng.index(population_size));
  }
  return best;
}

Population init_population(const std::vector<std::string>& lines, const PosterTemplate& poster,
                           const EvolutionConfig& config, const FontCatalog& fonts, Rng& rng) {
  if (fonts.empty()) {
    throw EmptyCatalog("cannot initialise a population without typefaces");
  }
  if (lines.empty()) {
    throw SchemaError("at least one text line is required");
  }
  constexpr std::array<VerticalAlignment, 3> kVertical{VerticalAlignment::top, VerticalAlignment::middle,
                                                       VerticalAlignment::bottom};
  constexpr std::array<Alignment, 3> kAlign{Alignment::left, Alignment::center, Alignment::right};
  Population population;
  population.reserve(static_cast<std::size_t>(config.population_size));
  for (int n = 0; n < config.population_size; ++n) {
    PosterGenotype g;
    g.size = poster.size;
    g.margins = poster.margins;
    g.vertical_alignment = kVertical[rng.index(kVertical.size())];
    for (const auto& line : lines) {
      const auto& face = fonts.faces()[rng.index(fonts.size())];
      TextBoxGene box;
      box.content = line;
      box.typeface = face.id;
      box.weight = draw_on_axis(face.weight, rng);
      box.stretch = draw_on_axis(face.stretch, rng);
      box.size = static_cast<double>(rng.uniform_int(size_floor(config.font_size_range), size_ceil(config.font_size_range)));
      box.alignment = kAlign[rng.index(kAlign.size())];
      g.textboxes.push_back(std::move(box));
    }
    population.emplace_back(std::move(g));
  }
  return population;
}

PosterGenotype crossover(const PosterGenotype& a, const PosterGenotype& b, Rng& rng) {
  if (a.textboxes.size() != b.textboxes.size()) {
    throw MismatchedLines("parents carry different numbers of text boxes");
  }
  for (std::size_t i = 0; i < a.textboxes.size(); ++i) {
    if (a.textboxes[i].content != b.textboxes[i].content) {
      throw MismatchedLines("parents were built from different line lists");
    }
  }
  PosterGenotype child = a;
  child.vertical_alignment = rng.chance(0.5) ? a.vertical_alignment : b.vertical_alignment;
  for (std::size_t i = 0; i < a.textboxes.size(); ++i) {
    child.textboxes[i] = rng.chance(0.5) ? a.textboxes[i] : b.textboxes[i];
  }
  return child;
}

bool mutate(PosterGenotype& g, const EvolutionConfig& config, const FontCatalog& fonts, Rng& rng) {
  const double p = config.mutation_probability;
  bool changed = false;
  if (rng.chance(p)) {
    g.vertical_alignment = redraw_other(
        g.vertical_alignment, {VerticalAlignment::top, VerticalAlignment::middle, VerticalAlignment::bottom}, rng);
    changed = true;
  }
  for (auto& box : g.textboxes) {
    if (rng.chance(p)) {
      box.alignment = redraw_other(box.alignment, {Alignment::left, Alignment::center, Alignment::right}, rng);
      changed = true;
    }
    if (rng.chance(p)) {
      box.weight = draw_on_axis(fonts.face(box.typeface).weight, rng);
      changed = true;
    }
    if (rng.chance(p)) {
      box.stretch = draw_on_axis(fonts.face(box.typeface).stretch, rng);
      changed = true;
    }
    if (rng.chance(p) && fonts.size() > 1) {
      std::vector<const FaceRecord*> others;
      for (const auto& face : fonts.faces()) {
        if (face.id != box.typeface) {
          others.push_back(&face);
        }
      }
      const auto& face = *others[rng.index(others.size())];
      box.typeface = face.id;
      box.weight = face.weight.clamp(box.weight);
      box.stretch = face.stretch.clamp(box.stretch);
      changed = true;
    }
    if (rng.chance(p)) {
      const auto delta = rng.uniform_int(config.size_delta.min, config.size_delta.max);
      const double next = std::clamp(box.size + static_cast<double>(delta), static_cast<double>(size_floor(config.font_size_range)),
                                     static_cast<double>(size_ceil(config.font_size_range)));
      changed = changed || next != box.size;
      box.size = next;
    }
  }
  return changed;
}

void evaluate_population(Population& population, const EvaluationContext& context, int threads) {
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (!population[i].evaluated()) {
      pending.push_back(i);
    }
  }
  const auto workers = static_cast<std::size_t>(std::max(1, std::min<int>(threads, static_cast<int>(pending.size()))));
  if (workers <= 1) {
    for (auto i : pending) {
      population[i].evaluate(context);
    }
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < pending.size(); k += workers) {
        population[pending[k]].evaluate(context);
      }
    });
  }
}

GenerationStats summarize(int generation, const Population& population) {
  GenerationStats row;
  row.generation = generation;
  if (population.empty()) {
    return row;
  }
  const auto keys = rank_keys(population);
  const auto& best = population[lexicographic_order(keys).front()].report();
  row.best_objective = best.objective;
  row.best_penalty = best.penalty;
  row.best_metrics = best.scores;
  for (const auto& ind : population) {
    const auto& r = ind.report();
    row.mean_objective += r.objective;
    row.mean_penalty += r.penalty;
    row.feasible_count += r.penalty == 0.0 ? 1 : 0;
    for (std::size_t m = 0; m < kMetricCount; ++m) {
      row.mean_metrics[m] += r.scores[m];
    }
  }
  const auto n = static_cast<double>(population.size());
  row.mean_objective /= n;
  row.mean_penalty /= n;
  for (auto& m : row.mean_metrics) {
    m /= n;
  }
  return row;
}

std::string RunStats::csv_header() {
  std::string header = "generation,best_objective,mean_objective,best_penalty,mean_penalty,feasible_count";
  for (auto id : kAllMetrics) {
    header += ",best_" + std::string(to_string(id)) + ",mean_" + std::string(to_string(id));
  }
  return header;
}

std::string RunStats::to_csv() const {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.generation) + "," + format_number(r.best_objective, 6) + "," +
           format_number(r.mean_objective, 6) + "," + format_number(r.best_penalty, 6) + "," +
           format_number(r.mean_penalty, 6) + "," + std::to_string(r.feasible_count);
    for (std::size_t m = 0; m < kMetricCount; ++m) {
      out += "," + format_number(r.best_metrics[m], 6) + "," + format_number(r.mean_metrics[m], 6);
    }
    out += "\n";
  }
  return out;
}

RunStats RunStats::from_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != csv_header()) {
    throw SchemaError("run statistics CSV has an unexpected header");
  }
  RunStats stats;
  constexpr std::size_t kColumns = 6 + 2 * kMetricCount;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::vector<double> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        cells.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw SchemaError("non-numeric cell '" + cell + "' in run statistics CSV");
      }
    }
    if (cells.size() != kColumns) {
      throw SchemaError("run statistics row has " + std::to_string(cells.size()) + " columns, expected " +
                        std::to_string(kColumns));
    }
    GenerationStats r;
    r.generation = static_cast<int>(cells[0]);
    r.best_objective = cells[1];
    r.mean_objective = cells[2];
    r.best_penalty = cells[3];
    r.mean_penalty = cells[4];
    r.feasible_count = static_cast<int>(cells[5]);
    for (std::size_t m = 0; m < kMetricCount; ++m) {
      r.best_metrics[m] = cells[6 + 2 * m];
      r.mean_metrics[m] = cells[7 + 2 * m];
    }
    stats.rows.push_back(r);
  }
  return stats;
}

EvolutionResult evolve(const std::vector<std::string>& lines, const PosterTemplate& poster,
                       const EvolutionConfig& config, const EvaluationContext& context) {
  config.validate();
  Rng rng(config.seed);
  EvaluationContext ctx = context;
  ctx.stage = config.stage;
  Population population = init_population(lines, poster, config, *ctx.fonts, rng);
  evaluate_population(population, ctx, config.threads);

  EvolutionResult result;
  result.stats.rows.push_back(summarize(0, population));

  const auto pop_size = static_cast<std::size_t>(config.population_size);
  const auto elites = static_cast<std::size_t>(config.elite_size);
  const auto k = static_cast<std::size_t>(config.tournament_size);
  for (int gen = 1; gen <= config.generations; ++gen) {
    const Population ranked = stochastic_rank(population, config.stochastic_ranking_pf, rng);
    Population next;
    next.reserve(pop_size);
    while (next.size() < pop_size - elites) {
      const auto& first = ranked[tournament_select(ranked.size(), k, rng)];
      Individual child = first;
      if (rng.chance(config.crossover_probability)) {
        const auto& second = ranked[tournament_select(ranked.size(), k, rng)];
        child = Individual(crossover(first.genotype(), second.genotype(), rng));
      }
      PosterGenotype g = child.genotype();
      if (mutate(g, config, *ctx.fonts, rng)) {
        child.edit() = std::move(g);
      }
      next.push_back(std::move(child));
    }
    evaluate_population(next, ctx, config.threads);
    const auto order = lexicographic_order(rank_keys(population));
    for (std::size_t e = 0; e < elites; ++e) {
      next.push_back(population[order[e]]);
    }
    population = std::move(next);
    result.stats.rows.push_back(summarize(gen, population));
  }

  const auto order = lexicographic_order(rank_keys(population));
  for (auto i : order) {
    result.population.push_back(population[i]);
  }
  result.best = result.population.front();
  return result;
}

}  // namespace typoster

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evomerge {

struct EsConfig {
  int population_size = 500;  // even; candidates come in antithetic pairs
  double lr0 = 0.1;
  double lr_decay = 0.9999;
  double lr_limit = 0.001;
  double sigma0 = 0.1;
  double sigma_decay = 0.999;
  double sigma_limit = 0.01;
  double weight_decay = 0.0;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;

  void validate() const;

  bool operator==(const EsConfig&) const = default;
};

// rank/(n-1) - 0.5 with ranks ascending from 0; ties broken by candidate
// index, so the output depends only on the ordering of the inputs.
std::vector<double> centered_ranks(std::span<const double> fitnesses);

// Mirrored-sampling ES over a flat genome: centered-rank shaping, Adam
// ascent on the score estimate, per-generation lr/sigma decay with floors.
//
// Noise stream contract (tests rely on it): generation g draws from
// Rng(mix_seed(seed, 0x65736e6f, g)), one gaussian per coordinate, pair by
// pair; candidate 2j is the +noise member of pair j, candidate 2j+1 the
// mirror.
class EvolutionStrategy {
 public:
  EvolutionStrategy(EsConfig config, std::vector<double> mean,
                    std::uint64_t seed);

  // population_size candidates around the mean. Pairs are materialized so
  // that (c[2j] - mean) + (c[2j+1] - mean) is exactly zero, coordinate-wise,
  // in double arithmetic. Idempotent at a fixed generation.
  std::vector<std::vector<double>> ask() const;

  // fitnesses in ask order. Gradient estimate uses the interleaved
  // full-population form g = sum_k shaped[k] * eps_k / (pop * sigma) with
  // eps_{2j+1} = -eps_j, followed by one Adam step on -g, then lr and sigma
  // decay and the generation counter increment.
  void tell(std::span<const double> fitnesses);

  const std::vector<double>& mean() const { return mu_; }
  int dimension() const { return static_cast<int>(mu_.size()); }
  double sigma() const { return sigma_; }
  double learning_rate() const { return lr_; }
  int generation() const { return generation_; }
  std::uint64_t seed() const { return seed_; }
  const EsConfig& config() const { return cfg_; }

  // Replaces the mean (dimension may change). Adam moments and step counter
  // reset; sigma, lr, generation and the noise seed carry on.
  void reset_mean(std::vector<double> mean);

  // Versioned JSON blob with exact round-trip of all state.
  std::string checkpoint() const;
  static EvolutionStrategy restore(const std::string& blob);

  bool operator==(const EvolutionStrategy&) const = default;

 private:
  std::vector<std::vector<double>> generation_noise() const;

  EsConfig cfg_;
  std::vector<double> mu_;
  std::vector<double> adam_m_;
  std::vector<double> adam_v_;
  long adam_step_ = 0;
  double sigma_ = 0.1;
  double lr_ = 0.1;
  int generation_ = 0;
  std::uint64_t seed_ = 0;
};

}  // namespace evomerge

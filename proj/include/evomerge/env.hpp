#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "evomerge/rng.hpp"

namespace evomerge {

enum class RewardMode {
  Full,          // task reward plus survival bonus
  DistanceOnly,  // per-step displacement along the target axis, nothing else
};

struct EnvSpec {
  int obs_dim = 28;
  int act_dim = 8;
  int episode_steps = 1000;
  RewardMode reward_mode = RewardMode::Full;

  void validate() const;
};

// Per-limb multiplicative length factors; all 1.0 is the training
// morphology. Labels are stable strings like "frontleft@0.875".
struct MorphologyVariant {
  std::vector<double> limb_scales;
  std::string label = "standard";

  bool operator==(const MorphologyVariant&) const = default;
};

MorphologyVariant standard_variant(int n_limbs = 4);

struct EpisodeResult {
  double fitness = 0.0;
  double distance = 0.0;  // net displacement along the target axis
  int steps_survived = 0;
};

// One instance per rollout; construction is cheap and instances are never
// shared between concurrent episodes. Trajectories are fully determined by
// (variant, seed, action sequence).
class Environment {
 public:
  struct StepResult {
    std::vector<double> obs;
    double reward = 0.0;
    bool done = false;
  };

  virtual ~Environment() = default;
  virtual const EnvSpec& spec() const = 0;
  virtual std::vector<double> reset(const MorphologyVariant& variant,
                                    std::uint64_t seed) = 0;
  // Actions are clamped to [-1, 1] by the environment. Throws StateError if
  // called after done or before reset.
  virtual StepResult step(std::span<const double> action) = 0;
};

// Limb identifiers accepted in variant grids, in index order.
const std::vector<std::string>& limb_names();

// Cartesian product: every combo gets every reduction applied to all of its
// limbs. Reductions are scale factors in (0, 1]; unknown limb ids raise
// ConfigError.
std::vector<MorphologyVariant> make_variant_grid(
    const std::vector<double>& reductions,
    const std::vector<std::vector<std::string>>& limb_combos);

// 5 reduction levels x 6 leg combinations (each single leg, the front pair,
// one diagonal pair) = 30 variants.
std::vector<MorphologyVariant> paper_variant_grid();

// obs + n with n i.i.d. N(0, sigma_noise); used only while optimizing the
// noisy-input baselines, never during evaluation.
void add_observation_noise(std::vector<double>& obs, double sigma_noise,
                           Rng& rng);

}  // namespace evomerge

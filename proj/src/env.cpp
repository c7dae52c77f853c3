#include "evomerge/env.hpp"

#include <algorithm>
#include <cstdio>

#include "evomerge/errors.hpp"

namespace evomerge {

void EnvSpec::validate() const {
  if (obs_dim < 1 || act_dim < 1) {
    throw ConfigError("environment dimensions must be >= 1");
  }
  if (episode_steps < 1) throw ConfigError("episode steps must be >= 1");
}

MorphologyVariant standard_variant(int n_limbs) {
  MorphologyVariant v;
  v.limb_scales.assign(n_limbs, 1.0);
  v.label = "standard";
  return v;
}

const std::vector<std::string>& limb_names() {
  static const std::vector<std::string> names{"frontleft", "frontright",
                                              "backleft", "backright"};
  return names;
}

namespace {

int limb_index(const std::string& name) {
  const auto& names = limb_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw ConfigError("unknown limb id '" + name + "'");
}

std::string format_scale(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

}  // namespace

std::vector<MorphologyVariant> make_variant_grid(
    const std::vector<double>& reductions,
    const std::vector<std::vector<std::string>>& limb_combos) {
  if (reductions.empty() || limb_combos.empty()) {
    throw ConfigError("variant grid needs at least one reduction and combo");
  }
  for (double r : reductions) {
    if (!(r > 0.0 && r <= 1.0)) {
      throw ConfigError("limb scale factors must lie in (0, 1]");
    }
  }
  std::vector<MorphologyVariant> grid;
  grid.reserve(reductions.size() * limb_combos.size());
  for (const auto& combo : limb_combos) {
    if (combo.empty()) throw ConfigError("empty limb combo");
    for (double r : reductions) {
      MorphologyVariant v = standard_variant();
      std::string label;
      for (const auto& limb : combo) {
        v.limb_scales[limb_index(limb)] = r;
        if (!label.empty()) label += '+';
        label += limb;
      }
      v.label = label + '@' + format_scale(r);
      grid.push_back(std::move(v));
    }
  }
  return grid;
}

std::vector<MorphologyVariant> paper_variant_grid() {
  // ankle lengths 0.39 .. 0.35 against the standard 0.4
  const std::vector<double> reductions{0.975, 0.95, 0.925, 0.9, 0.875};
  const std::vector<std::vector<std::string>> combos{
      {"frontleft"},
      {"frontright"},
      {"backleft"},
      {"backright"},
      {"frontleft", "frontright"},
      {"frontleft", "backright"}};
  return make_variant_grid(reductions, combos);
}

void add_observation_noise(std::vector<double>& obs, double sigma_noise,
                           Rng& rng) {
  if (sigma_noise < 0.0) throw ArgumentError("noise sigma must be >= 0");
  if (sigma_noise == 0.0) return;
  for (double& x : obs) x += rng.gaussian(0.0, sigma_noise);
}

}  // namespace evomerge

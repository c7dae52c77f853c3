#include "evomerge/net.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evomerge/errors.hpp"
#include "evomerge/rng.hpp"

namespace evomerge {

int NetworkSpec::connection_count() const {
  int total = 0;
  for (std::size_t k = 0; k + 1 < layer_sizes.size(); ++k) {
    total += layer_sizes[k] * layer_sizes[k + 1];
  }
  return total;
}

void NetworkSpec::validate() const {
  if (layer_sizes.size() < 2) {
    throw ConfigError("network needs at least 2 layers");
  }
  for (int size : layer_sizes) {
    if (size < 1) throw ConfigError("layer sizes must be >= 1");
  }
}

NetworkState::NetworkState(NetworkSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const auto& sizes = spec_.layer_sizes;
  weights_.resize(sizes.size() - 1);
  acts_.resize(sizes.size());
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    weights_[k].assign(static_cast<std::size_t>(sizes[k]) * sizes[k + 1], 0.0);
  }
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    acts_[k].assign(sizes[k], 0.0);
  }
}

std::vector<double> NetworkState::forward(std::span<const double> obs) {
  const auto& sizes = spec_.layer_sizes;
  if (static_cast<int>(obs.size()) != sizes.front()) {
    throw ArgumentError("observation length " + std::to_string(obs.size()) +
                        " does not match input size " +
                        std::to_string(sizes.front()));
  }
  std::copy(obs.begin(), obs.end(), acts_[0].begin());
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    const int n_pre = sizes[k];
    const int n_post = sizes[k + 1];
    const double* w = weights_[k].data();
    const double* in = acts_[k].data();
    double* out = acts_[k + 1].data();
    for (int j = 0; j < n_post; ++j) {
      const double* row = w + static_cast<std::size_t>(j) * n_pre;
      double sum = 0.0;
      for (int i = 0; i < n_pre; ++i) sum += row[i] * in[i];
      out[j] = std::tanh(sum);
    }
  }
  has_acts_ = true;
  return acts_.back();
}

void NetworkState::init_weights(std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x77696e69u));
  for (auto& block : weights_) {
    for (double& w : block) w = rng.uniform(-0.1, 0.1);
  }
}

void NetworkState::set_genome(std::span<const double> genome) {
  if (static_cast<int>(genome.size()) != spec_.connection_count()) {
    throw EncodingError("genome length " + std::to_string(genome.size()) +
                        " does not match connection count " +
                        std::to_string(spec_.connection_count()));
  }
  std::size_t at = 0;
  for (auto& block : weights_) {
    std::copy(genome.begin() + at, genome.begin() + at + block.size(),
              block.begin());
    at += block.size();
  }
}

std::vector<double> NetworkState::genome() const {
  std::vector<double> genome;
  genome.reserve(spec_.connection_count());
  for (const auto& block : weights_) {
    genome.insert(genome.end(), block.begin(), block.end());
  }
  return genome;
}

double NetworkState::weight(int pair, int post, int pre) const {
  return weights_[pair][static_cast<std::size_t>(post) *
                            spec_.layer_sizes[pair] +
                        pre];
}

void NetworkState::set_weight(int pair, int post, int pre, double w) {
  weights_[pair][static_cast<std::size_t>(post) * spec_.layer_sizes[pair] +
                 pre] = w;
}

const std::vector<std::vector<double>>& NetworkState::last_activations()
    const {
  if (!has_acts_) {
    throw StateError("no recorded activations; call forward first");
  }
  return acts_;
}

void NetworkState::clear_activations() { has_acts_ = false; }

void hebbian_update(NetworkState& net, const RuleSet& rules,
                    RuleUpdateLog* log) {
  if (!net.has_acts_) {
    throw StateError("hebbian_update needs activations from a forward call");
  }
  const auto& sizes = net.spec_.layer_sizes;
  if (rules.connection_count() != net.spec_.connection_count()) {
    throw EncodingError("assignment covers " +
                        std::to_string(rules.connection_count()) +
                        " synapses, network has " +
                        std::to_string(net.spec_.connection_count()));
  }
  const bool with_alpha = rules.variant == RuleVariant::AlphaAbcd;
  const std::int32_t n_rules = rules.rule_count();

  std::size_t synapse = 0;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    const int n_pre = sizes[k];
    const int n_post = sizes[k + 1];
    const double* pre_act = net.acts_[k].data();
    const double* post_act = net.acts_[k + 1].data();
    double* w = net.weights_[k].data();
    for (int j = 0; j < n_post; ++j) {
      const double oj = post_act[j];
      double* row = w + static_cast<std::size_t>(j) * n_pre;
      for (int i = 0; i < n_pre; ++i, ++synapse) {
        const std::int32_t r = rules.assignment[synapse];
        if (r < 0 || r >= n_rules) {
          throw EncodingError("synapse " + std::to_string(synapse) +
                              " assigned to missing rule " + std::to_string(r));
        }
        const RuleParams& rule = rules.rules[r];
        const double oi = pre_act[i];
        double dw = rule.a * oi * oj + rule.b * oi + rule.c * oj;
        if (with_alpha) dw = rule.alpha * (dw + rule.d);
        row[i] = std::clamp(row[i] + dw, -kWeightClamp, kWeightClamp);
        if (log && log->watched[r]) log->deltas[r].push_back(dw);
      }
    }
  }
}

}  // namespace evomerge

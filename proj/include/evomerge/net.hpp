#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evomerge/rules.hpp"

namespace evomerge {

// Synaptic strengths are clamped to [-kWeightClamp, kWeightClamp] after
// every plasticity step; unbounded updates diverge over long episodes.
inline constexpr double kWeightClamp = 5.0;

struct NetworkSpec {
  std::vector<int> layer_sizes{28, 128, 64, 8};
  bool plastic = false;
  RuleVariant rule_variant = RuleVariant::AlphaAbcd;

  int connection_count() const;
  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  void validate() const;

  bool operator==(const NetworkSpec&) const = default;
};

// Records per-rule weight deltas for a watched subset of rules.
struct RuleUpdateLog {
  std::vector<char> watched;                // indexed by rule id
  std::vector<std::vector<double>> deltas;  // parallel to watched

  explicit RuleUpdateLog(int n_rules)
      : watched(n_rules, 0), deltas(n_rules) {}
};

// Feedforward tanh network, no biases. Weight block for layer pair k is
// row-major by postsynaptic neuron: w[k][post * n_pre + pre]. Genome order
// follows the same layout, layer pair by layer pair.
class NetworkState {
 public:
  explicit NetworkState(NetworkSpec spec);

  const NetworkSpec& spec() const { return spec_; }

  // Returns the tanh output of the final layer and records every layer's
  // output (the input layer keeps the raw observation) for the next
  // plasticity update.
  std::vector<double> forward(std::span<const double> obs);

  // i.i.d. Unif(-0.1, 0.1), deterministic per seed
  void init_weights(std::uint64_t seed);

  void set_genome(std::span<const double> genome);
  std::vector<double> genome() const;

  double weight(int pair, int post, int pre) const;
  void set_weight(int pair, int post, int pre, double w);
  const std::vector<std::vector<double>>& weights() const { return weights_; }

  bool has_activations() const { return has_acts_; }
  const std::vector<std::vector<double>>& last_activations() const;
  void clear_activations();

 private:
  friend void hebbian_update(NetworkState&, const RuleSet&, RuleUpdateLog*);

  NetworkSpec spec_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<double>> acts_;
  bool has_acts_ = false;
};

// One plasticity step over every synapse, using the activations recorded by
// the preceding forward call:
//   AlphaAbcd: dw = alpha * (A*oi*oj + B*oi + C*oj + D)
//   Abc:       dw = A*oi*oj + B*oi + C*oj
// oi is the presynaptic layer's recorded output, oj the postsynaptic one.
// Weights are clamped afterwards. Synapse s maps to rules.assignment[s]
// with s numbered in genome order.
void hebbian_update(NetworkState& net, const RuleSet& rules,
                    RuleUpdateLog* log = nullptr);

}  // namespace evomerge

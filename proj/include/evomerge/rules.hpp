#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace evomerge {

enum class RuleVariant {
  AlphaAbcd,  // dw = alpha * (A*oi*oj + B*oi + C*oj + D)
  Abc,        // dw = A*oi*oj + B*oi + C*oj
};

int params_per_rule(RuleVariant variant);

struct RuleParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;      // unused for Abc
  double alpha = 0.0;  // unused for Abc

  bool operator==(const RuleParams&) const = default;
};

// The indirect encoding: a list of rules plus a map from every synapse to
// one rule. The assignment is structural state, not part of the genome.
struct RuleSet {
  RuleVariant variant = RuleVariant::AlphaAbcd;
  std::vector<RuleParams> rules;
  std::vector<std::int32_t> assignment;  // synapse index -> rule index

  int rule_count() const { return static_cast<int>(rules.size()); }
  int connection_count() const { return static_cast<int>(assignment.size()); }
  long trainable_parameter_count() const;

  // per-rule usage counts; throws EncodingError on out-of-range entries
  std::vector<int> assignment_counts() const;

  // checks coverage, index ranges, and the no-orphan invariant
  void validate(int connection_count) const;
};

// Every rule parameter i.i.d. N(0, 0.1). n_rules == connection_count gives
// the identity assignment (one rule per synapse); otherwise synapses are
// assigned uniformly at random, with orphan repair afterwards.
RuleSet init_rules(int connection_count, int n_rules, RuleVariant variant,
                   std::uint64_t seed);

// Rule-major flattening, (A,B,C,D,alpha) or (A,B,C) per rule.
std::vector<double> rules_to_genome(const RuleSet& rs);
// Inverse; takes variant, rule count and assignment from the template.
RuleSet genome_to_rules(std::span<const double> genome, const RuleSet& tmpl);

// Clusters the rule vectors with K-Means and replaces each rule by its
// cluster center; every synapse follows its old rule's cluster label.
RuleSet merge_rules(const RuleSet& rs, int k, std::uint64_t seed);

// Reassigns one synapse (lowest index currently on a multiply-used rule)
// to each rule that has no synapse.
void repair_orphans(RuleSet& rs);

}  // namespace evomerge

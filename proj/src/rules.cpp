#include "evomerge/rules.hpp"

#include <string>

#include "evomerge/errors.hpp"
#include "evomerge/kmeans.hpp"
#include "evomerge/rng.hpp"

namespace evomerge {

namespace {
constexpr double kRuleInitStddev = 0.1;
}

int params_per_rule(RuleVariant variant) {
  return variant == RuleVariant::AlphaAbcd ? 5 : 3;
}

long RuleSet::trainable_parameter_count() const {
  return static_cast<long>(rules.size()) * params_per_rule(variant);
}

std::vector<int> RuleSet::assignment_counts() const {
  std::vector<int> counts(rules.size(), 0);
  for (std::size_t s = 0; s < assignment.size(); ++s) {
    const std::int32_t r = assignment[s];
    if (r < 0 || r >= static_cast<std::int32_t>(rules.size())) {
      throw EncodingError("assignment entry " + std::to_string(s) +
                          " references rule " + std::to_string(r) +
                          " outside [0, " + std::to_string(rules.size()) + ")");
    }
    counts[r] += 1;
  }
  return counts;
}

void RuleSet::validate(int conn_count) const {
  if (rules.empty()) throw EncodingError("rule set has no rules");
  if (static_cast<int>(assignment.size()) != conn_count) {
    throw EncodingError("assignment covers " +
                        std::to_string(assignment.size()) + " synapses, need " +
                        std::to_string(conn_count));
  }
  const auto counts = assignment_counts();
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) {
      throw EncodingError("rule " + std::to_string(r) + " is orphaned");
    }
  }
}

void repair_orphans(RuleSet& rs) {
  auto counts = rs.assignment_counts();
  for (std::int32_t r = 0; r < rs.rule_count(); ++r) {
    if (counts[r] > 0) continue;
    for (std::size_t s = 0; s < rs.assignment.size(); ++s) {
      const std::int32_t old = rs.assignment[s];
      if (counts[old] > 1) {
        counts[old] -= 1;
        rs.assignment[s] = r;
        counts[r] = 1;
        break;
      }
    }
  }
}

RuleSet init_rules(int connection_count, int n_rules, RuleVariant variant,
                   std::uint64_t seed) {
  if (n_rules < 1) throw ConfigError("rule count must be >= 1");
  if (n_rules > connection_count) {
    throw ConfigError("rule count " + std::to_string(n_rules) +
                      " exceeds connection count " +
                      std::to_string(connection_count));
  }

  Rng rng(mix_seed(seed, 0x72756c65u));
  RuleSet rs;
  rs.variant = variant;
  rs.rules.resize(n_rules);
  for (auto& rule : rs.rules) {
    rule.a = rng.gaussian(0.0, kRuleInitStddev);
    rule.b = rng.gaussian(0.0, kRuleInitStddev);
    rule.c = rng.gaussian(0.0, kRuleInitStddev);
    if (variant == RuleVariant::AlphaAbcd) {
      rule.d = rng.gaussian(0.0, kRuleInitStddev);
      rule.alpha = rng.gaussian(0.0, kRuleInitStddev);
    }
  }

  rs.assignment.resize(connection_count);
  if (n_rules == connection_count) {
    for (int s = 0; s < connection_count; ++s) rs.assignment[s] = s;
  } else {
    for (int s = 0; s < connection_count; ++s) {
      rs.assignment[s] = static_cast<std::int32_t>(rng.integer(n_rules));
    }
    repair_orphans(rs);
  }
  rs.validate(connection_count);
  return rs;
}

std::vector<double> rules_to_genome(const RuleSet& rs) {
  const int ppr = params_per_rule(rs.variant);
  std::vector<double> genome;
  genome.reserve(rs.rules.size() * ppr);
  for (const auto& rule : rs.rules) {
    genome.push_back(rule.a);
    genome.push_back(rule.b);
    genome.push_back(rule.c);
    if (ppr == 5) {
      genome.push_back(rule.d);
      genome.push_back(rule.alpha);
    }
  }
  return genome;
}

RuleSet genome_to_rules(std::span<const double> genome, const RuleSet& tmpl) {
  const int ppr = params_per_rule(tmpl.variant);
  if (genome.size() != tmpl.rules.size() * static_cast<std::size_t>(ppr)) {
    throw EncodingError("rule genome length " + std::to_string(genome.size()) +
                        " does not match " + std::to_string(tmpl.rules.size()) +
                        " rules x " + std::to_string(ppr) + " params");
  }
  RuleSet rs = tmpl;
  std::size_t at = 0;
  for (auto& rule : rs.rules) {
    rule.a = genome[at++];
    rule.b = genome[at++];
    rule.c = genome[at++];
    if (ppr == 5) {
      rule.d = genome[at++];
      rule.alpha = genome[at++];
    } else {
      rule.d = 0.0;
      rule.alpha = 0.0;
    }
  }
  return rs;
}

RuleSet merge_rules(const RuleSet& rs, int k, std::uint64_t seed) {
  if (k >= rs.rule_count()) {
    throw ArgumentError("merge target " + std::to_string(k) +
                        " must be below the current rule count " +
                        std::to_string(rs.rule_count()));
  }
  if (k < 1) throw ArgumentError("merge target must be >= 1");

  const int ppr = params_per_rule(rs.variant);
  std::vector<std::vector<double>> points(rs.rules.size());
  for (std::size_t r = 0; r < rs.rules.size(); ++r) {
    const auto& rule = rs.rules[r];
    points[r] = ppr == 5 ? std::vector<double>{rule.a, rule.b, rule.c, rule.d,
                                               rule.alpha}
                         : std::vector<double>{rule.a, rule.b, rule.c};
  }

  const auto km = kmeans(points, k, seed);

  RuleSet merged;
  merged.variant = rs.variant;
  merged.rules.resize(k);
  for (int c = 0; c < k; ++c) {
    const auto& center = km.centers[c];
    merged.rules[c].a = center[0];
    merged.rules[c].b = center[1];
    merged.rules[c].c = center[2];
    if (ppr == 5) {
      merged.rules[c].d = center[3];
      merged.rules[c].alpha = center[4];
    }
  }
  merged.assignment.resize(rs.assignment.size());
  for (std::size_t s = 0; s < rs.assignment.size(); ++s) {
    merged.assignment[s] = km.labels[rs.assignment[s]];
  }
  repair_orphans(merged);
  merged.validate(merged.connection_count());
  return merged;
}

}  // namespace evomerge

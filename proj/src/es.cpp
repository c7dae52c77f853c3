#include "evomerge/es.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include <nlohmann/json.hpp>

#include "evomerge/errors.hpp"
#include "evomerge/rng.hpp"

namespace evomerge {

namespace {

constexpr std::uint64_t kNoiseStream = 0x65736e6fu;
constexpr int kEsBlobVersion = 1;

// Largest magnitude-reduced perturbation e (starting from sigma * eps) such
// that both mu+e and mu-e reflect exactly: fl(fl(mu+e)-mu) == e and the pair
// of differences cancels to zero. Clearing the lowest set bit of e strictly
// shrinks the problem, so this terminates (worst case e == 0).
double mirrorable_step(double mu, double step) {
  double e = (mu + step) - mu;
  for (;;) {
    const double up = mu + e;
    const double down = mu - e;
    if ((up - mu) == e && (up - mu) + (down - mu) == 0.0) return e;
    std::uint64_t bits = std::bit_cast<std::uint64_t>(e);
    bits &= bits - 1;
    e = std::bit_cast<double>(bits);
  }
}

}  // namespace

void EsConfig::validate() const {
  if (population_size < 2 || population_size % 2 != 0) {
    throw ConfigError("population size must be an even integer >= 2");
  }
  if (!(sigma0 > 0.0)) throw ConfigError("sigma must be positive");
  if (!(lr0 > 0.0)) throw ConfigError("learning rate must be positive");
  if (!(sigma_decay > 0.0 && sigma_decay <= 1.0)) {
    throw ConfigError("sigma decay must lie in (0, 1]");
  }
  if (!(lr_decay > 0.0 && lr_decay <= 1.0)) {
    throw ConfigError("learning rate decay must lie in (0, 1]");
  }
  if (sigma_limit > sigma0) throw ConfigError("sigma limit exceeds sigma");
  if (lr_limit > lr0) throw ConfigError("learning rate limit exceeds lr");
  if (weight_decay < 0.0) throw ConfigError("weight decay must be >= 0");
}

std::vector<double> centered_ranks(std::span<const double> fitnesses) {
  const int n = static_cast<int>(fitnesses.size());
  if (n < 2) throw ArgumentError("centered ranks need at least 2 entries");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return fitnesses[a] < fitnesses[b];
  });
  std::vector<double> shaped(n);
  for (int rank = 0; rank < n; ++rank) {
    shaped[order[rank]] = static_cast<double>(rank) / (n - 1) - 0.5;
  }
  return shaped;
}

EvolutionStrategy::EvolutionStrategy(EsConfig config, std::vector<double> mean,
                                     std::uint64_t seed)
    : cfg_(config),
      mu_(std::move(mean)),
      adam_m_(mu_.size(), 0.0),
      adam_v_(mu_.size(), 0.0),
      sigma_(config.sigma0),
      lr_(config.lr0),
      seed_(seed) {
  cfg_.validate();
  if (mu_.empty()) throw ArgumentError("mean genome must be non-empty");
}

std::vector<std::vector<double>> EvolutionStrategy::generation_noise() const {
  Rng rng(mix_seed(seed_, kNoiseStream, static_cast<std::uint64_t>(generation_)));
  const int pairs = cfg_.population_size / 2;
  const int dim = dimension();
  std::vector<std::vector<double>> noise(pairs, std::vector<double>(dim));
  for (auto& eps : noise) {
    for (double& x : eps) x = rng.gaussian();
  }
  return noise;
}

std::vector<std::vector<double>> EvolutionStrategy::ask() const {
  const auto noise = generation_noise();
  const int dim = dimension();
  std::vector<std::vector<double>> pop(cfg_.population_size,
                                       std::vector<double>(dim));
  for (std::size_t j = 0; j < noise.size(); ++j) {
    auto& plus = pop[2 * j];
    auto& minus = pop[2 * j + 1];
    for (int i = 0; i < dim; ++i) {
      const double e = mirrorable_step(mu_[i], sigma_ * noise[j][i]);
      plus[i] = mu_[i] + e;
      minus[i] = mu_[i] - e;
    }
  }
  return pop;
}

void EvolutionStrategy::tell(std::span<const double> fitnesses) {
  if (static_cast<int>(fitnesses.size()) != cfg_.population_size) {
    throw ArgumentError("got " + std::to_string(fitnesses.size()) +
                        " fitnesses for a population of " +
                        std::to_string(cfg_.population_size));
  }
  const auto shaped = centered_ranks(fitnesses);
  const auto noise = generation_noise();
  const int dim = dimension();

  std::vector<double> grad_up(dim, 0.0);
  for (int k = 0; k < cfg_.population_size; ++k) {
    const auto& eps = noise[k / 2];
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double w = shaped[k] * sign;
    for (int i = 0; i < dim; ++i) grad_up[i] += w * eps[i];
  }
  const double scale = 1.0 / (cfg_.population_size * sigma_);
  for (int i = 0; i < dim; ++i) grad_up[i] *= scale;

  // Adam minimizes, so feed it the descent gradient of -score (plus the
  // weight decay term, which Table-1 settings keep at zero).
  adam_step_ += 1;
  const double b1 = cfg_.adam_beta1;
  const double b2 = cfg_.adam_beta2;
  const double bc1 = 1.0 - std::pow(b1, static_cast<double>(adam_step_));
  const double bc2 = 1.0 - std::pow(b2, static_cast<double>(adam_step_));
  for (int i = 0; i < dim; ++i) {
    const double g = -grad_up[i] + cfg_.weight_decay * mu_[i];
    adam_m_[i] = b1 * adam_m_[i] + (1.0 - b1) * g;
    adam_v_[i] = b2 * adam_v_[i] + (1.0 - b2) * g * g;
    const double m_hat = adam_m_[i] / bc1;
    const double v_hat = adam_v_[i] / bc2;
    mu_[i] -= lr_ * m_hat / (std::sqrt(v_hat) + cfg_.adam_eps);
  }

  lr_ = std::max(lr_ * cfg_.lr_decay, cfg_.lr_limit);
  sigma_ = std::max(sigma_ * cfg_.sigma_decay, cfg_.sigma_limit);
  generation_ += 1;
}

void EvolutionStrategy::reset_mean(std::vector<double> mean) {
  if (mean.empty()) throw ArgumentError("mean genome must be non-empty");
  mu_ = std::move(mean);
  adam_m_.assign(mu_.size(), 0.0);
  adam_v_.assign(mu_.size(), 0.0);
  adam_step_ = 0;
}

std::string EvolutionStrategy::checkpoint() const {
  nlohmann::json j;
  j["version"] = kEsBlobVersion;
  j["config"] = {{"population_size", cfg_.population_size},
                 {"lr0", cfg_.lr0},
                 {"lr_decay", cfg_.lr_decay},
                 {"lr_limit", cfg_.lr_limit},
                 {"sigma0", cfg_.sigma0},
                 {"sigma_decay", cfg_.sigma_decay},
                 {"sigma_limit", cfg_.sigma_limit},
                 {"weight_decay", cfg_.weight_decay},
                 {"adam_beta1", cfg_.adam_beta1},
                 {"adam_beta2", cfg_.adam_beta2},
                 {"adam_eps", cfg_.adam_eps}};
  j["mu"] = mu_;
  j["adam_m"] = adam_m_;
  j["adam_v"] = adam_v_;
  j["adam_step"] = adam_step_;
  j["sigma"] = sigma_;
  j["lr"] = lr_;
  j["generation"] = generation_;
  j["seed"] = seed_;
  return j.dump();
}

EvolutionStrategy EvolutionStrategy::restore(const std::string& blob) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(blob);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("es blob is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != kEsBlobVersion) {
      throw FormatError("es blob version " +
                        j.at("version").dump() + " is not supported");
    }
    EsConfig cfg;
    const auto& jc = j.at("config");
    cfg.population_size = jc.at("population_size").get<int>();
    cfg.lr0 = jc.at("lr0").get<double>();
    cfg.lr_decay = jc.at("lr_decay").get<double>();
    cfg.lr_limit = jc.at("lr_limit").get<double>();
    cfg.sigma0 = jc.at("sigma0").get<double>();
    cfg.sigma_decay = jc.at("sigma_decay").get<double>();
    cfg.sigma_limit = jc.at("sigma_limit").get<double>();
    cfg.weight_decay = jc.at("weight_decay").get<double>();
    cfg.adam_beta1 = jc.at("adam_beta1").get<double>();
    cfg.adam_beta2 = jc.at("adam_beta2").get<double>();
    cfg.adam_eps = jc.at("adam_eps").get<double>();

    EvolutionStrategy es(cfg, j.at("mu").get<std::vector<double>>(),
                         j.at("seed").get<std::uint64_t>());
    es.adam_m_ = j.at("adam_m").get<std::vector<double>>();
    es.adam_v_ = j.at("adam_v").get<std::vector<double>>();
    es.adam_step_ = j.at("adam_step").get<long>();
    es.sigma_ = j.at("sigma").get<double>();
    es.lr_ = j.at("lr").get<double>();
    es.generation_ = j.at("generation").get<int>();
    if (es.adam_m_.size() != es.mu_.size() ||
        es.adam_v_.size() != es.mu_.size()) {
      throw FormatError("es blob moment vectors do not match the mean");
    }
    return es;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("es blob is missing fields: ") + e.what());
  }
}

}  // namespace evomerge

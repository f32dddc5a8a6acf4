#include "zipfkit/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <unordered_set>
#include <utility>

#include "zipfkit/error.hpp"
#include "zipfkit/frequency.hpp"
#include "zipfkit/rng.hpp"

namespace zipfkit::gen {
namespace {

std::string serial_id(std::uint64_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return "w" + digits;
}

void require_tokens(std::uint64_t n) {
  if (n == 0) throw ConfigError("n_tokens must be at least 1");
}

}  // namespace

void validate(const SimonConfig& cfg) {
  require_tokens(cfg.n_tokens);
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0))
    throw ConfigError("alpha must lie in [0, 1], got " + std::to_string(cfg.alpha));
}

void validate(const TypingConfig& cfg) {
  require_tokens(cfg.n_tokens);
  if (cfg.alphabet_size < 1 || cfg.alphabet_size > 26)
    throw ConfigError("alphabet_size must lie in [1, 26], got " + std::to_string(cfg.alphabet_size));
  if (!(cfg.space_prob > 0.0 && cfg.space_prob < 1.0))
    throw ConfigError("space_prob must lie strictly inside (0, 1), got " + std::to_string(cfg.space_prob));
}

void validate(const DualConfig& cfg) {
  require_tokens(cfg.n_tokens);
  if (cfg.n_high == 0) throw ConfigError("n_high must be at least 1");
  if (!(cfg.p_high > 0.0 && cfg.p_high <= 1.0))
    throw ConfigError("p_high must lie in (0, 1], got " + std::to_string(cfg.p_high));
  if (!(cfg.heaps_k > 0.0) || !std::isfinite(cfg.heaps_k))
    throw ConfigError("heaps_k must be positive, got " + std::to_string(cfg.heaps_k));
  if (!(cfg.heaps_beta > 0.0 && cfg.heaps_beta < 1.0))
    throw ConfigError("heaps_beta must lie strictly inside (0, 1), got " + std::to_string(cfg.heaps_beta));
  if (const auto* z = std::get_if<ZipfHigh>(&cfg.high_dist)) {
    if (!std::isfinite(z->exponent) || z->exponent < 0.0)
      throw ConfigError("high-pool Zipf exponent must be finite and non-negative");
  } else {
    const auto& e = std::get<EmpiricalHigh>(cfg.high_dist);
    if (e.words.size() != e.weights.size())
      throw ConfigError("empirical high-pool table has mismatched words and weights");
    if (e.words.size() < cfg.n_high)
      throw ConfigError("empirical high-pool table has " + std::to_string(e.words.size()) +
                        " words, fewer than n_high = " + std::to_string(cfg.n_high));
    for (double w : e.weights)
      if (!(w > 0.0) || !std::isfinite(w)) throw ConfigError("empirical weights must be positive");
  }
}

ingest::TokenStream simon_generate(const SimonConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  std::vector<std::uint64_t> ids;
  ids.reserve(cfg.n_tokens);
  ids.push_back(0);
  std::uint64_t types = 1;
  for (std::uint64_t t = 1; t < cfg.n_tokens; ++t) {
    if (rng.uniform() < cfg.alpha)
      ids.push_back(types++);
    else
      ids.push_back(ids[rng.below(t)]);
  }
  std::vector<std::string> tokens;
  tokens.reserve(ids.size());
  for (auto id : ids) tokens.push_back(serial_id(id + 1));
  return ingest::TokenStream(std::move(tokens));
}

ingest::TokenStream typing_generate(const TypingConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  const auto letters = static_cast<std::uint64_t>(cfg.alphabet_size);
  std::vector<std::string> tokens;
  tokens.reserve(cfg.n_tokens);
  std::string word;
  while (tokens.size() < cfg.n_tokens) {
    if (rng.uniform() < cfg.space_prob) {
      if (!word.empty()) tokens.push_back(std::exchange(word, {}));
    } else {
      word.push_back(static_cast<char>('a' + rng.below(letters)));
    }
  }
  return ingest::TokenStream(std::move(tokens));
}

HighPool high_pool(const DualConfig& cfg) {
  validate(cfg);
  HighPool pool;
  pool.words.reserve(cfg.n_high);
  std::vector<double> weights;
  weights.reserve(cfg.n_high);
  if (const auto* z = std::get_if<ZipfHigh>(&cfg.high_dist)) {
    for (std::size_t r = 1; r <= cfg.n_high; ++r) {
      pool.words.push_back(serial_id(r));
      weights.push_back(std::pow(static_cast<double>(r), -z->exponent));
    }
  } else {
    const auto& e = std::get<EmpiricalHigh>(cfg.high_dist);
    std::vector<std::size_t> order(e.words.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return e.weights[a] > e.weights[b] || (e.weights[a] == e.weights[b] && e.words[a] < e.words[b]);
    });
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < cfg.n_high; ++i) {
      const auto& w = e.words[order[i]];
      if (!seen.insert(w).second) throw ConfigError("empirical high-pool table repeats word '" + w + "'");
      pool.words.push_back(w);
      weights.push_back(e.weights[order[i]]);
    }
  }
  // Sorted ascending before summing to keep rounding small.
  std::vector<double> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (double w : sorted) total += w;
  pool.probabilities.reserve(weights.size());
  for (double w : weights) pool.probabilities.push_back(cfg.p_high * w / total);
  return pool;
}

ingest::TokenStream dual_generate(const DualConfig& cfg) {
  const HighPool pool = high_pool(cfg);
  std::vector<double> cdf(pool.probabilities.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) cdf[i] = acc += pool.probabilities[i];
  cdf.back() = cfg.p_high;

  Rng rng(cfg.seed);
  std::unordered_set<std::string> taken(pool.words.begin(), pool.words.end());
  std::vector<std::string> low_types;
  std::vector<std::uint32_t> low_tokens;  // for preferential reuse
  std::vector<std::string> tokens;
  tokens.reserve(cfg.n_tokens);
  const double low_share = 1.0 - cfg.p_high;
  static constexpr std::array<char, 16> kHex{'0', '1', '2', '3', '4', '5', '6', '7',
                                            '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};

  for (std::uint64_t t = 1; t <= cfg.n_tokens; ++t) {
    const double u = rng.uniform();
    if (u < cfg.p_high) {
      const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      tokens.push_back(pool.words[static_cast<std::size_t>(it - cdf.begin())]);
      continue;
    }
    const double p_new = std::min(
        1.0, cfg.heaps_k * cfg.heaps_beta * std::pow(static_cast<double>(t), cfg.heaps_beta - 1.0) / low_share);
    std::uint32_t id = 0;
    if (low_types.empty() || rng.uniform() < p_new) {
      std::string fresh;
      do {
        std::uint64_t bits = rng.bits();
        fresh = "n";
        for (int d = 0; d < 10; ++d, bits >>= 4) fresh.push_back(kHex[bits & 0xF]);
      } while (!taken.insert(fresh).second);
      id = static_cast<std::uint32_t>(low_types.size());
      low_types.push_back(std::move(fresh));
    } else if (cfg.reuse == LowReuse::uniform) {
      id = static_cast<std::uint32_t>(rng.below(low_types.size()));
    } else {
      id = low_tokens[rng.below(low_tokens.size())];
    }
    if (cfg.reuse == LowReuse::preferential) low_tokens.push_back(id);
    tokens.push_back(low_types[id]);
  }
  return ingest::TokenStream(std::move(tokens));
}

EmpiricalHigh load_empirical_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open empirical table '" + path.string() + "'");
  const auto table = freq::read_table_csv(in);
  const auto curve = freq::rank(table);
  EmpiricalHigh out;
  for (const auto& p : curve.points) {
    out.words.push_back(p.word);
    out.weights.push_back(static_cast<double>(p.frequency));
  }
  return out;
}

}  // namespace zipfkit::gen

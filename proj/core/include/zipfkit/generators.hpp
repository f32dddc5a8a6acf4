#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "zipfkit/corpus.hpp"

namespace zipfkit::gen {

struct SimonConfig {
  std::uint64_t n_tokens = 1'000'000;
  double alpha = 0.05;  // new-word probability
  std::uint64_t seed = 0;
};

struct TypingConfig {
  std::uint64_t n_tokens = 1'000'000;
  int alphabet_size = 5;  // letters a, b, c, ...; at most 26
  double space_prob = 0.2;
  std::uint64_t seed = 0;
};

/// High-pool weights proportional to rank^-s over ranks 1..n_high.
struct ZipfHigh {
  double exponent = 1.0;
};

/// High-pool words and weights taken from an existing frequency table.
struct EmpiricalHigh {
  std::vector<std::string> words;
  std::vector<double> weights;  // positive, any scale
};

enum class LowReuse {
  uniform,       // every existing low-pool type equally likely
  preferential,  // proportional to the type's low-pool token count
};

struct DualConfig {
  std::uint64_t n_tokens = 1'000'000;
  std::size_t n_high = 3000;
  double p_high = 0.8;
  std::variant<ZipfHigh, EmpiricalHigh> high_dist = ZipfHigh{};
  double heaps_k = 3.0;
  double heaps_beta = 0.7;
  LowReuse reuse = LowReuse::uniform;
  std::uint64_t seed = 0;
};

// Each validator throws ConfigError naming the offending field.
void validate(const SimonConfig& cfg);
void validate(const TypingConfig& cfg);
void validate(const DualConfig& cfg);

/// Token 1 is new; afterwards a new type with probability alpha, else a copy
/// of a uniformly chosen earlier token. Types are w000001, w000002, ...
ingest::TokenStream simon_generate(const SimonConfig& cfg);

/// Uniform keystrokes over the alphabet with a space emitted with
/// probability space_prob; maximal non-space runs are the words.
ingest::TokenStream typing_generate(const TypingConfig& cfg);

struct HighPool {
  std::vector<std::string> words;
  std::vector<double> probabilities;  // sums to p_high
};

/// The fixed high-pool distribution of `cfg`. Zipf pools use the words
/// w000001 .. w<n_high>; empirical pools keep the table's top n_high words.
HighPool high_pool(const DualConfig& cfg);

/// With probability p_high a high-pool word; otherwise a low-pool token that
/// is a new type with probability min(1, k beta t^(beta - 1) / (1 - p_high))
/// at global position t (1-based), else a reused low-pool type. The first
/// low-pool draw always creates a type. New low-pool types are random
/// identifiers ("n" + 10 hex digits) so independent seeds share no low words.
ingest::TokenStream dual_generate(const DualConfig& cfg);

/// Reads a `word,count` table (as written by `analyze`) into an
/// EmpiricalHigh distribution.
EmpiricalHigh load_empirical_table(const std::filesystem::path& path);

}  // namespace zipfkit::gen

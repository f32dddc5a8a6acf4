#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zipfkit::ingest {

struct TokenizeRules {
  bool strip_punctuation = true;  // leading/trailing Unicode punctuation (category P*)
  bool fold_case = true;          // simple case folding
};

struct Sentence {
  std::vector<std::string> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Ordered sequence of word tokens. Every token is non-empty and free of
/// whitespace; the constructor enforces this.
class TokenStream {
 public:
  TokenStream() = default;
  explicit TokenStream(std::vector<std::string> tokens);

  std::size_t token_count() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  std::span<const std::string> tokens() const noexcept { return tokens_; }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }

  /// First n tokens as a new stream.
  TokenStream prefix(std::size_t n) const;

  friend bool operator==(const TokenStream&, const TokenStream&) = default;

 private:
  std::vector<std::string> tokens_;
};

/// Nested prefix samples S1 ⊂ S2 ⊂ ... ⊂ Sn where each level holds exactly
/// twice as many tokens as the one before.
class SampleChain {
 public:
  SampleChain(TokenStream base, std::vector<std::size_t> sizes);

  std::size_t levels() const noexcept { return sizes_.size(); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::span<const std::string> level(std::size_t k) const;
  TokenStream level_stream(std::size_t k) const { return base_.prefix(sizes_.at(k)); }

 private:
  TokenStream base_;  // truncated to the largest level
  std::vector<std::size_t> sizes_;
};

/// Splits text into sentences (one per line) and tokens (Unicode
/// whitespace). Throws IngestError with the byte offset of the first
/// malformed UTF-8 sequence.
std::vector<Sentence> tokenize(std::string_view text, const TokenizeRules& rules = {});

/// Normalizes a single whitespace-free word under `rules`; may return "".
std::string normalize_token(std::string_view word, const TokenizeRules& rules);

/// Fisher-Yates permutation of whole sentences driven by `seed`.
std::vector<Sentence> shuffle_sentences(std::vector<Sentence> sentences, std::uint64_t seed);

TokenStream flatten(const std::vector<Sentence>& sentences);

/// Prefixes of sizes floor(N / 2^(levels-1)) * {1, 2, ..., 2^(levels-1)}.
/// Tokens past the largest level are discarded.
SampleChain build_doubling_chain(const TokenStream& stream, int levels);

std::string read_text_file(const std::filesystem::path& path);

/// One token per line; blank lines are skipped.
TokenStream read_token_file(const std::filesystem::path& path);
void write_token_file(const std::filesystem::path& path, const TokenStream& stream);

/// Reads a corpus file and returns its token stream, optionally shuffling
/// sentences first.
struct LoadOptions {
  TokenizeRules rules;
  bool shuffle = false;
  std::uint64_t seed = 0;
};
TokenStream load_corpus(const std::filesystem::path& path, const LoadOptions& options);

}  // namespace zipfkit::ingest

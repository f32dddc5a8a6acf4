#include "zipfkit/corpus.hpp"

#include <utility>

#include "unicode.hpp"
#include "zipfkit/error.hpp"
#include "zipfkit/io.hpp"
#include "zipfkit/rng.hpp"

namespace zipfkit::ingest {
namespace {

bool has_white_space(const std::string& token) {
  for (unsigned char c : token) {
    if (c >= 0x80) return unicode::contains_white_space(token);
  }
  for (unsigned char c : token) {
    if (c == ' ' || (c >= 0x09 && c <= 0x0D)) return true;
  }
  return false;
}

}  // namespace

TokenStream::TokenStream(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty()) throw DataError("token " + std::to_string(i) + " is empty");
    if (has_white_space(tokens_[i]))
      throw DataError("token " + std::to_string(i) + " contains whitespace");
  }
}

TokenStream TokenStream::prefix(std::size_t n) const {
  if (n > tokens_.size()) throw DataError("prefix longer than stream");
  TokenStream out;
  out.tokens_.assign(tokens_.begin(), tokens_.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

SampleChain::SampleChain(TokenStream base, std::vector<std::size_t> sizes)
    : base_(std::move(base)), sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) throw DataError("a sample chain needs at least 2 levels");
  for (std::size_t k = 1; k < sizes_.size(); ++k) {
    if (sizes_[k] != 2 * sizes_[k - 1]) throw DataError("chain levels must double exactly");
  }
  if (sizes_.front() == 0) throw DataError("chain levels must be non-empty");
  if (sizes_.back() > base_.token_count()) throw DataError("chain exceeds its base stream");
}

std::span<const std::string> SampleChain::level(std::size_t k) const {
  return base_.tokens().first(sizes_.at(k));
}

std::string normalize_token(std::string_view word, const TokenizeRules& rules) {
  std::u32string cps;
  cps.reserve(word.size());
  for (std::size_t pos = 0; pos < word.size();) cps.push_back(unicode::decode(word, pos));

  std::size_t first = 0;
  std::size_t last = cps.size();
  if (rules.strip_punctuation) {
    while (first < last && unicode::is_punctuation(cps[first])) ++first;
    while (last > first && unicode::is_punctuation(cps[last - 1])) --last;
  }
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = first; i < last; ++i) {
    unicode::append_utf8(out, rules.fold_case ? unicode::fold_case(cps[i]) : cps[i]);
  }
  return out;
}

std::vector<Sentence> tokenize(std::string_view text, const TokenizeRules& rules) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::size_t word_start = 0;
  bool in_word = false;

  auto close_word = [&](std::size_t end) {
    if (!in_word) return;
    in_word = false;
    std::string token = normalize_token(text.substr(word_start, end - word_start), rules);
    if (!token.empty()) current.tokens.push_back(std::move(token));
  };
  auto close_sentence = [&] {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t at = pos;
    const char32_t cp = unicode::decode(text, pos);
    if (cp == U'\n') {
      close_word(at);
      close_sentence();
    } else if (unicode::is_white_space(cp)) {
      close_word(at);
    } else if (!in_word) {
      in_word = true;
      word_start = at;
    }
  }
  close_word(text.size());
  close_sentence();
  return sentences;
}

std::vector<Sentence> shuffle_sentences(std::vector<Sentence> sentences, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t i = sentences.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(sentences[i - 1], sentences[j]);
  }
  return sentences;
}

TokenStream flatten(const std::vector<Sentence>& sentences) {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (const auto& s : sentences) tokens.insert(tokens.end(), s.tokens.begin(), s.tokens.end());
  return TokenStream(std::move(tokens));
}

SampleChain build_doubling_chain(const TokenStream& stream, int levels) {
  if (levels < 2) throw DataError("doubling chain needs at least 2 levels");
  if (levels > 62) throw DataError("too many chain levels");
  const std::size_t factor = std::size_t{1} << (levels - 1);
  const std::size_t n = stream.token_count();
  if (n < factor) {
    throw DataError("stream has " + std::to_string(n) + " tokens; " + std::to_string(levels) +
                    " levels need at least " + std::to_string(factor));
  }
  const std::size_t base = n / factor;
  std::vector<std::size_t> sizes;
  for (int k = 0; k < levels; ++k) sizes.push_back(base << k);
  TokenStream base_stream = stream.prefix(sizes.back());
  return SampleChain(std::move(base_stream), std::move(sizes));
}

std::string read_text_file(const std::filesystem::path& path) { return io::read_file(path); }

TokenStream read_token_file(const std::filesystem::path& path) {
  return flatten(tokenize(io::read_file(path), TokenizeRules{false, false}));
}

void write_token_file(const std::filesystem::path& path, const TokenStream& stream) {
  io::write_atomic(path, [&](std::ostream& out) {
    for (const auto& t : stream.tokens()) out << t << '\n';
  });
}

TokenStream load_corpus(const std::filesystem::path& path, const LoadOptions& options) {
  auto sentences = tokenize(io::read_file(path), options.rules);
  if (options.shuffle) sentences = shuffle_sentences(std::move(sentences), options.seed);
  return flatten(sentences);
}

}  // namespace zipfkit::ingest

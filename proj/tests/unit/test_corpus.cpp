#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "doctest.h"
#include "zipfkit/corpus.hpp"
#include "zipfkit/error.hpp"

using namespace zipfkit;
using namespace zipfkit::ingest;

namespace {

std::vector<std::string> words(const Sentence& s) { return s.tokens; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("zipfkit_unit_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST_CASE("tokenize strips punctuation and folds case") {
  const auto s = tokenize("The cat, the dog.");
  REQUIRE(s.size() == 1);
  CHECK(words(s[0]) == std::vector<std::string>{"the", "cat", "the", "dog"});
}

TEST_CASE("tokenize of empty text is empty") { CHECK(tokenize("").empty()); }

TEST_CASE("newlines separate sentences") {
  const auto s = tokenize("a b\nc");
  REQUIRE(s.size() == 2);
  CHECK(words(s[0]) == std::vector<std::string>{"a", "b"});
  CHECK(words(s[1]) == std::vector<std::string>{"c"});
}

TEST_CASE("tokenize handles Unicode whitespace, punctuation and case") {
  // U+00A0 no-break space, U+3000 ideographic space, U+201C/U+201D quotes.
  const auto s = tokenize("\xC3\x84PFEL\xC2\xA0\xE2\x80\x9CStra\xC3\x9F" "e\xE2\x80\x9D\xE3\x80\x80\xCE\xA3\xCE\x9F\xCE\xA6\xCE\x99\xCE\x91!");
  REQUIRE(s.size() == 1);
  CHECK(words(s[0]) == std::vector<std::string>{"\xC3\xA4pfel", "stra\xC3\x9F" "e", "\xCF\x83\xCE\xBF\xCF\x86\xCE\xB9\xCE\xB1"});
}

TEST_CASE("rules can keep punctuation and case") {
  const auto s = tokenize("Hello, World!", TokenizeRules{false, false});
  CHECK(words(s[0]) == std::vector<std::string>{"Hello,", "World!"});
}

TEST_CASE("tokens made only of punctuation vanish") {
  const auto s = tokenize("-- ... a --\n!!!");
  REQUIRE(s.size() == 1);
  CHECK(words(s[0]) == std::vector<std::string>{"a"});
}

TEST_CASE("malformed UTF-8 reports the byte offset") {
  const std::string text = "ok fine \xC3\x28 rest";
  try {
    tokenize(text);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(e.byte_offset() == 8);
  }
  CHECK_THROWS_AS(tokenize("abc \xED\xA0\x80"), IngestError);      // surrogate
  CHECK_THROWS_AS(tokenize("\xC0\xAF"), IngestError);              // overlong
  CHECK_THROWS_AS(tokenize("trailing \xE2\x82"), IngestError);     // truncated
}

TEST_CASE("tokenization is idempotent") {
  const std::string text = "\xC2\xBFQu\xC3\xA9 tal?  \"Bien\", gracias.\nEl PERRO (grande) corre; r\xC3\xA1pido!";
  const auto once = tokenize(text);
  std::string joined;
  for (const auto& s : once) {
    for (const auto& t : s.tokens) joined += t + " ";
    joined += "\n";
  }
  CHECK(tokenize(joined) == once);
}

TEST_CASE("shuffling one sentence is the identity") {
  std::vector<Sentence> one{{{"a", "b"}}};
  for (std::uint64_t seed : {0u, 1u, 99u}) CHECK(shuffle_sentences(one, seed) == one);
}

TEST_CASE("shuffle is deterministic and content-preserving") {
  std::vector<Sentence> s;
  for (int i = 0; i < 200; ++i) s.push_back({{"w" + std::to_string(i % 17), "x" + std::to_string(i)}});
  const auto a = shuffle_sentences(s, 42);
  CHECK(a == shuffle_sentences(s, 42));
  CHECK(a != shuffle_sentences(s, 43));
  CHECK(a != s);
  auto ta = flatten(a);
  auto ts = flatten(s);
  std::vector<std::string> va(ta.tokens().begin(), ta.tokens().end());
  std::vector<std::string> vs(ts.tokens().begin(), ts.tokens().end());
  std::sort(va.begin(), va.end());
  std::sort(vs.begin(), vs.end());
  CHECK(va == vs);
}

TEST_CASE("shuffle draws every permutation of three sentences") {
  std::vector<Sentence> s{{{"a"}}, {{"b"}}, {{"c"}}};
  std::map<std::string, int> seen;
  for (std::uint64_t seed = 0; seed < 6000; ++seed) {
    std::string key;
    for (const auto& x : shuffle_sentences(s, seed)) key += x.tokens[0];
    ++seen[key];
  }
  CHECK(seen.size() == 6);
  for (const auto& [k, v] : seen) CHECK(std::abs(v - 1000) < 150);
}

TEST_CASE("doubling chain sizes follow the floor rule") {
  std::vector<std::string> t(1001, "a");
  const TokenStream s(t);
  const auto chain = build_doubling_chain(s.prefix(1000), 3);
  CHECK(chain.sizes() == std::vector<std::size_t>{250, 500, 1000});
  CHECK(build_doubling_chain(s, 3).sizes() == std::vector<std::size_t>{250, 500, 1000});
  CHECK_THROWS_AS(build_doubling_chain(s.prefix(3), 3), DataError);
  CHECK(build_doubling_chain(s.prefix(4), 3).sizes() == std::vector<std::size_t>{1, 2, 4});
}

TEST_CASE("chain levels are prefixes of exactly half the next") {
  std::vector<std::string> t;
  for (int i = 0; i < 777; ++i) t.push_back("t" + std::to_string(i * 31 % 97));
  const auto chain = build_doubling_chain(TokenStream(t), 5);
  for (std::size_t k = 0; k + 1 < chain.levels(); ++k) {
    const auto a = chain.level(k);
    const auto b = chain.level(k + 1);
    CHECK(b.size() == 2 * a.size());
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST_CASE("SampleChain rejects non-doubling sizes") {
  TokenStream s(std::vector<std::string>(10, "a"));
  CHECK_THROWS_AS(SampleChain(s, {2, 5}), DataError);
  CHECK_THROWS_AS(SampleChain(s, {3}), DataError);
  CHECK_THROWS_AS(SampleChain(s, {4, 8, 16}), DataError);
}

TEST_CASE("TokenStream rejects empty and whitespace tokens") {
  CHECK_THROWS_AS(TokenStream(std::vector<std::string>{"a", ""}), DataError);
  CHECK_THROWS_AS(TokenStream(std::vector<std::string>{"a b"}), DataError);
}

TEST_CASE("token files round-trip") {
  const TokenStream s(std::vector<std::string>{"w000001", "\xC3\xA9t\xC3\xA9", "W!"});
  const auto p = std::filesystem::temp_directory_path() / "zipfkit_unit_tokens.txt";
  write_token_file(p, s);
  CHECK(read_token_file(p) == s);
  std::filesystem::remove(p);
}

TEST_CASE("load_corpus shuffles only when asked") {
  const auto p = temp_file("corpus.txt", "A b.\nc d\ne F\n");
  LoadOptions plain;
  const auto s = load_corpus(p, plain);
  CHECK(std::vector<std::string>(s.tokens().begin(), s.tokens().end()) ==
        std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  LoadOptions shuffled;
  shuffled.shuffle = true;
  shuffled.seed = 5;
  CHECK(load_corpus(p, shuffled) == load_corpus(p, shuffled));
  CHECK(load_corpus(p, shuffled).token_count() == 6);
  std::filesystem::remove(p);
  CHECK_THROWS_AS(load_corpus(p, plain), DataError);
}

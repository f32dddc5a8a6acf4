#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zipfkit/compare.hpp"
#include "zipfkit/error.hpp"
#include "zipfkit/frequency.hpp"
#include "zipfkit/generators.hpp"

using namespace zipfkit;
using namespace zipfkit::gen;

namespace {

std::size_t types(const ingest::TokenStream& s) {
  return std::set<std::string>(s.tokens().begin(), s.tokens().end()).size();
}

}  // namespace

TEST_CASE("Simon extremes") {
  const auto all_new = simon_generate({100, 1.0, 3});
  CHECK(types(all_new) == 100);
  const auto curve = freq::rank(freq::count(all_new));
  CHECK(curve.points.front().frequency == 1);
  CHECK(all_new[0] == "w000001");
  CHECK(all_new[99] == "w000100");
  const auto none_new = simon_generate({100, 0.0, 3});
  CHECK(types(none_new) == 1);
  CHECK(simon_generate({1, 0.5, 1}).token_count() == 1);
}

TEST_CASE("Simon type count matches 1 + alpha (n - 1) within 3 sigma") {
  const std::uint64_t n = 20000;
  const double alpha = 0.1;
  double sum = 0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) sum += double(types(simon_generate({n, alpha, std::uint64_t(s)})));
  const double mean = sum / seeds;
  const double expected = 1 + alpha * (n - 1);
  const double sigma = std::sqrt((n - 1) * alpha * (1 - alpha) / seeds);
  CHECK(std::abs(mean - expected) <= 3 * sigma);
}

TEST_CASE("Simon numbers new types in order of appearance") {
  const auto s = simon_generate({5000, 0.02, 8});
  std::set<std::string> seen;
  std::size_t news = 0;
  for (std::size_t i = 0; i < s.token_count(); ++i) {
    if (seen.insert(s[i]).second) {
      ++news;
      CHECK(s[i] == "w" + std::string(6 - std::to_string(news).size(), '0') + std::to_string(news));
    }
  }
}

TEST_CASE("typing with one letter has geometric word lengths") {
  const double p = 0.3;
  const auto s = typing_generate({200000, 1, p, 5});
  std::map<std::size_t, double> by_length;
  for (const auto& t : s.tokens()) {
    CHECK_FALSE(t.empty());
    by_length[t.size()] += 1;
  }
  for (std::size_t l = 1; l <= 4; ++l)
    CHECK(by_length[l] / by_length[l + 1] == doctest::Approx(1 / (1 - p)).epsilon(0.05));
}

TEST_CASE("typing emits exactly n words, none empty, over the alphabet") {
  const auto s = typing_generate({5000, 3, 0.4, 1});
  CHECK(s.token_count() == 5000);
  for (const auto& t : s.tokens())
    for (char c : t) CHECK((c >= 'a' && c <= 'c'));
  CHECK(typing_generate({1, 5, 0.2, 9}).token_count() == 1);
}

TEST_CASE("typing staircase for short words") {
  const auto s = typing_generate({400000, 3, 0.25, 12});
  const auto table = freq::count(s);
  for (int len = 1; len <= 3; ++len) {
    double total = 0;
    int words = 0;
    for (const auto& [w, c] : table.entries())
      if (int(w.size()) == len) {
        total += double(c);
        ++words;
      }
    CHECK(words == int(std::pow(3, len)));
    const double mean = total / words / double(s.token_count());
    CHECK(mean == doctest::Approx(oracle::typing_word_probability(3, 0.25, len)).epsilon(0.03));
  }
}

TEST_CASE("generator configs are validated") {
  CHECK_THROWS_AS(simon_generate({0, 0.5, 1}), ConfigError);
  CHECK_THROWS_AS(simon_generate({10, 1.5, 1}), ConfigError);
  CHECK_THROWS_AS(typing_generate({10, 0, 0.2, 1}), ConfigError);
  CHECK_THROWS_AS(typing_generate({10, 27, 0.2, 1}), ConfigError);
  CHECK_THROWS_AS(typing_generate({10, 3, 1.0, 1}), ConfigError);
  CHECK_THROWS_AS(typing_generate({10, 3, 0.0, 1}), ConfigError);
  DualConfig d;
  d.n_tokens = 10;
  d.heaps_beta = 1.0;
  CHECK_THROWS_AS(dual_generate(d), ConfigError);
  d.heaps_beta = 0.7;
  d.p_high = 0.0;
  CHECK_THROWS_AS(dual_generate(d), ConfigError);
  d.p_high = 0.8;
  d.heaps_k = -1;
  CHECK_THROWS_AS(dual_generate(d), ConfigError);
  d.heaps_k = 3;
  d.high_dist = EmpiricalHigh{{"a", "b"}, {1.0, 2.0}};
  CHECK_THROWS_AS(dual_generate(d), ConfigError);
}

TEST_CASE("high pool probabilities sum to p_high") {
  DualConfig d;
  const auto pool = high_pool(d);
  CHECK(pool.words.size() == 3000);
  CHECK(pool.words.front() == "w000001");
  CHECK(pool.words.back() == "w003000");
  const double sum = std::accumulate(pool.probabilities.begin(), pool.probabilities.end(), 0.0);
  CHECK(std::abs(sum - 0.8) <= 1e-12);
  CHECK(pool.probabilities[0] / pool.probabilities[9] == doctest::Approx(10.0));

  d.n_high = 3;
  d.p_high = 0.5;
  d.high_dist = EmpiricalHigh{{"x", "y", "z", "q"}, {1.0, 6.0, 3.0, 0.5}};
  const auto e = high_pool(d);
  CHECK(e.words == std::vector<std::string>{"y", "z", "x"});
  CHECK(e.probabilities[0] == doctest::Approx(0.3));
}

TEST_CASE("dual with p_high = 1 draws only the high pool") {
  DualConfig d;
  d.n_tokens = 300000;
  d.p_high = 1.0;
  d.n_high = 50;
  d.seed = 4;
  const auto s = dual_generate(d);
  const auto pool = high_pool(d);
  const auto table = freq::count(s);
  CHECK(table.vocabulary() == 50);
  for (std::size_t i = 0; i < 5; ++i) {
    const double share = double(table.count_of(pool.words[i])) / double(d.n_tokens);
    const double p = pool.probabilities[i];
    CHECK(std::abs(share - p) <= 4 * std::sqrt(p * (1 - p) / double(d.n_tokens)));
  }
}

TEST_CASE("dual high-pool share concentrates at p_high") {
  DualConfig d;
  d.n_tokens = 200000;
  const auto pool = high_pool(d);
  const std::set<std::string> high(pool.words.begin(), pool.words.end());
  for (std::uint64_t seed : {1, 2, 3}) {
    d.seed = seed;
    const auto s = dual_generate(d);
    std::size_t in_high = 0;
    for (const auto& t : s.tokens()) in_high += high.count(t);
    const double share = double(in_high) / double(d.n_tokens);
    CHECK(std::abs(share - 0.8) <= 3 * std::sqrt(0.8 * 0.2 / double(d.n_tokens)));
  }
}

TEST_CASE("dual new-word count follows the Heaps schedule") {
  DualConfig d;
  d.n_tokens = 200000;
  d.seed = 6;
  const auto s = dual_generate(d);
  const auto pool = high_pool(d);
  const std::set<std::string> high(pool.words.begin(), pool.words.end());
  std::set<std::string> low;
  for (const auto& t : s.tokens())
    if (!high.count(t)) low.insert(t);
  // Expected new types: sum over t of (1 - p_high) min(1, k beta t^(beta-1) / (1 - p_high)).
  double expected = 0;
  for (double t = 1; t <= double(d.n_tokens); ++t)
    expected += std::min(0.2, d.heaps_k * d.heaps_beta * std::pow(t, d.heaps_beta - 1));
  CHECK(double(low.size()) == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("preferential reuse differs from uniform") {
  DualConfig d;
  d.n_tokens = 50000;
  d.seed = 2;
  const auto u = dual_generate(d);
  d.reuse = LowReuse::preferential;
  const auto p = dual_generate(d);
  CHECK(u != p);
  CHECK(p == dual_generate(d));
}

TEST_CASE("generators are deterministic per seed") {
  CHECK(simon_generate({5000, 0.1, 7}) == simon_generate({5000, 0.1, 7}));
  CHECK(simon_generate({5000, 0.1, 7}) != simon_generate({5000, 0.1, 8}));
  CHECK(typing_generate({5000, 4, 0.2, 7}) == typing_generate({5000, 4, 0.2, 7}));
  DualConfig d;
  d.n_tokens = 20000;
  d.seed = 7;
  CHECK(dual_generate(d) == dual_generate(d));
}

TEST_CASE("model fit flags an empty lower segment") {
  DualConfig d;
  d.n_tokens = 100000;
  d.p_high = 1.0;
  d.seed = 1;
  const auto m = fit_model("dual", dual_generate(d), PipelineSettings{});
  CHECK(m.upper.has_value());
  CHECK(m.middle.has_value());
  CHECK_FALSE(m.lower.has_value());
  CHECK_FALSE(m.bend.has_value());
  CHECK(std::find(m.flags.begin(), m.flags.end(), "lower_segment_empty") != m.flags.end());
  CHECK(std::find(m.flags.begin(), m.flags.end(), "bend_undefined") != m.flags.end());
}

TEST_CASE("compare_models needs equal token counts") {
  DualConfig d;
  d.n_tokens = 1000;
  CHECK_THROWS_AS(compare_models({999, 0.1, 1}, {1000, 5, 0.2, 1}, d), ConfigError);
}

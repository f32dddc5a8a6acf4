#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "zipfkit/error.hpp"
#include "zipfkit/growth.hpp"
#include "zipfkit/rng.hpp"

using namespace zipfkit;
using namespace zipfkit::growth;

namespace {

// Fills a stream so that `word` has cumulative counts `counts` at levels of
// size `base` * 2^k, padding with unique filler tokens.
ingest::TokenStream planted(const std::vector<std::uint64_t>& counts, std::size_t base) {
  std::vector<std::string> tokens;
  std::uint64_t filler = 0;
  std::uint64_t placed = 0;
  std::size_t size = base;
  for (std::uint64_t c : counts) {
    for (; placed < c; ++placed) tokens.push_back("target");
    while (tokens.size() < size) tokens.push_back("f" + std::to_string(filler++));
    size *= 2;
  }
  return ingest::TokenStream(tokens);
}

const WordGrowth& find(const GrowthReport& r, const std::string& w) {
  for (const auto& g : r.per_word)
    if (g.word == w) return g;
  throw std::runtime_error("missing word " + w);
}

}  // namespace

TEST_CASE("proportional and stalled growth") {
  const auto grow = planted({10, 20, 40}, 100);
  const auto chain = ingest::build_doubling_chain(grow, 3);
  const auto r = growth_rates(chain, {1, 2});
  const auto& g = find(r, "target");
  CHECK(g.raw_mean_ratio == doctest::Approx(2.0));
  CHECK(g.normalized_mean_ratio == doctest::Approx(1.0));
  CHECK(g.levels_present == 3);
  CHECK(g.segment == Segment::upper);

  const auto stall = planted({10, 10, 10}, 100);
  const auto r2 = growth_rates(ingest::build_doubling_chain(stall, 3), {1, 2});
  CHECK(find(r2, "target").raw_mean_ratio == doctest::Approx(1.0));
  CHECK(find(r2, "target").normalized_mean_ratio == doctest::Approx(0.5));
}

TEST_CASE("multinomial corpus clusters at 2") {
  // 400 words with Zipf-like weights, sampled independently.
  Rng rng(9);
  std::vector<double> cdf;
  double acc = 0;
  for (int r = 1; r <= 400; ++r) cdf.push_back(acc += 1.0 / r);
  for (auto& c : cdf) c /= acc;
  std::vector<std::string> tokens;
  const std::size_t n = 1 << 19;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    tokens.push_back("m" + std::to_string(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()));
  }
  const auto chain = ingest::build_doubling_chain(ingest::TokenStream(tokens), 6);
  const auto r = growth_rates(chain, {20, 100});
  const double smallest = double(chain.sizes()[0]);
  int checked = 0;
  for (const auto& g : r.per_word) {
    const int idx = std::stoi(g.word.substr(1));
    const double expected = smallest * (1.0 / (idx + 1)) / acc;
    if (expected < 100) continue;
    ++checked;
    CHECK(g.raw_mean_ratio >= 1.9);
    CHECK(g.raw_mean_ratio <= 2.1);
  }
  CHECK(checked > 10);
}

TEST_CASE("raw ratio is twice the normalized ratio under doubling") {
  Rng rng(4);
  std::vector<std::string> tokens;
  for (int i = 0; i < 40000; ++i) tokens.push_back("w" + std::to_string(rng.below(3000) % (1 + rng.below(3000))));
  const auto chain = ingest::build_doubling_chain(ingest::TokenStream(tokens), 5);
  const auto r = growth_rates(chain, {10, 100});
  for (const auto& g : r.per_word) CHECK(std::abs(g.raw_mean_ratio - 2.0 * g.normalized_mean_ratio) < 1e-12);
  std::size_t total = 0;
  for (const auto& s : r.segments)
    total += std::accumulate(s.histogram.begin(), s.histogram.end(), std::size_t{0}) + s.single_level_words;
  std::size_t vocab = 0;
  {
    std::set<std::string> v(chain.level(chain.levels() - 1).begin(), chain.level(chain.levels() - 1).end());
    vocab = v.size();
  }
  CHECK(total == vocab);
}

TEST_CASE("histogram bins and CSV") {
  CHECK(histogram_bin_start(0) == 1.0);
  CHECK(histogram_bin_start(10) == doctest::Approx(2.0));
  CHECK(histogram_bin_start(kHistogramBins - 1) == doctest::Approx(4.0));
  const auto r = growth_rates(ingest::build_doubling_chain(planted({10, 20, 40}, 100), 3), {1, 2});
  std::ostringstream out;
  write_histogram_csv(out, r);
  const std::string s = out.str();
  CHECK(s.rfind("segment,ratio_bin,word_count\n", 0) == 0);
  CHECK(s.find("upper,2,1\n") != std::string::npos);
}

TEST_CASE("heaps fit on an exact law") {
  std::vector<Point> pts;
  for (int i = 0; i < 20; ++i) {
    const double n = std::pow(10.0, 2 + 0.25 * i);
    pts.push_back({n, 3.0 * std::pow(n, 0.7)});
  }
  const auto f = heaps_fit(pts);
  CHECK(std::abs(f.beta - 0.7) < 1e-6);
  CHECK(f.k == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(f.warnings.empty());

  freq::HeapsCurve rounded;
  for (const auto& p : pts) rounded.points.push_back({std::uint64_t(std::llround(p.x)), std::uint64_t(std::llround(p.y))});
  CHECK(std::abs(heaps_fit(rounded).beta - 0.7) < 1e-3);
}

TEST_CASE("heaps fit on an all-distinct stream has slope 1") {
  freq::HeapsCurve c;
  for (std::uint64_t n : {1, 10, 100, 1000, 10000}) c.points.push_back({n, n});
  CHECK(heaps_fit(c).beta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("saturated vocabulary gives beta near zero") {
  freq::HeapsCurve c;
  for (std::uint64_t n = 100; n <= 1000000; n *= 2) c.points.push_back({n, 50});
  const auto f = heaps_fit(c);
  CHECK(std::abs(f.beta) < 1e-9);
}

TEST_CASE("heaps slope is invariant under rescaled token counts") {
  freq::HeapsCurve a, b;
  for (std::uint64_t n = 10; n <= 10000000; n *= 3) {
    const auto v = std::uint64_t(std::pow(double(n), 0.63) * 1.7 + (n % 7));
    a.points.push_back({n, v});
    b.points.push_back({n * 8, v});
  }
  CHECK(std::abs(heaps_fit(a).beta - heaps_fit(b).beta) < 1e-12);
}

TEST_CASE("new word rate") {
  CHECK(new_word_rate({1.0, 1.0, 1.0, {}}, 1.0) == 1.0);
  CHECK(new_word_rate({1.0, 1.0, 1.0, {}}, 12345.0) == 1.0);
  const HeapsFit f{3.0, 0.7, 1.0, {}};
  CHECK(new_word_rate(f, 1.0) == 1.0);
  double prev = 1.0;
  for (double n = 2; n < 1e9; n *= 1.7) {
    const double r = new_word_rate(f, n);
    CHECK(r <= prev);
    prev = r;
  }
  CHECK(prev < 1e-2);
  CHECK_THROWS_AS(new_word_rate(f, 0.5), DataError);
}

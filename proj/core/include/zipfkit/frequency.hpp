#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zipfkit/corpus.hpp"
#include "zipfkit/types.hpp"

namespace zipfkit::freq {

class FrequencyTable {
 public:
  using Map = std::unordered_map<std::string, std::uint64_t>;

  FrequencyTable() = default;
  FrequencyTable(Map counts);

  const Map& entries() const noexcept { return counts_; }
  std::uint64_t total_tokens() const noexcept { return total_; }
  std::size_t vocabulary() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  std::uint64_t count_of(const std::string& word) const;

 private:
  Map counts_;
  std::uint64_t total_ = 0;
};

struct RankedWord {
  std::uint64_t rank = 0;
  std::uint64_t frequency = 0;
  std::string word;
};

/// Frequencies by descending rank; equal frequencies ordered by word.
struct RankFrequencyCurve {
  std::vector<RankedWord> points;

  std::size_t vocabulary() const noexcept { return points.size(); }
  std::vector<Point> as_points() const;
};

struct SpectrumPoint {
  std::uint64_t frequency = 0;
  std::uint64_t type_count = 0;
};

struct FrequencySpectrum {
  std::vector<SpectrumPoint> points;  // ascending frequency
};

struct HeapsPoint {
  std::uint64_t tokens_seen = 0;
  std::uint64_t types_seen = 0;
};

struct HeapsCurve {
  std::vector<HeapsPoint> points;
  std::vector<Point> as_points() const;
};

using WordSet = std::unordered_set<std::string>;

struct SegmentWords {
  WordSet upper;
  WordSet middle;
  WordSet lower;

  const WordSet& operator[](Segment s) const;
};

FrequencyTable count(std::span<const std::string> tokens);
inline FrequencyTable count(const ingest::TokenStream& stream) { return count(stream.tokens()); }

RankFrequencyCurve rank(const FrequencyTable& table);

FrequencySpectrum spectrum(const FrequencyTable& table);

/// Types seen after each checkpoint in one left-to-right pass. Checkpoints
/// must ascend and not exceed the stream length.
HeapsCurve heaps_curve(std::span<const std::string> tokens,
                       std::span<const std::uint64_t> checkpoints);

/// Rounded 10^(k / per_decade) checkpoints up to n, deduplicated, with n
/// itself appended.
std::vector<std::uint64_t> log_checkpoints(std::uint64_t n, int per_decade = 20);

/// |A ∩ B| / sqrt(|A| |B|). Both sets must be non-empty.
double ochiai(const WordSet& a, const WordSet& b);

SegmentWords segment_words(const RankFrequencyCurve& curve, const SegmentBounds& bounds);

// CSV export (header row, LF endings).
void write_table_csv(std::ostream& out, const FrequencyTable& table);  // word,count by rank
void write_curve_csv(std::ostream& out, const RankFrequencyCurve& curve);
void write_spectrum_csv(std::ostream& out, const FrequencySpectrum& spectrum);
void write_heaps_csv(std::ostream& out, const HeapsCurve& curve);

/// Reads a `word,count` CSV as written by write_table_csv.
FrequencyTable read_table_csv(std::istream& in);

}  // namespace zipfkit::freq

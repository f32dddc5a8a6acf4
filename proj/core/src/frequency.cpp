#include "zipfkit/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include "zipfkit/error.hpp"

namespace zipfkit::freq {

FrequencyTable::FrequencyTable(Map counts) : counts_(std::move(counts)) {
  for (const auto& [word, n] : counts_) {
    if (n == 0) throw DataError("zero count for word '" + word + "'");
    total_ += n;
  }
}

std::uint64_t FrequencyTable::count_of(const std::string& word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Point> RankFrequencyCurve::as_points() const {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points)
    out.push_back({static_cast<double>(p.rank), static_cast<double>(p.frequency)});
  return out;
}

std::vector<Point> HeapsCurve::as_points() const {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points)
    out.push_back({static_cast<double>(p.tokens_seen), static_cast<double>(p.types_seen)});
  return out;
}

const WordSet& SegmentWords::operator[](Segment s) const {
  switch (s) {
    case Segment::upper:
      return upper;
    case Segment::middle:
      return middle;
    case Segment::lower:
      break;
  }
  return lower;
}

FrequencyTable count(std::span<const std::string> tokens) {
  FrequencyTable::Map counts;
  for (const auto& t : tokens) ++counts[t];
  return FrequencyTable(std::move(counts));
}

RankFrequencyCurve rank(const FrequencyTable& table) {
  if (table.empty()) throw DataError("cannot rank an empty frequency table");
  std::vector<std::pair<const std::string*, std::uint64_t>> items;
  items.reserve(table.vocabulary());
  for (const auto& [word, n] : table.entries()) items.emplace_back(&word, n);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return *a.first < *b.first;
  });
  RankFrequencyCurve curve;
  curve.points.reserve(items.size());
  std::uint64_t r = 1;
  for (const auto& [word, n] : items) curve.points.push_back({r++, n, *word});
  return curve;
}

FrequencySpectrum spectrum(const FrequencyTable& table) {
  std::map<std::uint64_t, std::uint64_t> by_freq;
  for (const auto& [word, n] : table.entries()) ++by_freq[n];
  FrequencySpectrum out;
  for (const auto& [f, types] : by_freq) out.points.push_back({f, types});
  return out;
}

HeapsCurve heaps_curve(std::span<const std::string> tokens,
                       std::span<const std::uint64_t> checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] > tokens.size())
      throw DataError("checkpoint " + std::to_string(checkpoints[i]) + " exceeds stream length " +
                      std::to_string(tokens.size()));
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw DataError("checkpoints must be strictly ascending");
  }
  HeapsCurve curve;
  std::unordered_set<std::string_view> seen;
  std::size_t next = 0;
  for (std::size_t i = 0; i < tokens.size() && next < checkpoints.size(); ++i) {
    seen.insert(tokens[i]);
    while (next < checkpoints.size() && checkpoints[next] == i + 1) {
      curve.points.push_back({i + 1, seen.size()});
      ++next;
    }
  }
  return curve;
}

std::vector<std::uint64_t> log_checkpoints(std::uint64_t n, int per_decade) {
  if (per_decade < 1) throw ConfigError("checkpoints per decade must be >= 1");
  std::vector<std::uint64_t> out;
  for (int k = 0;; ++k) {
    const double v = std::round(std::pow(10.0, static_cast<double>(k) / per_decade));
    if (v >= static_cast<double>(n)) break;
    const auto c = static_cast<std::uint64_t>(v);
    if (out.empty() || c > out.back()) out.push_back(c);
  }
  if (n > 0) out.push_back(n);
  return out;
}

double ochiai(const WordSet& a, const WordSet& b) {
  if (a.empty() || b.empty()) throw DataError("Ochiai coefficient needs two non-empty sets");
  const WordSet& small = a.size() <= b.size() ? a : b;
  const WordSet& large = a.size() <= b.size() ? b : a;
  std::size_t shared = 0;
  for (const auto& w : small) shared += large.count(w);
  return static_cast<double>(shared) /
         std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

SegmentWords segment_words(const RankFrequencyCurve& curve, const SegmentBounds& bounds) {
  validate_bounds(bounds, curve.vocabulary());
  SegmentWords out;
  for (const auto& p : curve.points) {
    if (p.rank <= bounds.upper_end)
      out.upper.insert(p.word);
    else if (p.rank <= bounds.middle_end)
      out.middle.insert(p.word);
    else
      out.lower.insert(p.word);
  }
  return out;
}

void write_table_csv(std::ostream& out, const FrequencyTable& table) {
  out << "word,count\n";
  if (table.empty()) return;
  for (const auto& p : rank(table).points) out << p.word << ',' << p.frequency << '\n';
}

void write_curve_csv(std::ostream& out, const RankFrequencyCurve& curve) {
  out << "rank,frequency,word\n";
  for (const auto& p : curve.points) out << p.rank << ',' << p.frequency << ',' << p.word << '\n';
}

void write_spectrum_csv(std::ostream& out, const FrequencySpectrum& spectrum) {
  out << "frequency,type_count\n";
  for (const auto& p : spectrum.points) out << p.frequency << ',' << p.type_count << '\n';
}

void write_heaps_csv(std::ostream& out, const HeapsCurve& curve) {
  out << "tokens,types\n";
  for (const auto& p : curve.points) out << p.tokens_seen << ',' << p.types_seen << '\n';
}

FrequencyTable read_table_csv(std::istream& in) {
  FrequencyTable::Map counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line == "word,count")) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos || comma == 0)
      throw DataError("malformed frequency table line " + std::to_string(line_no));
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(line.substr(comma + 1), &used);
      if (used != line.size() - comma - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DataError("bad count on frequency table line " + std::to_string(line_no));
    }
    if (n == 0) continue;
    counts[line.substr(0, comma)] += n;
  }
  return FrequencyTable(std::move(counts));
}

}  // namespace zipfkit::freq

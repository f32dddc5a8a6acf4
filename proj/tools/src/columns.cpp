#include "columns.hpp"

#include <charconv>
#include <sstream>

#include "zipfkit/error.hpp"
#include "zipfkit/io.hpp"

namespace zipfkit::cli {
namespace {

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<double> number(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<double> read_numeric_column(const std::filesystem::path& path,
                                        const std::optional<std::string>& column) {
  std::istringstream in(io::read_file(path));
  std::string line;
  std::vector<std::string> header;
  std::optional<std::size_t> index;
  std::size_t width = 0;
  std::vector<double> values;
  int number_of_line = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number_of_line;
    if (line.empty() || line[0] == '#') continue;
    auto row = fields(line);
    if (row.empty()) continue;
    if (first) {
      first = false;
      bool numeric = true;
      for (const auto& f : row) numeric = numeric && number(f).has_value();
      width = row.size();
      if (column) {
        if (!numeric) {
          for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] == *column) index = i;
        }
        if (!index) {
          const auto as_index = number(*column);
          if (as_index && *as_index >= 0 && *as_index == static_cast<double>(static_cast<std::size_t>(*as_index)))
            index = static_cast<std::size_t>(*as_index);
        }
        if (!index || *index >= width)
          throw DataError(path.string() + ": no column '" + *column + "'");
      } else if (width == 1) {
        index = 0;
      }
      if (!numeric) {
        header = std::move(row);
        continue;
      }
    }
    if (!index) {
      // No column chosen: a headerless list, possibly ragged; take every value.
      if (!header.empty())
        throw DataError(path.string() + " has several columns; choose one with --column");
      for (const auto& f : row) {
        const auto v = number(f);
        if (!v)
          throw DataError(path.string() + ": line " + std::to_string(number_of_line) + ": '" + f +
                          "' is not a number");
        values.push_back(*v);
      }
      continue;
    }
    if (row.size() != width)
      throw DataError(path.string() + ": line " + std::to_string(number_of_line) + " has " +
                      std::to_string(row.size()) + " fields, expected " + std::to_string(width));
    const auto v = number(row[*index]);
    if (!v)
      throw DataError(path.string() + ": line " + std::to_string(number_of_line) + ": '" + row[*index] +
                      "' is not a number");
    values.push_back(*v);
  }
  if (values.empty()) throw DataError(path.string() + " contains no numbers");
  return values;
}

}  // namespace zipfkit::cli

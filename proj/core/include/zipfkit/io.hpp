#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

namespace zipfkit::io {

/// Writes through a temporary sibling file and renames it into place, so
/// readers never observe a partially written file.
void write_atomic(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

/// Reads a whole file. Throws DataError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Formats a double with the shortest representation that round-trips.
std::string format_double(double v);

}  // namespace zipfkit::io

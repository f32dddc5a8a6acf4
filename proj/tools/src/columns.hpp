#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace zipfkit::cli {

// Numbers from a whitespace- or comma-separated file. Lines starting with
// '#' are skipped, and so is a first line that is not numeric (a header).
// Multi-column files need `column`: a header name or a 0-based index.
std::vector<double> read_numeric_column(const std::filesystem::path& path,
                                        const std::optional<std::string>& column = std::nullopt);

}  // namespace zipfkit::cli

#pragma once

#include <iosfwd>
#include <string>

#include "defk/configuration.hpp"

namespace defk {

// Plain-text ingestion: one configuration line per text line as whitespace
// separated point indices, '#' starts a comment, blank lines are skipped.
// The point count is the largest index + 1. Malformed tokens raise
// Error(Fault::parse_error) naming the source and line number.
Configuration read_text(std::istream& in, const std::string& source);

// JSON ingestion of {"points": <count>, "lines": [[indices]]}.
Configuration read_json(std::istream& in, const std::string& source);

// Reads either format, deciding by the first non-space byte ('{' means JSON).
// Throws Error(Fault::file_not_found) when the file cannot be opened.
Configuration read_configuration_file(const std::string& path);

// Exact inverses of the readers: exporting and re-reading yields an equal
// configuration.
std::string to_text(const Configuration& config);
std::string to_json_text(const Configuration& config);

}  // namespace defk

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace l2r2::csv {

// Shortest decimal that parses back to the exact same double.
std::string format_double(double v);

// Strict parses: the whole field must be consumed.
double parse_double(std::string_view field, const std::string& context);
long parse_long(std::string_view field, const std::string& context);

std::vector<std::string> split(std::string_view line);
std::string join(const std::vector<std::string>& fields);

// Reads a whole file as lines, normalizing CRLF. Throws on missing file.
std::vector<std::string> read_lines(const std::string& path);

void write_file(const std::string& path, const std::string& contents);

}  // namespace l2r2::csv

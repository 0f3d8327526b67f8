#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace impnoise::kv {

/// Ordered `key = value` pairs; '#' starts a comment line.
using Records = std::vector<std::pair<std::string, std::string>>;

Records parse(std::istream& in);
Records parse_file(const std::string& path);
void write(std::ostream& out, const Records& records);
void write_file(const std::string& path, const Records& records);

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double value);
double parse_double(const std::string& text); // throws on garbage
long parse_long(const std::string& text);

} // namespace impnoise::kv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qspin::text {

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

// Whole-token numeric/bool parsers; the key name is used in error messages.
double parse_double(const std::string& key, const std::string& v);
long parse_long(const std::string& key, const std::string& v);
std::uint64_t parse_u64(const std::string& key, const std::string& v);
bool parse_bool(const std::string& key, const std::string& v);

// Shortest representation that re-reads bit-exactly (printf %.17g).
std::string g17(double v);

}  // namespace qspin::text

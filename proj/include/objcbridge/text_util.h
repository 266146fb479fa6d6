#ifndef OBJCBRIDGE_TEXT_UTIL_H
#define OBJCBRIDGE_TEXT_UTIL_H

#include <string>
#include <vector>

namespace objcbridge {

// Replaces // and /* */ comments with spaces; newlines are preserved so
// line numbers stay valid.
std::string strip_comments(const std::string& text);

std::string trim(const std::string& s);

// Splits on sep, trimming each piece (empty pieces kept).
std::vector<std::string> split(const std::string& s, char sep);

// Comma-separated list; pieces trimmed, empties dropped.
std::vector<std::string> split_list(const std::string& s);

std::string join(const std::vector<std::string>& v, const std::string& sep);

bool starts_with(const std::string& s, const std::string& prefix);
bool ends_with(const std::string& s, const std::string& suffix);

} // namespace objcbridge

#endif

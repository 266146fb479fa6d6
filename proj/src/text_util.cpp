#include "objcbridge/text_util.h"

namespace objcbridge {

std::string strip_comments(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
    } else if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      i += 2;
      out += "  ";
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) {
        out += (text[i] == '\n') ? '\n' : ' ';
        ++i;
      }
      if (i + 1 < n) {
        out += "  ";
        i += 2;
      } else {
        i = n; // unterminated block comment: drop the tail
      }
    } else if (c == '"') {
      out += c;
      ++i;
      while (i < n && text[i] != '"' && text[i] != '\n') {
        out += text[i];
        if (text[i] == '\\' && i + 1 < n) {
          out += text[i + 1];
          ++i;
        }
        ++i;
      }
      if (i < n) {
        out += text[i];
        ++i;
      }
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto& piece : split(s, ',')) {
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace objcbridge

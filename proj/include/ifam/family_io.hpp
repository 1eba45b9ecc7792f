#pragma once

// Text format for families:
//
//   # comment (a '#' starts a comment anywhere on a line)
//   n k
//   1 2 3
//   1 2 4
//
//   2 3 4        <- a blank line starts the next family
//
// The header "n k" is the first non-comment line and applies to every family
// in the file. Each further line is one set, strictly increasing, 1-based.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifam/family.hpp"

namespace ifam {

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

struct FamilyFile {
  int n = 0;
  int k = 0;
  std::vector<SetFamily> families;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<int> parse_ints(std::string_view s, int line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    const std::string_view tok = s.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw FormatError(line, "not an integer: '" + std::string(tok) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace detail

inline FamilyFile parse_families(std::string_view text) {
  FamilyFile out;
  bool have_header = false;
  std::vector<Mask> block;
  auto flush = [&] {
    if (!block.empty()) out.families.push_back(SetFamily::from_masks(out.n, out.k, std::move(block)));
    block.clear();
  };

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;

    const auto hash = raw.find('#');
    const bool has_comment = hash != std::string_view::npos;
    const std::string_view body = detail::trim(has_comment ? raw.substr(0, hash) : raw);
    if (body.empty()) {
      if (!has_comment && have_header) flush();
      continue;
    }
    const auto ints = detail::parse_ints(body, line_no);
    if (!have_header) {
      if (ints.size() != 2) throw FormatError(line_no, "header must be 'n k'");
      if (ints[0] < 1 || ints[0] > kMaxGround || ints[1] < 1 || ints[1] > ints[0]) {
        throw FormatError(line_no, "header needs 1 <= k <= n <= " + std::to_string(kMaxGround));
      }
      out.n = ints[0];
      out.k = ints[1];
      have_header = true;
      continue;
    }
    if (static_cast<int>(ints.size()) != out.k) {
      throw FormatError(line_no, "expected " + std::to_string(out.k) + " elements, got " +
                                     std::to_string(ints.size()));
    }
    Mask m = 0;
    int prev = 0;
    for (int e : ints) {
      if (e < 1 || e > out.n) {
        throw FormatError(line_no, "element " + std::to_string(e) + " outside [1," +
                                       std::to_string(out.n) + "]");
      }
      if (e <= prev) throw FormatError(line_no, "elements must be strictly increasing");
      prev = e;
      m |= bit(e);
    }
    block.push_back(m);
  }
  if (!have_header) throw FormatError(line_no, "missing 'n k' header");
  flush();
  return out;
}

/// Exactly one family; a header with no sets is the empty family.
inline SetFamily parse_family(std::string_view text) {
  auto file = parse_families(text);
  if (file.families.size() > 1) {
    throw FormatError(0, "expected one family, found " + std::to_string(file.families.size()));
  }
  if (file.families.empty()) return SetFamily::from_masks(file.n, file.k, {});
  return std::move(file.families.front());
}

inline std::string serialize_families(int n, int k, const std::vector<SetFamily>& families) {
  std::ostringstream os;
  os << n << ' ' << k << '\n';
  bool first_family = true;
  for (const auto& f : families) {
    if (f.n() != n || f.k() != k) throw std::invalid_argument("serialize: mixed (n,k)");
    if (f.empty()) continue;
    if (!first_family) os << '\n';
    first_family = false;
    for (Mask m : f.masks()) {
      bool first = true;
      for (int e : mask_elements(m)) {
        if (!first) os << ' ';
        os << e;
        first = false;
      }
      os << '\n';
    }
  }
  return os.str();
}

inline std::string serialize_family(const SetFamily& f) {
  return serialize_families(f.n(), f.k(), {f});
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace ifam

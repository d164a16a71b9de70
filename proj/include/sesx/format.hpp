#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sesx/bms.hpp"
#include "sesx/errors.hpp"
#include "sesx/ses.hpp"
#include "sesx/text.hpp"

namespace sesx {

// Textual container:
//   SESX1
//   raw <raw_len>
//   n <n>
//   E <i> <j> <l>     (zero or more, emission order)
//   C <k> <byte>      (one or more, emission order)
struct SesFile {
  Ses sys;
  Pos raw_len = 0;

  bool operator==(const SesFile&) const = default;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  while (!s.empty()) {
    auto nl = s.find('\n');
    if (nl == std::string_view::npos)
      throw ParseError("missing trailing newline");
    lines.push_back(s.substr(0, nl));
    s.remove_prefix(nl + 1);
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    if (j == i) throw ParseError("empty field");
    out.push_back(line.substr(i, j - i));
    i = j + 1;
  }
  if (!line.empty() && line.back() == ' ') throw ParseError("trailing space");
  return out;
}

inline Pos parse_int(std::string_view f) {
  Pos v = 0;
  auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc{} || p != f.data() + f.size())
    throw ParseError("bad integer field");
  return v;
}

}  // namespace detail

inline std::string render(const SesFile& file) {
  std::string out = "SESX1\n";
  out += "raw " + std::to_string(file.raw_len) + "\n";
  out += "n " + std::to_string(file.sys.n) + "\n";
  for (const auto& e : file.sys.eq) {
    out += "E " + std::to_string(e.i) + " " + std::to_string(e.j) + " " +
           std::to_string(e.len) + "\n";
  }
  for (const auto& p : file.sys.ch) {
    out += "C " + std::to_string(p.k) + " " + std::to_string(p.c) + "\n";
  }
  return out;
}

inline SesFile parse_ses_file(std::string_view content) {
  auto lines = detail::split_lines(content);
  if (lines.size() < 4) throw ParseError("truncated file");
  if (lines[0] != "SESX1") throw ParseError("bad magic");
  auto raw_f = detail::split_fields(lines[1]);
  if (raw_f.size() != 2 || raw_f[0] != "raw") throw ParseError("bad raw line");
  auto n_f = detail::split_fields(lines[2]);
  if (n_f.size() != 2 || n_f[0] != "n") throw ParseError("bad n line");

  SesFile file;
  file.raw_len = detail::parse_int(raw_f[1]);
  file.sys.n = detail::parse_int(n_f[1]);
  if (file.sys.n != file.raw_len + 1) throw ParseError("n must equal raw_len + 1");

  bool seen_c = false;
  for (std::size_t t = 3; t < lines.size(); ++t) {
    auto f = detail::split_fields(lines[t]);
    if (f.empty()) throw ParseError("empty line");
    if (f[0] == "E") {
      if (seen_c) throw ParseError("E line after C lines");
      if (f.size() != 4) throw ParseError("bad E line");
      file.sys.eq.push_back(
          {detail::parse_int(f[1]), detail::parse_int(f[2]), detail::parse_int(f[3])});
    } else if (f[0] == "C") {
      seen_c = true;
      if (f.size() != 3) throw ParseError("bad C line");
      Pos k = detail::parse_int(f[1]);
      Pos b = detail::parse_int(f[2]);
      if (b < 0 || b > 255) throw ParseError("byte out of range");
      file.sys.ch.push_back({k, static_cast<unsigned char>(b)});
    } else {
      throw ParseError("unknown line type");
    }
  }
  if (!seen_c) throw ParseError("no C lines");
  try {
    validate(file.sys);
  } catch (const MalformedSystem& e) {
    throw ParseError(std::string("invalid system: ") + e.what());
  }
  return file;
}

// Independent re-check of a compressed file against the original bytes.
// Returns a diagnostic for the first failed check, or nothing on success.
inline std::optional<std::string> verify_against(std::string_view original,
                                                 const SesFile& file) {
  if (file.raw_len != static_cast<Pos>(original.size()))
    return "raw length mismatch";
  SolveResult r = solve(file.sys);
  if (r.kind == SolveResult::Kind::Unsat) return "system is unsatisfiable";
  if (r.kind == SolveResult::Kind::Ambiguous)
    return "system does not determine a unique string";
  std::string expected(original);
  expected.push_back(static_cast<char>(kSentinel));
  if (r.text != expected) return "reconstructed text differs from original";
  for (const auto& e : file.sys.eq) {
    std::string_view a = std::string_view(expected).substr(
        static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.len));
    std::string_view b = std::string_view(expected).substr(
        static_cast<std::size_t>(e.j - 1), static_cast<std::size_t>(e.len));
    if (a != b) return "equation is not a substring equality of the original";
  }
  return std::nullopt;
}

// BMS text format: one phrase per line, `L <byte>` or `C <src> <len>`.
inline std::string render_bms(const Bms& b) {
  std::string out;
  for (const auto& p : b.phrases) {
    if (p.literal)
      out += "L " + std::to_string(p.c) + "\n";
    else
      out += "C " + std::to_string(p.src) + " " + std::to_string(p.len) + "\n";
  }
  return out;
}

inline Bms parse_bms(std::string_view content) {
  Bms b;
  for (auto line : detail::split_lines(content)) {
    auto f = detail::split_fields(line);
    if (f.empty()) throw ParseError("empty line");
    if (f[0] == "L") {
      if (f.size() != 2) throw ParseError("bad L line");
      Pos c = detail::parse_int(f[1]);
      if (c < 0 || c > 255) throw ParseError("byte out of range");
      b.phrases.push_back({true, static_cast<unsigned char>(c), 0, 0});
      b.n += 1;
    } else if (f[0] == "C") {
      if (f.size() != 3) throw ParseError("bad C line");
      Pos src = detail::parse_int(f[1]);
      Pos len = detail::parse_int(f[2]);
      b.phrases.push_back({false, 0, src, len});
      b.n += len;
    } else {
      throw ParseError("unknown line type");
    }
  }
  return b;
}

}  // namespace sesx

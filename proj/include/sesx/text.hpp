#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sesx/errors.hpp"

namespace sesx {

inline constexpr unsigned char kSentinel = 0x00;

// Sentinel-terminated byte string. All positions are 1-based.
class Text {
 public:
  static Text attach_sentinel(std::string_view raw) {
    if (raw.find(static_cast<char>(kSentinel)) != std::string_view::npos) {
      throw SentinelCollision("input contains the sentinel byte 0x00");
    }
    std::string data(raw);
    data.push_back(static_cast<char>(kSentinel));
    return Text(std::move(data));
  }

  // n, including the sentinel.
  Pos size() const { return static_cast<Pos>(data_.size()); }
  Pos raw_len() const { return size() - 1; }

  unsigned char at(Pos i) const {
    return static_cast<unsigned char>(data_[static_cast<std::size_t>(i - 1)]);
  }

  std::string_view bytes() const { return data_; }
  std::string_view raw() const {
    return std::string_view(data_).substr(0, data_.size() - 1);
  }
  // 1-based substring w[i..j]; empty when j < i.
  std::string_view substr(Pos i, Pos j) const {
    if (j < i) return {};
    return std::string_view(data_).substr(static_cast<std::size_t>(i - 1),
                                          static_cast<std::size_t>(j - i + 1));
  }

 private:
  explicit Text(std::string data) : data_(std::move(data)) {}
  std::string data_;
};

struct Alphabet {
  std::array<bool, 256> present{};
  int sigma = 0;

  static Alphabet of(const Text& w) {
    Alphabet a;
    for (Pos i = 1; i <= w.size(); ++i) {
      unsigned char c = w.at(i);
      if (!a.present[c]) {
        a.present[c] = true;
        ++a.sigma;
      }
    }
    return a;
  }

  std::vector<unsigned char> chars() const {
    std::vector<unsigned char> out;
    for (int c = 0; c < 256; ++c)
      if (present[static_cast<std::size_t>(c)])
        out.push_back(static_cast<unsigned char>(c));
    return out;
  }
};

// mu^k("a") for mu(a)=ab, mu(b)=ba.
inline std::string thue_morse(int k) {
  if (k < 0 || k > 24) throw OutOfRange("thue_morse: k must be in [0,24]");
  std::string s = "a";
  for (int it = 0; it < k; ++it) {
    std::string next;
    next.reserve(s.size() * 2);
    for (char c : s) {
      next += (c == 'a') ? "ab" : "ba";
    }
    s = std::move(next);
  }
  return s;
}

// F_0 = "b", F_1 = "a", F_k = F_{k-1} F_{k-2}.
inline std::string fibonacci_word(int k) {
  if (k < 0 || k > 30) throw OutOfRange("fibonacci_word: k must be in [0,30]");
  if (k == 0) return "b";
  std::string prev = "b";
  std::string cur = "a";
  for (int it = 2; it <= k; ++it) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace sesx

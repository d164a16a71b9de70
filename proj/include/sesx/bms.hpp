#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sesx/errors.hpp"
#include "sesx/ses.hpp"
#include "sesx/suffix_index.hpp"
#include "sesx/text.hpp"

namespace sesx {

// Bidirectional macro scheme: a phrase partition where each phrase is an
// explicit character or a copy of another interval of the same text.
struct Bms {
  struct Phrase {
    bool literal;
    unsigned char c = 0;  // literal
    Pos src = 0, len = 0;  // copy: w[src..src+len-1]
  };
  Pos n = 0;
  std::vector<Phrase> phrases;

  Pos phrase_len(std::size_t t) const {
    return phrases[t].literal ? 1 : phrases[t].len;
  }
};

// tau over [1..n]; 0 encodes bottom (explicit positions).
inline std::vector<Pos> transition_fn(const Bms& b) {
  std::vector<Pos> tau(static_cast<std::size_t>(b.n) + 1, 0);
  Pos a = 1;
  for (std::size_t t = 0; t < b.phrases.size(); ++t) {
    const auto& p = b.phrases[t];
    if (p.literal) {
      tau[static_cast<std::size_t>(a)] = 0;
      a += 1;
    } else {
      for (Pos q = 0; q < p.len; ++q)
        tau[static_cast<std::size_t>(a + q)] = p.src + q;
      a += p.len;
    }
  }
  return tau;
}

// Structural checks plus acyclicity of the induced transition function.
inline void validate_bms(const Bms& b) {
  Pos total = 0;
  for (std::size_t t = 0; t < b.phrases.size(); ++t) {
    const auto& p = b.phrases[t];
    if (!p.literal) {
      if (p.len < 1 || p.src < 1 || p.src + p.len - 1 > b.n)
        throw InvalidScheme("copy phrase out of bounds", total + 1);
    }
    total += b.phrase_len(t);
  }
  if (total != b.n) throw InvalidScheme("phrase lengths do not sum to n", b.n);

  auto tau = transition_fn(b);
  // white 0 / grey 1 / black 2
  std::vector<unsigned char> color(static_cast<std::size_t>(b.n) + 1, 0);
  std::vector<Pos> path;
  for (Pos i = 1; i <= b.n; ++i) {
    if (color[static_cast<std::size_t>(i)] != 0) continue;
    path.clear();
    Pos cur = i;
    while (cur != 0 && color[static_cast<std::size_t>(cur)] == 0) {
      color[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      cur = tau[static_cast<std::size_t>(cur)];
    }
    if (cur != 0 && color[static_cast<std::size_t>(cur)] == 1)
      throw InvalidScheme("transition function has a cycle", cur);
    for (Pos v : path) color[static_cast<std::size_t>(v)] = 2;
  }
}

// Literal c at position a -> pin (a, c); copy (p, l) at a -> equation (a, p, l).
inline Ses bms_to_ses(const Bms& b, const Text& w) {
  if (b.n != w.size()) throw InconsistentScheme("scheme length differs from text");
  validate_bms(b);
  Ses sys;
  sys.n = b.n;
  Pos a = 1;
  for (std::size_t t = 0; t < b.phrases.size(); ++t) {
    const auto& p = b.phrases[t];
    if (p.literal) {
      if (w.at(a) != p.c) throw InconsistentScheme("literal phrase disagrees with text");
      sys.ch.push_back({a, p.c});
      a += 1;
    } else {
      if (w.substr(a, a + p.len - 1) != w.substr(p.src, p.src + p.len - 1))
        throw InconsistentScheme("copy phrase disagrees with text");
      sys.eq.push_back({a, p.src, p.len});
      a += p.len;
    }
  }
  return sys;
}

// Greedy longest-previous-factor parse; every pointer goes strictly left, so
// the scheme is trivially valid.
inline Bms greedy_left_bms(const Text& w) {
  SuffixIndex idx(w);
  auto lpf = longest_previous_factor(idx);
  Bms b;
  b.n = w.size();
  std::int32_t i = 0;
  const std::int32_t n = idx.n();
  while (i < n) {
    auto [len, src] = lpf[static_cast<std::size_t>(i)];
    if (len >= 1) {
      b.phrases.push_back({false, 0, static_cast<Pos>(src) + 1, len});
      i += len;
    } else {
      b.phrases.push_back({true, w.at(i + 1), 0, 0});
      i += 1;
    }
  }
  return b;
}

}  // namespace sesx

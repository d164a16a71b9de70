#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sesx/errors.hpp"
#include "sesx/ses.hpp"
#include "sesx/text.hpp"

// Brute-force reference implementations, quadratic or worse, size-capped.
namespace sesx::oracle {

// Substrings of a fixed text, deduplicated by content; the representative of
// each string is its leftmost occurrence.
struct StringSet {
  std::vector<std::pair<Pos, Pos>> items;  // (start, length), 1-based

  std::vector<std::string> strings(const Text& w) const {
    std::vector<std::string> out;
    out.reserve(items.size());
    for (auto [s, l] : items) out.emplace_back(w.substr(s, s + l - 1));
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline Pos naive_lcp(const Text& w, Pos i, Pos j) {
  Pos n = w.size();
  Pos l = 0;
  while (i + l <= n && j + l <= n && w.at(i + l) == w.at(j + l)) ++l;
  return l;
}

}  // namespace detail

// { xc : xc occurs in w and xc' occurs for some c' != c }. Every occurrence
// of a right extension xc shows up as a candidate: pairing it with any
// occurrence of xc' gives a mismatch exactly at |x|.
inline StringSet naive_right_extensions(const Text& w) {
  const Pos n = w.size();
  if (n > 2000) throw TooLarge("naive_right_extensions: n > 2000");
  std::vector<std::pair<Pos, Pos>> cand;
  for (Pos i = 1; i <= n; ++i) {
    for (Pos j = i + 1; j <= n; ++j) {
      Pos l = detail::naive_lcp(w, i, j);
      // Distinct suffixes of a sentinel-terminated text always mismatch
      // in-bounds.
      cand.emplace_back(i, l + 1);
      cand.emplace_back(j, l + 1);
    }
  }
  auto content = [&](const std::pair<Pos, Pos>& p) {
    return w.substr(p.first, p.first + p.second - 1);
  };
  std::sort(cand.begin(), cand.end(),
            [&](const auto& a, const auto& b) {
              auto sa = content(a), sb = content(b);
              if (sa != sb) return sa < sb;
              return a.first < b.first;
            });
  StringSet out;
  for (std::size_t t = 0; t < cand.size(); ++t) {
    if (t == 0 || content(cand[t]) != content(cand[t - 1]))
      out.items.push_back(cand[t]);
  }
  return out;
}

// Members of RE(w) that are not proper suffixes of other members.
inline StringSet naive_sre(const Text& w) {
  StringSet re = naive_right_extensions(w);
  StringSet out;
  for (const auto& a : re.items) {
    std::string_view sa = w.substr(a.first, a.first + a.second - 1);
    bool proper_suffix = false;
    for (const auto& b : re.items) {
      if (b.second <= a.second) continue;
      std::string_view sb = w.substr(b.first, b.first + b.second - 1);
      if (sb.substr(static_cast<std::size_t>(b.second - a.second)) == sa) {
        proper_suffix = true;
        break;
      }
    }
    if (!proper_suffix) out.items.push_back(a);
  }
  return out;
}

inline bool verify_suffixient(const Text& w, const std::vector<Pos>& S) {
  const Pos n = w.size();
  if (n > 2000) throw TooLarge("verify_suffixient: n > 2000");
  for (Pos j : S) {
    if (j < 1 || j > n) throw PositionOutOfBounds("suffixient position out of bounds");
  }
  StringSet re = naive_right_extensions(w);
  for (auto [s, l] : re.items) {
    std::string_view x = w.substr(s, s + l - 1);
    bool covered = false;
    for (Pos j : S) {
      if (j >= l && w.substr(j - l + 1, j) == x) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// End positions of the leftmost occurrences of the super-maximal right
// extensions.
inline std::vector<Pos> naive_smallest_suffixient(const Text& w) {
  StringSet sre = naive_sre(w);
  std::vector<Pos> out;
  out.reserve(sre.items.size());
  for (auto [s, l] : sre.items) out.push_back(s + l - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Expands equations into pairwise position identities, closes them by BFS,
// then applies the pin rules componentwise.
inline SolveResult naive_ses_solve(const Ses& sys, int alphabet_size = 256) {
  if (sys.n > 500) throw TooLarge("naive_ses_solve: n > 500");
  if (static_cast<Pos>(sys.eq.size()) > 500)
    throw TooLarge("naive_ses_solve: |Eq| > 500");
  validate(sys);
  const Pos n = sys.n;

  std::vector<std::vector<Pos>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : sys.eq) {
    for (Pos k = 0; k < e.len; ++k) {
      adj[static_cast<std::size_t>(e.i + k)].push_back(e.j + k);
      adj[static_cast<std::size_t>(e.j + k)].push_back(e.i + k);
    }
  }
  std::vector<Pos> label(static_cast<std::size_t>(n) + 1, 0);
  for (Pos i = 1; i <= n; ++i) {
    if (label[static_cast<std::size_t>(i)] != 0) continue;
    std::queue<Pos> q;
    q.push(i);
    label[static_cast<std::size_t>(i)] = i;
    while (!q.empty()) {
      Pos u = q.front();
      q.pop();
      for (Pos v : adj[static_cast<std::size_t>(u)]) {
        if (label[static_cast<std::size_t>(v)] == 0) {
          label[static_cast<std::size_t>(v)] = i;
          q.push(v);
        }
      }
    }
  }

  SolveResult res;
  res.classes.resize(static_cast<std::size_t>(n));
  for (Pos i = 1; i <= n; ++i)
    res.classes[static_cast<std::size_t>(i - 1)] = label[static_cast<std::size_t>(i)];

  std::vector<Ses::Pin> pins(sys.ch);
  std::sort(pins.begin(), pins.end(), [](const Ses::Pin& a, const Ses::Pin& b) {
    return a.k != b.k ? a.k < b.k : a.c < b.c;
  });
  std::map<Pos, std::pair<Pos, int>> cls_pin;  // label -> (pos, char)
  std::pair<Pos, Pos> best_conflict{0, 0};
  for (const auto& p : pins) {
    Pos lab = label[static_cast<std::size_t>(p.k)];
    auto it = cls_pin.find(lab);
    if (it == cls_pin.end()) {
      cls_pin[lab] = {p.k, p.c};
    } else if (it->second.second != p.c) {
      std::pair<Pos, Pos> cand{it->second.first, p.k};
      if (best_conflict.first == 0 || cand < best_conflict) best_conflict = cand;
    }
  }
  if (best_conflict.first != 0) {
    res.kind = SolveResult::Kind::Unsat;
    res.conflict = best_conflict;
    return res;
  }
  if (alphabet_size >= 2) {
    for (Pos i = 1; i <= n; ++i) {
      if (!cls_pin.count(label[static_cast<std::size_t>(i)])) {
        res.kind = SolveResult::Kind::Ambiguous;
        res.free_pos = i;
        return res;
      }
    }
  }
  res.kind = SolveResult::Kind::Unique;
  res.text.resize(static_cast<std::size_t>(n));
  for (Pos i = 1; i <= n; ++i) {
    auto it = cls_pin.find(label[static_cast<std::size_t>(i)]);
    res.text[static_cast<std::size_t>(i - 1)] =
        static_cast<char>(it == cls_pin.end() ? 0 : it->second.second);
  }
  return res;
}

// True iff every distinct substring of w has an occurrence crossing G.
inline bool naive_attractor_check(const Text& w, const std::vector<Pos>& G) {
  const Pos n = w.size();
  if (n > 500) throw TooLarge("naive_attractor_check: n > 500");
  for (Pos g : G) {
    if (g < 1 || g > n) throw PositionOutOfBounds("attractor position out of bounds");
  }
  std::vector<bool> marked(static_cast<std::size_t>(n) + 2, false);
  for (Pos g : G) marked[static_cast<std::size_t>(g)] = true;
  std::vector<Pos> pref(static_cast<std::size_t>(n) + 1, 0);
  for (Pos i = 1; i <= n; ++i)
    pref[static_cast<std::size_t>(i)] =
        pref[static_cast<std::size_t>(i - 1)] + (marked[static_cast<std::size_t>(i)] ? 1 : 0);
  auto crosses = [&](Pos a, Pos b) {
    return pref[static_cast<std::size_t>(b)] - pref[static_cast<std::size_t>(a - 1)] > 0;
  };

  // lcp_tab[i][j] = lcp of suffixes i and j (1-based).
  std::vector<std::vector<Pos>> lcp_tab(
      static_cast<std::size_t>(n) + 2,
      std::vector<Pos>(static_cast<std::size_t>(n) + 2, 0));
  for (Pos i = n; i >= 1; --i) {
    for (Pos j = n; j >= 1; --j) {
      if (w.at(i) == w.at(j))
        lcp_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            lcp_tab[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] + 1;
    }
  }
  std::vector<Pos> maxprev(static_cast<std::size_t>(n) + 1, 0);
  for (Pos i = 1; i <= n; ++i)
    for (Pos j = 1; j < i; ++j)
      maxprev[static_cast<std::size_t>(i)] =
          std::max(maxprev[static_cast<std::size_t>(i)],
                   lcp_tab[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);

  for (Pos i = 1; i <= n; ++i) {
    for (Pos len = maxprev[static_cast<std::size_t>(i)] + 1; len <= n - i + 1; ++len) {
      bool ok = false;
      for (Pos j = 1; j <= n - len + 1 && !ok; ++j) {
        if (lcp_tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >= len ||
            j == i) {
          if (crosses(j, j + len - 1)) ok = true;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace sesx::oracle

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sesx/errors.hpp"
#include "sesx/text.hpp"

namespace sesx {

// Substring equation system (n, Eq, Ch).
struct Ses {
  struct Eq {
    Pos i, j, len;
    bool operator==(const Eq&) const = default;
  };
  struct Pin {
    Pos k;
    unsigned char c;
    bool operator==(const Pin&) const = default;
  };

  Pos n = 0;
  std::vector<Eq> eq;
  std::vector<Pin> ch;

  bool operator==(const Ses&) const = default;
};

struct SolveResult {
  enum class Kind { Unsat, Ambiguous, Unique };
  Kind kind;
  std::string text;              // Unique: satisfying string of length n
  std::pair<Pos, Pos> conflict;  // Unsat: two pinned positions in one class
  Pos free_pos = 0;              // Ambiguous: a position in an unpinned class
  std::vector<Pos> classes;      // label per position = min position of class
};

inline void validate(const Ses& sys) {
  if (sys.n < 1) throw MalformedSystem("n must be >= 1");
  for (const auto& e : sys.eq) {
    if (e.i < 1 || e.i > sys.n || e.j < 1 || e.j > sys.n)
      throw MalformedSystem("equation position out of bounds");
    if (e.len < 1 || e.len > sys.n - std::max(e.i, e.j) + 1)
      throw MalformedSystem("equation length out of bounds");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(sys.ch.size() * 2);
  for (const auto& p : sys.ch) {
    if (p.k < 1 || p.k > sys.n) throw MalformedSystem("pin position out of bounds");
    std::uint64_t key = static_cast<std::uint64_t>(p.k) * 256u + p.c;
    if (!seen.insert(key).second) throw MalformedSystem("duplicate pin");
  }
}

inline Pos size(const Ses& sys) {
  return static_cast<Pos>(sys.eq.size() + sys.ch.size());
}

inline Pos weighted_size(const Ses& sys) {
  return static_cast<Pos>(8 * sys.eq.size() + sys.ch.size());
}

namespace detail {

inline int floor_log2(Pos v) {
  int k = 0;
  while ((Pos{1} << (k + 1)) <= v) ++k;
  return k;
}

inline std::int32_t dsu_find(std::vector<std::int32_t>& parent, std::int32_t x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Shared pin/uniqueness analysis over a class-label array. The alphabet is
// the byte range [0, alphabet_size); an unpinned class is ambiguous whenever
// alphabet_size >= 2, otherwise it takes the single symbol 0x00.
inline SolveResult finish_from_classes(const Ses& sys, int alphabet_size,
                                       std::vector<Pos> classes) {
  const Pos n = sys.n;
  SolveResult res;
  res.classes = std::move(classes);

  std::vector<Ses::Pin> pins(sys.ch);
  std::sort(pins.begin(), pins.end(), [](const Ses::Pin& a, const Ses::Pin& b) {
    return a.k != b.k ? a.k < b.k : a.c < b.c;
  });

  // Per class: first pin (by position, then byte) and first pin disagreeing
  // with it. Class labels are min positions, so index by label.
  std::vector<Pos> first_pin(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> first_char(static_cast<std::size_t>(n) + 1, -1);
  std::pair<Pos, Pos> best_conflict{0, 0};
  for (const auto& p : pins) {
    Pos label = res.classes[static_cast<std::size_t>(p.k - 1)];
    auto li = static_cast<std::size_t>(label);
    if (first_char[li] < 0) {
      first_char[li] = p.c;
      first_pin[li] = p.k;
    } else if (first_char[li] != p.c) {
      std::pair<Pos, Pos> cand{first_pin[li], p.k};
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
      Pos label = res.classes[static_cast<std::size_t>(i - 1)];
      if (first_char[static_cast<std::size_t>(label)] < 0) {
        res.kind = SolveResult::Kind::Ambiguous;
        res.free_pos = i;
        return res;
      }
    }
  }

  res.kind = SolveResult::Kind::Unique;
  res.text.resize(static_cast<std::size_t>(n));
  for (Pos i = 1; i <= n; ++i) {
    Pos label = res.classes[static_cast<std::size_t>(i - 1)];
    int c = first_char[static_cast<std::size_t>(label)];
    res.text[static_cast<std::size_t>(i - 1)] =
        static_cast<char>(c < 0 ? 0 : c);
  }
  return res;
}

}  // namespace detail

// Equivalence closure of the position identities implied by Eq, then pin
// consistency/coverage. Equations are decomposed into power-of-two aligned
// pieces with one union-find per level; a fresh merge at level k >= 1 pushes
// its two half-length merges down to level k-1.
inline SolveResult solve(const Ses& sys, int alphabet_size = 256) {
  validate(sys);
  const Pos n = sys.n;

  int levels = 0;
  for (const auto& e : sys.eq)
    levels = std::max(levels, detail::floor_log2(e.len));

  std::vector<std::vector<std::int32_t>> parent(
      static_cast<std::size_t>(levels) + 1);
  for (auto& p : parent) {
    p.resize(static_cast<std::size_t>(n) + 1);
    for (std::int32_t i = 0; i <= static_cast<std::int32_t>(n); ++i) p[static_cast<std::size_t>(i)] = i;
  }

  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> pending(
      static_cast<std::size_t>(levels) + 1);
  for (const auto& e : sys.eq) {
    int k = detail::floor_log2(e.len);
    Pos block = Pos{1} << k;
    pending[static_cast<std::size_t>(k)].emplace_back(
        static_cast<std::int32_t>(e.i), static_cast<std::int32_t>(e.j));
    pending[static_cast<std::size_t>(k)].emplace_back(
        static_cast<std::int32_t>(e.i + e.len - block),
        static_cast<std::int32_t>(e.j + e.len - block));
  }

  for (int k = levels; k >= 1; --k) {
    auto& pk = parent[static_cast<std::size_t>(k)];
    std::int32_t half = std::int32_t{1} << (k - 1);
    for (auto [i, j] : pending[static_cast<std::size_t>(k)]) {
      std::int32_t ri = detail::dsu_find(pk, i);
      std::int32_t rj = detail::dsu_find(pk, j);
      if (ri == rj) continue;
      pk[static_cast<std::size_t>(ri)] = rj;
      pending[static_cast<std::size_t>(k - 1)].emplace_back(i, j);
      pending[static_cast<std::size_t>(k - 1)].emplace_back(i + half, j + half);
    }
  }
  auto& p0 = parent[0];
  for (auto [i, j] : pending[0]) {
    std::int32_t ri = detail::dsu_find(p0, i);
    std::int32_t rj = detail::dsu_find(p0, j);
    if (ri != rj) p0[static_cast<std::size_t>(ri)] = rj;
  }

  std::vector<Pos> classes(static_cast<std::size_t>(n));
  std::vector<Pos> label(static_cast<std::size_t>(n) + 1, 0);
  for (Pos i = 1; i <= n; ++i) {
    std::int32_t r = detail::dsu_find(p0, static_cast<std::int32_t>(i));
    if (label[static_cast<std::size_t>(r)] == 0) label[static_cast<std::size_t>(r)] = i;
    classes[static_cast<std::size_t>(i - 1)] = label[static_cast<std::size_t>(r)];
  }
  return detail::finish_from_classes(sys, alphabet_size, std::move(classes));
}

// Pin positions plus the four endpoints of each equation (Unique systems only).
inline std::vector<Pos> attractor_from_ses(const Ses& sys) {
  SolveResult r = solve(sys);
  if (r.kind != SolveResult::Kind::Unique)
    throw NotRepresenting("attractor_from_ses requires a representing system");
  std::vector<Pos> out;
  out.reserve(sys.ch.size() + 4 * sys.eq.size());
  for (const auto& p : sys.ch) out.push_back(p.k);
  for (const auto& e : sys.eq) {
    out.push_back(e.i);
    out.push_back(e.i + e.len - 1);
    out.push_back(e.j);
    out.push_back(e.j + e.len - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string reconstruct(const Ses& sys, int alphabet_size = 256) {
  SolveResult r = solve(sys, alphabet_size);
  if (r.kind != SolveResult::Kind::Unique)
    throw NotRepresenting(r.kind == SolveResult::Kind::Unsat
                              ? "system is unsatisfiable"
                              : "system has multiple solutions");
  return r.text;
}

}  // namespace sesx

#pragma once

#include <algorithm>
#include <bitset>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sesx/errors.hpp"
#include "sesx/text.hpp"

namespace sesx {

// One super-maximal right extension xc, located by its leftmost occurrence.
struct SreRecord {
  Pos ext_pos;             // position of the final character c (1-based)
  Pos x_len;               // |x|
  unsigned char ext_char;  // c
  Pos anchor_pos;          // ext_pos - 1

  bool operator==(const SreRecord&) const = default;
};

// Suffix array + LCP of the text with an lcp-interval overlay standing in
// for the internal suffix-tree nodes.
class SuffixIndex {
 public:
  // Maximal lcp interval [lb..rb] of depth `depth`. `bounds` are the SA
  // boundaries t inside the interval with lcp[t] == depth; they split the
  // interval into the >= 2 child sub-intervals.
  struct Node {
    std::int32_t depth;
    std::int32_t lb, rb;
    std::vector<std::int32_t> bounds;
  };

  explicit SuffixIndex(const Text& w) : n_(static_cast<std::int32_t>(w.size())) {
    build_sa(w);
    build_lcp(w);
    build_nodes();
  }

  std::int32_t n() const { return n_; }
  // 0-based suffix starts in lexicographic order.
  const std::vector<std::int32_t>& sa() const { return sa_; }
  const std::vector<std::int32_t>& rank() const { return rank_; }
  // lcp_[i] = lcp(sa_[i-1], sa_[i]); lcp_[0] = 0.
  const std::vector<std::int32_t>& lcp() const { return lcp_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  // min of sa_ over SA range [l..r]
  std::int32_t min_start(std::int32_t l, std::int32_t r) const {
    int k = msb_[static_cast<std::size_t>(r - l + 1)];
    return std::min(sa_min_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)],
                    sa_min_[static_cast<std::size_t>(k)]
                           [static_cast<std::size_t>(r - (1 << k) + 1)]);
  }

 private:
  void build_sa(const Text& w) {
    const std::int32_t n = n_;
    sa_.resize(static_cast<std::size_t>(n));
    rank_.resize(static_cast<std::size_t>(n));
    std::vector<std::int32_t> tmp(static_cast<std::size_t>(n));
    std::vector<std::int32_t> cnt(static_cast<std::size_t>(std::max<std::int32_t>(n, 256)) + 1, 0);

    for (std::int32_t i = 0; i < n; ++i) rank_[static_cast<std::size_t>(i)] = w.at(i + 1);
    std::iota(sa_.begin(), sa_.end(), 0);
    std::sort(sa_.begin(), sa_.end(), [&](std::int32_t a, std::int32_t b) {
      return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
    });
    {
      std::int32_t r = 0;
      tmp[static_cast<std::size_t>(sa_[0])] = 0;
      for (std::int32_t i = 1; i < n; ++i) {
        if (rank_[static_cast<std::size_t>(sa_[i])] != rank_[static_cast<std::size_t>(sa_[i - 1])]) ++r;
        tmp[static_cast<std::size_t>(sa_[i])] = r;
      }
      rank_.swap(tmp);
    }

    std::vector<std::int32_t> sa2(static_cast<std::size_t>(n));
    for (std::int32_t len = 1; rank_[static_cast<std::size_t>(sa_[static_cast<std::size_t>(n - 1)])] != n - 1;
         len <<= 1) {
      // sa2: suffixes sorted by second key (rank at i+len)
      std::int32_t p = 0;
      for (std::int32_t i = n - len; i < n; ++i) sa2[static_cast<std::size_t>(p++)] = i;
      for (std::int32_t i = 0; i < n; ++i)
        if (sa_[static_cast<std::size_t>(i)] >= len) sa2[static_cast<std::size_t>(p++)] = sa_[static_cast<std::size_t>(i)] - len;
      // stable counting sort by first key
      std::fill(cnt.begin(), cnt.begin() + n + 1, 0);
      for (std::int32_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(rank_[static_cast<std::size_t>(i)]) + 1];
      for (std::int32_t i = 1; i <= n; ++i) cnt[static_cast<std::size_t>(i)] += cnt[static_cast<std::size_t>(i - 1)];
      for (std::int32_t i = 0; i < n; ++i)
        sa_[static_cast<std::size_t>(cnt[static_cast<std::size_t>(rank_[static_cast<std::size_t>(sa2[static_cast<std::size_t>(i)])])]++)] =
            sa2[static_cast<std::size_t>(i)];
      // rerank
      auto key2 = [&](std::int32_t i) {
        return i + len < n ? rank_[static_cast<std::size_t>(i + len)] : -1;
      };
      std::int32_t r = 0;
      tmp[static_cast<std::size_t>(sa_[0])] = 0;
      for (std::int32_t i = 1; i < n; ++i) {
        std::int32_t a = sa_[static_cast<std::size_t>(i)], b = sa_[static_cast<std::size_t>(i - 1)];
        if (rank_[static_cast<std::size_t>(a)] != rank_[static_cast<std::size_t>(b)] || key2(a) != key2(b)) ++r;
        tmp[static_cast<std::size_t>(a)] = r;
      }
      rank_.swap(tmp);
    }
  }

  // Kasai
  void build_lcp(const Text& w) {
    const std::int32_t n = n_;
    lcp_.assign(static_cast<std::size_t>(n), 0);
    std::int32_t h = 0;
    for (std::int32_t i = 0; i < n; ++i) {
      std::int32_t r = rank_[static_cast<std::size_t>(i)];
      if (r == 0) {
        h = 0;
        continue;
      }
      std::int32_t j = sa_[static_cast<std::size_t>(r - 1)];
      if (h > 0) --h;
      while (i + h < n && j + h < n && w.at(i + h + 1) == w.at(j + h + 1)) ++h;
      lcp_[static_cast<std::size_t>(r)] = h;
    }
  }

  void build_nodes() {
    const std::int32_t n = n_;
    struct Open {
      std::int32_t d, lb;
      std::vector<std::int32_t> bounds;
    };
    std::vector<Open> st;
    st.push_back({0, 0, {}});
    for (std::int32_t i = 1; i < n; ++i) {
      std::int32_t h = lcp_[static_cast<std::size_t>(i)];
      std::int32_t lb = i - 1;
      while (h < st.back().d) {
        Open top = std::move(st.back());
        st.pop_back();
        lb = top.lb;
        nodes_.push_back({top.d, top.lb, i - 1, std::move(top.bounds)});
      }
      if (h > st.back().d) {
        st.push_back({h, lb, {i}});
      } else {
        st.back().bounds.push_back(i);
      }
    }
    while (!st.empty()) {
      Open top = std::move(st.back());
      st.pop_back();
      if (!top.bounds.empty())
        nodes_.push_back({top.d, top.lb, n - 1, std::move(top.bounds)});
    }

    // sparse table of min suffix starts
    int logn = 1;
    while ((1 << logn) < n) ++logn;
    msb_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t i = 2; i <= n; ++i)
      msb_[static_cast<std::size_t>(i)] = msb_[static_cast<std::size_t>(i / 2)] + 1;
    sa_min_.assign(static_cast<std::size_t>(logn) + 1,
                   std::vector<std::int32_t>(static_cast<std::size_t>(n)));
    sa_min_[0] = sa_;
    for (int k = 1; (1 << k) <= n; ++k) {
      for (std::int32_t i = 0; i + (1 << k) <= n; ++i) {
        sa_min_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
            std::min(sa_min_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)],
                     sa_min_[static_cast<std::size_t>(k - 1)]
                            [static_cast<std::size_t>(i + (1 << (k - 1)))]);
      }
    }
  }

  std::int32_t n_;
  std::vector<std::int32_t> sa_, rank_, lcp_;
  std::vector<Node> nodes_;
  std::vector<int> msb_;
  std::vector<std::vector<std::int32_t>> sa_min_;
};

inline SuffixIndex build_index(const Text& w) { return SuffixIndex(w); }

namespace detail {

// Child sub-intervals of a node, split at its bounds.
template <typename F>
void for_each_child(const SuffixIndex::Node& v, F&& f) {
  std::int32_t a = v.lb;
  for (std::int32_t b : v.bounds) {
    f(a, b - 1);
    a = b;
  }
  f(a, v.rb);
}

}  // namespace detail

// Candidates are path(v)*c for a branching node v and branching child
// character c; such a candidate is super-maximal iff no node whose path has
// path(v) as a proper suffix also branches on c. Branching characters are
// aggregated up the suffix-link tree as 256-bit sets.
inline std::vector<SreRecord> compute_sre(const SuffixIndex& idx, const Text& w) {
  const auto& nodes = idx.nodes();
  const auto& sa = idx.sa();
  const auto& rank = idx.rank();
  const std::size_t m = nodes.size();

  std::vector<std::bitset<256>> branch(m), below(m);
  for (std::size_t v = 0; v < m; ++v) {
    detail::for_each_child(nodes[v], [&](std::int32_t a, std::int32_t) {
      branch[v].set(w.at(sa[static_cast<std::size_t>(a)] + nodes[v].depth + 1));
    });
  }

  // node lookup by (depth, containing SA position); same-depth intervals are
  // disjoint
  std::vector<std::int32_t> by_depth(m);
  std::iota(by_depth.begin(), by_depth.end(), 0);
  std::sort(by_depth.begin(), by_depth.end(), [&](std::int32_t a, std::int32_t b) {
    if (nodes[static_cast<std::size_t>(a)].depth != nodes[static_cast<std::size_t>(b)].depth)
      return nodes[static_cast<std::size_t>(a)].depth < nodes[static_cast<std::size_t>(b)].depth;
    return nodes[static_cast<std::size_t>(a)].lb < nodes[static_cast<std::size_t>(b)].lb;
  });
  auto find_node = [&](std::int32_t depth, std::int32_t pos) -> std::int32_t {
    auto it = std::upper_bound(
        by_depth.begin(), by_depth.end(), std::make_pair(depth, pos),
        [&](const std::pair<std::int32_t, std::int32_t>& key, std::int32_t id) {
          const auto& nd = nodes[static_cast<std::size_t>(id)];
          if (key.first != nd.depth) return key.first < nd.depth;
          return key.second < nd.lb;
        });
    assert(it != by_depth.begin());
    std::int32_t id = *(it - 1);
    const auto& nd = nodes[static_cast<std::size_t>(id)];
    assert(nd.depth == depth && nd.lb <= pos && pos <= nd.rb);
    (void)nd;
    return id;
  };

  // deepest first, pushing branch sets across suffix links
  for (auto it = by_depth.rbegin(); it != by_depth.rend(); ++it) {
    std::size_t v = static_cast<std::size_t>(*it);
    if (nodes[v].depth == 0) continue;
    std::int32_t p = rank[static_cast<std::size_t>(sa[static_cast<std::size_t>(nodes[v].lb)] + 1)];
    std::int32_t u = find_node(nodes[v].depth - 1, p);
    below[static_cast<std::size_t>(u)] |= below[v] | branch[v];
  }

  std::vector<SreRecord> out;
  for (std::size_t v = 0; v < m; ++v) {
    std::bitset<256> keep = branch[v] & ~below[v];
    if (keep.none()) continue;
    std::int32_t d = nodes[v].depth;
    detail::for_each_child(nodes[v], [&](std::int32_t a, std::int32_t b) {
      unsigned char c = w.at(sa[static_cast<std::size_t>(a)] + d + 1);
      if (!keep.test(c)) return;
      Pos s = idx.min_start(a, b);  // leftmost occurrence of xc
      out.push_back({s + d + 1, d, c, s + d});
    });
  }
  std::sort(out.begin(), out.end(),
            [](const SreRecord& a, const SreRecord& b) { return a.ext_pos < b.ext_pos; });
  return out;
}

inline Pos chi(const Text& w) {
  SuffixIndex idx(w);
  return static_cast<Pos>(compute_sre(idx, w).size());
}

inline std::vector<Pos> smallest_suffixient_set(const Text& w) {
  SuffixIndex idx(w);
  std::vector<Pos> out;
  for (const auto& r : compute_sre(idx, w)) out.push_back(r.ext_pos);
  std::sort(out.begin(), out.end());
  return out;
}

// BWT[i] = w[sa[i] - 1], wrapping; counts maximal equal-letter runs.
inline Pos bwt_run_count(const SuffixIndex& idx, const Text& w) {
  const auto& sa = idx.sa();
  const std::int32_t n = idx.n();
  Pos runs = 0;
  int prev = -1;
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t p = sa[static_cast<std::size_t>(i)] == 0 ? n - 1 : sa[static_cast<std::size_t>(i)] - 1;
    int c = w.at(p + 1);
    if (c != prev) {
      ++runs;
      prev = c;
    }
  }
  return runs;
}

// Longest previous factor per position (0-based): for each i, the longest
// prefix of w[i..] that also occurs starting at some p < i, with the source
// start. Sources may overlap the factor.
inline std::vector<std::pair<std::int32_t, std::int32_t>> longest_previous_factor(
    const SuffixIndex& idx) {
  const std::int32_t n = idx.n();
  const auto& sa = idx.sa();
  const auto& rank = idx.rank();
  const auto& lcp = idx.lcp();

  // sparse table over lcp for range-min
  int logn = 1;
  while ((1 << logn) < n) ++logn;
  std::vector<int> msb(static_cast<std::size_t>(n) + 1, 0);
  for (std::int32_t i = 2; i <= n; ++i)
    msb[static_cast<std::size_t>(i)] = msb[static_cast<std::size_t>(i / 2)] + 1;
  std::vector<std::vector<std::int32_t>> tab(
      static_cast<std::size_t>(logn) + 1,
      std::vector<std::int32_t>(static_cast<std::size_t>(n)));
  tab[0] = lcp;
  for (int k = 1; (1 << k) <= n; ++k)
    for (std::int32_t i = 0; i + (1 << k) <= n; ++i)
      tab[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          std::min(tab[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)],
                   tab[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i + (1 << (k - 1)))]);
  auto lcp_ranks = [&](std::int32_t a, std::int32_t b) {  // lcp of sa[a], sa[b], a < b
    std::int32_t l = a + 1, r = b;
    int k = msb[static_cast<std::size_t>(r - l + 1)];
    return std::min(tab[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)],
                    tab[static_cast<std::size_t>(k)][static_cast<std::size_t>(r - (1 << k) + 1)]);
  };

  std::vector<std::pair<std::int32_t, std::int32_t>> lpf(
      static_cast<std::size_t>(n), {0, -1});
  std::set<std::int32_t> ranks;  // ranks of positions already passed
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t r = rank[static_cast<std::size_t>(i)];
    auto it = ranks.lower_bound(r);
    std::int32_t best_len = 0, best_src = -1;
    if (it != ranks.end()) {
      std::int32_t l = lcp_ranks(r, *it);
      if (l > best_len) {
        best_len = l;
        best_src = sa[static_cast<std::size_t>(*it)];
      }
    }
    if (it != ranks.begin()) {
      std::int32_t pr = *std::prev(it);
      std::int32_t l = lcp_ranks(pr, r);
      if (l > best_len || (l == best_len && best_src >= 0 &&
                           sa[static_cast<std::size_t>(pr)] < best_src)) {
        best_len = l;
        best_src = sa[static_cast<std::size_t>(pr)];
      }
    }
    lpf[static_cast<std::size_t>(i)] = {best_len, best_src};
    ranks.insert(r);
  }
  return lpf;
}

// Number of factors of the greedy leftmost-previous-occurrence factorization.
inline Pos greedy_lz_count(const Text& w) {
  SuffixIndex idx(w);
  auto lpf = longest_previous_factor(idx);
  Pos count = 0;
  std::int32_t i = 0;
  const std::int32_t n = idx.n();
  while (i < n) {
    std::int32_t len = lpf[static_cast<std::size_t>(i)].first;
    i += std::max<std::int32_t>(1, len);
    ++count;
  }
  return count;
}

}  // namespace sesx

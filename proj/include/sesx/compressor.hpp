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

// Compacted trie of the reversed SRE bodies { x^R : xc in SRE(w), |x| >= 1 }.
// Edge labels are stored as lengths; label characters are read back from the
// text through each node's reference anchor: the character at path depth t of
// a node with reference anchor a is w[a - t + 1].
struct ReverseCompactedTrie {
  struct Node {
    int parent = -1;
    Pos edge_len = 0;
    Pos string_depth = 0;
    Pos ref_anchor = 0;               // anchor of some entry in the subtree
    std::vector<int> children;        // sorted by first edge byte
    std::vector<SreRecord> entries;   // sorted by ext_char
  };
  std::vector<Node> nodes;  // nodes[0] = root

  Pos entry_count() const {
    Pos c = 0;
    for (const auto& nd : nodes) c += static_cast<Pos>(nd.entries.size());
    return c;
  }
};

inline ReverseCompactedTrie build_reverse_trie(const std::vector<SreRecord>& records,
                                               const Text& w) {
  ReverseCompactedTrie trie;
  trie.nodes.push_back({});
  auto& nodes = trie.nodes;

  auto path_char = [&](Pos anchor, Pos t) { return w.at(anchor - t + 1); };

  for (const auto& rec : records) {
    if (rec.x_len == 0) continue;  // single-character extensions carry no body
    const Pos a = rec.anchor_pos;
    const Pos L = rec.x_len;
    int cur = 0;
    for (;;) {
      Pos d = nodes[static_cast<std::size_t>(cur)].string_depth;
      if (d == L) {
        nodes[static_cast<std::size_t>(cur)].entries.push_back(rec);
        break;
      }
      unsigned char nextc = path_char(a, d + 1);
      int child = -1;
      for (int c : nodes[static_cast<std::size_t>(cur)].children) {
        if (path_char(nodes[static_cast<std::size_t>(c)].ref_anchor, d + 1) == nextc) {
          child = c;
          break;
        }
      }
      if (child < 0) {
        int leaf = static_cast<int>(nodes.size());
        nodes.push_back({cur, L - d, L, a, {}, {rec}});
        nodes[static_cast<std::size_t>(cur)].children.push_back(leaf);
        break;
      }
      // walk the edge
      Pos cd = nodes[static_cast<std::size_t>(child)].string_depth;
      Pos cref = nodes[static_cast<std::size_t>(child)].ref_anchor;
      Pos t = d + 1;
      while (t <= std::min(cd, L) && path_char(a, t) == path_char(cref, t)) ++t;
      Pos matched = t - 1;
      if (matched == cd) {
        cur = child;
        continue;
      }
      // split the edge at depth `matched`
      int mid = static_cast<int>(nodes.size());
      nodes.push_back({cur, matched - d, matched, cref, {child}, {}});
      auto& cn = nodes[static_cast<std::size_t>(child)];
      cn.parent = mid;
      cn.edge_len = cd - matched;
      auto& pc = nodes[static_cast<std::size_t>(cur)].children;
      *std::find(pc.begin(), pc.end(), child) = mid;
      if (matched == L) {
        nodes[static_cast<std::size_t>(mid)].entries.push_back(rec);
      } else {
        int leaf = static_cast<int>(nodes.size());
        nodes.push_back({mid, L - matched, L, a, {}, {rec}});
        nodes[static_cast<std::size_t>(mid)].children.push_back(leaf);
      }
      break;
    }
  }

  // deterministic traversal order
  for (auto& nd : nodes) {
    std::sort(nd.children.begin(), nd.children.end(), [&](int a, int b) {
      Pos d = nd.string_depth + 1;
      return path_char(nodes[static_cast<std::size_t>(a)].ref_anchor, d) <
             path_char(nodes[static_cast<std::size_t>(b)].ref_anchor, d);
    });
    std::sort(nd.entries.begin(), nd.entries.end(),
              [](const SreRecord& a, const SreRecord& b) { return a.ext_char < b.ext_char; });
  }
  return trie;
}

// DFS over the trie; each consecutive pair of entries with LCA string depth
// d >= 1 yields one equation between the two occurrences of the common
// suffix, plus one pin per distinct character at its leftmost occurrence.
inline Ses emit_ses(const ReverseCompactedTrie& trie, const Text& w) {
  Ses sys;
  sys.n = w.size();

  bool have_prev = false;
  Pos prev_anchor = 0;
  Pos lca_depth = 0;

  struct Frame {
    int node;
    std::size_t next_child = 0;
    bool entries_done = false;
  };
  std::vector<Frame> stack;
  stack.push_back({0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nd = trie.nodes[static_cast<std::size_t>(f.node)];
    if (!f.entries_done) {
      f.entries_done = true;
      for (const auto& e : nd.entries) {
        if (have_prev && lca_depth >= 1) {
          sys.eq.push_back({prev_anchor - lca_depth + 1,
                            e.anchor_pos - lca_depth + 1, lca_depth});
        }
        have_prev = true;
        prev_anchor = e.anchor_pos;
        lca_depth = nd.string_depth;
      }
    }
    if (f.next_child < nd.children.size()) {
      int c = nd.children[f.next_child++];
      stack.push_back({c});
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        Pos pd = trie.nodes[static_cast<std::size_t>(stack.back().node)].string_depth;
        lca_depth = std::min(lca_depth, pd);
      }
    }
  }

  std::vector<Pos> leftmost(256, 0);
  for (Pos i = 1; i <= w.size(); ++i) {
    unsigned char c = w.at(i);
    if (leftmost[c] == 0) leftmost[c] = i;
  }
  for (int c = 0; c < 256; ++c) {
    if (leftmost[static_cast<std::size_t>(c)] != 0)
      sys.ch.push_back({leftmost[static_cast<std::size_t>(c)],
                        static_cast<unsigned char>(c)});
  }
  return sys;
}

struct Compressed {
  Ses sys;
  Pos raw_len = 0;
};

inline constexpr Pos kMaxRawLen = (Pos{1} << 31) - 2;

inline Compressed compress(std::string_view raw) {
  if (static_cast<Pos>(raw.size()) > kMaxRawLen)
    throw TooLarge("compress: input exceeds the configured maximum");
  Text w = Text::attach_sentinel(raw);
  SuffixIndex idx(w);
  auto records = compute_sre(idx, w);
  auto trie = build_reverse_trie(records, w);
  return {emit_ses(trie, w), w.raw_len()};
}

inline std::string decompress(const Ses& sys, Pos raw_len) {
  validate(sys);
  if (sys.n != raw_len + 1) throw Corrupted("length metadata mismatch");
  SolveResult r = solve(sys);
  if (r.kind != SolveResult::Kind::Unique)
    throw Corrupted(r.kind == SolveResult::Kind::Unsat
                        ? "system is unsatisfiable"
                        : "system does not determine a unique string");
  if (static_cast<unsigned char>(r.text.back()) != kSentinel)
    throw Corrupted("reconstructed text does not end with the sentinel");
  return r.text.substr(0, static_cast<std::size_t>(raw_len));
}

// Class partition induced by the emitted system; by the character-class
// correspondence it must equal the partition of positions by byte value.
inline std::vector<Pos> position_equivalence_classes(const Text& w) {
  SuffixIndex idx(w);
  auto records = compute_sre(idx, w);
  auto trie = build_reverse_trie(records, w);
  Ses sys = emit_ses(trie, w);
  return solve(sys).classes;
}

}  // namespace sesx

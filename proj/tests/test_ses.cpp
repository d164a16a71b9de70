#include <doctest.h>

#include <random>
#include <vector>

#include "sesx/oracle.hpp"
#include "sesx/ses.hpp"

using namespace sesx;

namespace {

Ses random_system(std::mt19937_64& rng, Pos max_n, Pos max_eq) {
  std::uniform_int_distribution<Pos> nd(1, max_n);
  Ses sys;
  sys.n = nd(rng);
  std::uniform_int_distribution<Pos> eqd(0, max_eq);
  Pos neq = eqd(rng);
  std::uniform_int_distribution<Pos> posd(1, sys.n);
  for (Pos t = 0; t < neq; ++t) {
    Pos i = posd(rng), j = posd(rng);
    Pos maxlen = sys.n - std::max(i, j) + 1;
    std::uniform_int_distribution<Pos> lend(1, maxlen);
    sys.eq.push_back({i, j, lend(rng)});
  }
  std::uniform_int_distribution<Pos> npin(0, sys.n);
  std::uniform_int_distribution<int> chd(0, 3);
  Pos pins = npin(rng);
  for (Pos t = 0; t < pins; ++t) {
    Ses::Pin p{posd(rng), static_cast<unsigned char>('a' + chd(rng))};
    bool dup = false;
    for (const auto& q : sys.ch) dup |= (q == p);
    if (!dup) sys.ch.push_back(p);
  }
  return sys;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(Ses{3, {{1, 2, 2}}, {{1, 'a'}}}));
  CHECK_THROWS_AS(validate(Ses{3, {{2, 3, 2}}, {}}), MalformedSystem);
  CHECK_THROWS_AS(validate(Ses{0, {}, {}}), MalformedSystem);
  CHECK_THROWS_AS(validate(Ses{3, {}, {{1, 'a'}, {1, 'a'}}}), MalformedSystem);
  // same position, different byte: well-formed but unsatisfiable
  CHECK_NOTHROW(validate(Ses{3, {}, {{1, 'a'}, {1, 'b'}}}));
}

TEST_CASE("solve basics") {
  {
    auto r = solve(Ses{4, {{1, 2, 3}}, {{1, 'a'}}});
    REQUIRE(r.kind == SolveResult::Kind::Unique);
    CHECK(r.text == "aaaa");
    CHECK(r.classes == std::vector<Pos>{1, 1, 1, 1});
  }
  {
    auto r = solve(Ses{3, {{1, 2, 2}}, {{1, 'a'}, {3, 'b'}}});
    CHECK(r.kind == SolveResult::Kind::Unsat);
    CHECK(r.conflict == std::pair<Pos, Pos>{1, 3});
  }
  {
    auto r = solve(Ses{2, {}, {{1, 'a'}}});
    REQUIRE(r.kind == SolveResult::Kind::Ambiguous);
    CHECK(r.free_pos == 2);
  }
}

TEST_CASE("solve handles overlapping and self-referential equations") {
  // w[6..8] = w[8..10] style overlap
  Ses sys{10,
          {{6, 8, 3}, {1, 6, 5}},
          {{1, 'x'}, {2, 'y'}, {3, 'x'}, {4, 'y'}, {5, 'x'}}};
  auto r = solve(sys);
  auto n = oracle::naive_ses_solve(sys);
  CHECK(r.kind == n.kind);
  CHECK(r.classes == n.classes);
  if (r.kind == SolveResult::Kind::Unique) CHECK(r.text == n.text);
}

TEST_CASE("solve equals naive oracle on random systems") {
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 200; ++t) {
    Ses sys = random_system(rng, 120, 60);
    auto a = solve(sys);
    auto b = oracle::naive_ses_solve(sys);
    REQUIRE(a.kind == b.kind);
    CHECK(a.classes == b.classes);
    if (a.kind == SolveResult::Kind::Unique) {
      CHECK(a.text == b.text);
      // direct satisfaction check
      for (const auto& e : sys.eq)
        CHECK(a.text.substr(static_cast<std::size_t>(e.i - 1),
                            static_cast<std::size_t>(e.len)) ==
              a.text.substr(static_cast<std::size_t>(e.j - 1),
                            static_cast<std::size_t>(e.len)));
      for (const auto& p : sys.ch)
        CHECK(static_cast<unsigned char>(a.text[static_cast<std::size_t>(p.k - 1)]) ==
              p.c);
    }
  }
}

TEST_CASE("uniqueness is exactly full pin coverage") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Ses sys = random_system(rng, 60, 20);
    auto r = solve(sys);
    if (r.kind != SolveResult::Kind::Unique) continue;
    std::vector<bool> pinned(static_cast<std::size_t>(sys.n) + 1, false);
    for (const auto& p : sys.ch)
      pinned[static_cast<std::size_t>(r.classes[static_cast<std::size_t>(p.k - 1)])] = true;
    for (Pos i = 1; i <= sys.n; ++i)
      CHECK(pinned[static_cast<std::size_t>(r.classes[static_cast<std::size_t>(i - 1)])]);
  }
}

TEST_CASE("size metrics") {
  Ses sys{10, {{1, 2, 3}, {4, 5, 2}, {1, 1, 1}}, {{1, 'a'}, {2, 'b'}, {3, 'c'}}};
  CHECK(size(sys) == 6);
  CHECK(weighted_size(sys) == 27);
  Ses lit{4, {}, {{1, 'a'}, {2, 'b'}, {3, 'c'}, {4, 'd'}}};
  CHECK(size(lit) == 4);
  CHECK(weighted_size(lit) == 4);
  CHECK(weighted_size(sys) <= 8 * size(sys));
}

TEST_CASE("attractor_from_ses") {
  Ses sys{4, {{1, 2, 3}}, {{1, 'a'}}};
  CHECK(attractor_from_ses(sys) == std::vector<Pos>{1, 2, 3, 4});
  CHECK(attractor_from_ses(sys).size() <=
        static_cast<std::size_t>(4 * sys.eq.size() + sys.ch.size()));

  Ses amb{3, {}, {{1, 'a'}}};
  CHECK_THROWS_AS(attractor_from_ses(amb), NotRepresenting);
}

TEST_CASE("attractor of an all-literal system") {
  std::string w = "banana";
  Ses sys;
  sys.n = static_cast<Pos>(w.size());
  for (Pos i = 1; i <= sys.n; ++i)
    sys.ch.push_back({i, static_cast<unsigned char>(w[static_cast<std::size_t>(i - 1)])});
  auto g = attractor_from_ses(sys);
  CHECK(g.size() == w.size());
  CHECK(oracle::naive_attractor_check(Text::attach_sentinel(w.substr(0, 5)),
                                      {1, 2, 3, 4, 5, 6}));
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(Ses{1, {}, {{1, 'x'}}}) == "x");
  CHECK_THROWS_AS(reconstruct(Ses{2, {}, {{1, 'x'}}}), NotRepresenting);
}

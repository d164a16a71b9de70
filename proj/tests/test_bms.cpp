#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "sesx/bms.hpp"
#include "sesx/format.hpp"

using namespace sesx;

TEST_CASE("validate_bms") {
  Bms ok{4, {{true, 'a'}, {true, 'b'}, {false, 0, 1, 2}}};
  CHECK_NOTHROW(validate_bms(ok));

  Bms cyc{2, {{false, 0, 2, 1}, {false, 0, 1, 1}}};
  CHECK_THROWS_AS(validate_bms(cyc), InvalidScheme);

  Bms single{1, {{true, 'a'}}};
  CHECK_NOTHROW(validate_bms(single));

  Bms bad_len{3, {{true, 'a'}}};
  CHECK_THROWS_AS(validate_bms(bad_len), InvalidScheme);
}

TEST_CASE("transition function") {
  Bms b{4, {{true, 'a'}, {true, 'b'}, {false, 0, 1, 2}}};
  auto tau = transition_fn(b);
  CHECK(tau[1] == 0);
  CHECK(tau[2] == 0);
  CHECK(tau[3] == 1);
  CHECK(tau[4] == 2);
}

TEST_CASE("bms_to_ses") {
  Text w = Text::attach_sentinel("abab");
  Bms b{5, {{true, 'a'}, {true, 'b'}, {false, 0, 1, 2}, {true, 0}}};
  Ses sys = bms_to_ses(b, w);
  REQUIRE(sys.eq.size() == 1);
  CHECK(sys.eq[0] == Ses::Eq{3, 1, 2});
  REQUIRE(sys.ch.size() == 3);
  CHECK(size(sys) == static_cast<Pos>(b.phrases.size()));
  CHECK(reconstruct(sys) == std::string(w.bytes()));
}

TEST_CASE("bms_to_ses rejects inconsistent phrases") {
  Text w = Text::attach_sentinel("abab");
  Bms wrong_lit{5, {{true, 'b'}, {true, 'b'}, {false, 0, 1, 2}, {true, 0}}};
  CHECK_THROWS_AS(bms_to_ses(wrong_lit, w), InconsistentScheme);
  Bms wrong_copy{5, {{true, 'a'}, {true, 'b'}, {false, 0, 2, 2}, {true, 0}}};
  CHECK_THROWS_AS(bms_to_ses(wrong_copy, w), InconsistentScheme);
}

TEST_CASE("all-literal scheme") {
  Text w = Text::attach_sentinel("xyz");
  Bms b;
  b.n = w.size();
  for (Pos i = 1; i <= w.size(); ++i) b.phrases.push_back({true, w.at(i)});
  Ses sys = bms_to_ses(b, w);
  CHECK(sys.ch.size() == static_cast<std::size_t>(w.size()));
  CHECK(reconstruct(sys) == std::string(w.bytes()));
}

TEST_CASE("greedy_left_bms") {
  {
    Bms b = greedy_left_bms(Text::attach_sentinel(""));
    REQUIRE(b.phrases.size() == 1);
    CHECK(b.phrases[0].literal);
    CHECK(b.phrases[0].c == 0);
  }
  {
    Bms b = greedy_left_bms(Text::attach_sentinel("aaaa"));
    REQUIRE(b.phrases.size() == 3);
    CHECK(b.phrases[0].literal);
    CHECK_FALSE(b.phrases[1].literal);
    CHECK(b.phrases[1].src == 1);
    CHECK(b.phrases[1].len == 3);
    CHECK(b.phrases[2].literal);
  }
  {
    Bms b = greedy_left_bms(Text::attach_sentinel("ab"));
    CHECK(b.phrases.size() == 3);
    for (const auto& p : b.phrases) CHECK(p.literal);
  }
}

TEST_CASE("greedy scheme round trips through ses") {
  for (const std::string& x :
       {thue_morse(8), fibonacci_word(12), testutil::random_string(1, 500, 4)}) {
    Text w = Text::attach_sentinel(x);
    Bms b = greedy_left_bms(w);
    CHECK_NOTHROW(validate_bms(b));
    Ses sys = bms_to_ses(b, w);
    CHECK(size(sys) == static_cast<Pos>(b.phrases.size()));
    CHECK(reconstruct(sys) == std::string(w.bytes()));
  }
}

TEST_CASE("bms text format round trip") {
  Bms b{5, {{true, 'a'}, {true, 'b'}, {false, 0, 1, 2}, {true, 0}}};
  Bms parsed = parse_bms(render_bms(b));
  REQUIRE(parsed.phrases.size() == b.phrases.size());
  CHECK(parsed.n == b.n);
  for (std::size_t t = 0; t < b.phrases.size(); ++t) {
    CHECK(parsed.phrases[t].literal == b.phrases[t].literal);
    CHECK(parsed.phrases[t].c == b.phrases[t].c);
    CHECK(parsed.phrases[t].src == b.phrases[t].src);
    CHECK(parsed.phrases[t].len == b.phrases[t].len);
  }
}

#include <doctest.h>

#include <numeric>

#include "lcslab/error.hpp"
#include "lcslab/lcs.hpp"
#include "oracles.hpp"

using namespace lcslab;
using oracle::seq;

TEST_CASE("sequence symbols and parsing") {
  CHECK(symbol_char(0) == '0');
  CHECK(symbol_char(10) == 'a');
  CHECK(symbol_char(36) == 'A');
  CHECK(symbol_char(62) == '+');
  CHECK(symbol_char(63) == '/');
  for (unsigned s = 0; s < kMaxAlphabet; ++s) CHECK(char_symbol(symbol_char(static_cast<Symbol>(s))) == s);
  CHECK_FALSE(char_symbol('#'));
  CHECK(seq("0110").to_string() == "0110");
  CHECK_THROWS_AS(seq("012"), InvalidInput);
  CHECK_THROWS_AS(Sequence({0, 1}, 1), InvalidInput);
  CHECK_THROWS_AS(Sequence({0, 5}, 4), InvalidInput);
  Sequence s(2);
  CHECK_THROWS_AS(s.push_back(2), InvalidInput);
  CHECK(seq("0011").reversed() == seq("1100"));
}

TEST_CASE("lcs2 examples") {
  CHECK(lcs2(seq("00"), seq("00")).length == 2);
  CHECK(lcs2(seq("0110"), seq("1101")).length == oracle::lcs(seq("0110"), seq("1101")));
  CHECK(lcs2(seq("0110"), seq("1101")).length == 3);
  CHECK(lcs2(seq("00"), seq("11")).length == 0);
  CHECK(lcs2(seq(""), seq("0101"), true).length == 0);
  CHECK(lcs2(seq(""), seq("0101"), true).witness->empty());
  CHECK_THROWS_AS(lcs2(seq("01"), seq("01", 3)), InvalidInput);
}

TEST_CASE("lcs_k examples") {
  std::vector<Sequence> same{seq("01"), seq("01"), seq("01")};
  CHECK(lcs_k(same).length == 2);
  std::vector<Sequence> three{seq("0101"), seq("0011"), seq("0110")};
  CHECK(lcs_k(three).length == oracle::lcs(three));
  std::vector<Sequence> disjoint{seq("0"), seq("1")};
  CHECK(lcs_k(disjoint, 1000).length == 0);
  std::vector<Sequence> one{seq("01")};
  CHECK_THROWS_AS(lcs_k(one), InvalidInput);
  std::vector<Sequence> big{seq("0101010101"), seq("0101010101"), seq("0101010101")};
  CHECK(lcs_k_cells(big) == 1331);
  try {
    lcs_k(big, 1000);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("1331") != std::string::npos);
  }
}

TEST_CASE("is_common_subsequence examples") {
  std::vector<Sequence> s{seq("0011"), seq("0101")};
  CHECK(is_common_subsequence(seq(""), s));
  CHECK(is_common_subsequence(seq("00"), s));
  CHECK_FALSE(is_common_subsequence(seq("111"), s));
}

TEST_CASE("lcs2 against brute force and the classical DP") {
  std::mt19937_64 g(11);
  for (int t = 0; t < 600; ++t) {
    const unsigned q = t % 3 == 0 ? 4 : 2;
    const auto a = oracle::random_sequence(g, g() % 11, q);
    const auto b = oracle::random_sequence(g, g() % 11, q);
    const auto expect = oracle::lcs(a, b);
    CHECK(lcs2_length(a, b) == expect);
    CHECK(reference::lcs2_length_dp(a, b) == expect);
    const auto r = lcs2(a, b, true);
    CHECK(r.length == expect);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == expect);
    CHECK(*r.witness == reference::lcs2_witness_table(a, b));
  }
}

TEST_CASE("long inputs: multi-word kernel and checkpointed witness") {
  std::mt19937_64 g(12);
  for (std::size_t n : {63u, 64u, 65u, 127u, 128u, 129u, 300u, 1000u}) {
    for (unsigned q : {2u, 5u, 64u}) {
      const auto a = oracle::random_sequence(g, n, q);
      const auto b = oracle::random_sequence(g, n + g() % 70, q);
      const auto len = reference::lcs2_length_dp(a, b);
      CHECK(lcs2_length(a, b) == len);
      CHECK(lcs2_length(b, a) == len);
      const auto r = lcs2(a, b, true);
      CHECK(r.length == len);
      CHECK(*r.witness == reference::lcs2_witness_table(a, b));
      std::vector<Sequence> pair{a, b};
      CHECK(is_common_subsequence(*r.witness, pair));
    }
  }
}

TEST_CASE("lcs_k and dominant points against brute force") {
  std::mt19937_64 g(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 2 + t % 4;
    const unsigned q = t % 5 == 0 ? 3 : 2;
    std::vector<Sequence> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(oracle::random_sequence(g, g() % 8, q));
    const auto expect = oracle::lcs(s);
    CHECK(lcs_k(s).length == expect);
    CHECK(lcs_k_dominant(s) == expect);
  }
  // larger instances: dominant points against the DP
  for (int t = 0; t < 40; ++t) {
    std::vector<Sequence> s;
    for (int i = 0; i < 3 + t % 3; ++i) s.push_back(oracle::random_sequence(g, 12 + g() % 10, 2 + t % 3));
    CHECK(lcs_k_dominant(s) == lcs_k(s).length);
  }
}

TEST_CASE("lcs properties") {
  std::mt19937_64 g(14);
  for (int t = 0; t < 200; ++t) {
    const unsigned q = 2 + t % 4;
    const auto a = oracle::random_sequence(g, 1 + g() % 40, q);
    const auto b = oracle::random_sequence(g, 1 + g() % 40, q);
    const auto len = lcs2_length(a, b);
    CHECK(lcs2_length(b, a) == len);
    CHECK(lcs2_length(a.reversed(), b.reversed()) == len);
    CHECK(len <= std::min(a.size(), b.size()));

    std::vector<Symbol> perm(q);
    std::iota(perm.begin(), perm.end(), Symbol{0});
    std::shuffle(perm.begin(), perm.end(), g);
    CHECK(lcs2_length(oracle::relabel(a, perm), oracle::relabel(b, perm)) == len);

    Sequence a2 = a;
    a2.push_back(static_cast<Symbol>(g() % q));
    const auto grown = lcs2_length(a2, b);
    CHECK(grown >= len);
    CHECK(grown <= len + 1);

    std::vector<Sequence> three{a, b, oracle::random_sequence(g, 1 + g() % 6, q)};
    const auto lk = lcs_k(three).length;
    CHECK(lk <= std::min({three[0].size(), three[1].size(), three[2].size()}));
    std::vector<Sequence> rev{three[0].reversed(), three[1].reversed(), three[2].reversed()};
    CHECK(lcs_k(rev).length == lk);
  }
}

TEST_CASE("WordLcs matches lcs2 prefix by prefix") {
  std::mt19937_64 g(15);
  for (int t = 0; t < 50; ++t) {
    const auto a = oracle::random_sequence(g, 1 + g() % 64, 3);
    const auto b = oracle::random_sequence(g, 1 + g() % 50, 3);
    WordLcs w(a.symbols(), 3);
    auto state = w.initial_state();
    Sequence prefix(3);
    for (std::size_t i = 0; i < b.size(); ++i) {
      state = w.step(state, b[i]);
      prefix.push_back(b[i]);
      CHECK(w.length(state) == reference::lcs2_length_dp(a, prefix));
    }
  }
}

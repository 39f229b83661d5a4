#include "doctest.h"

#include "kautz/families.hpp"
#include "kautz/word.hpp"
#include "oracles.hpp"

using namespace kautz;

namespace {

Word w(std::string_view text, int d = 9) { return parse_word(text, d); }

std::vector<Word> as_words(const oracle::Words& ws) {
  std::vector<Word> out;
  for (const auto& v : ws) out.push_back(Word(std::vector<Symbol>(v.begin(), v.end())));
  return out;
}

}  // namespace

TEST_CASE("vertex predicates") {
  CHECK_FALSE(is_valid_vertex(w("0120"), {Family::CK, 3, 4}));
  CHECK(is_valid_vertex(w("0121"), {Family::CK, 3, 4}));
  CHECK(is_valid_vertex(w("0121"), {Family::K, 3, 4}));
  for (Family f : {Family::K, Family::sK, Family::CK, Family::MCK}) CHECK_FALSE(is_valid_vertex(w("0112"), {f, 3, 4}));
  CHECK_THROWS_AS(is_valid_vertex(w("012"), {Family::CK, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(is_valid_vertex(w("0140"), {Family::CK, 3, 4}), std::invalid_argument);
}

TEST_CASE("CK(d,2) uses the Kautz vertex set") {
  CHECK(enumerate_vertices({Family::CK, 3, 2}) == enumerate_vertices({Family::K, 3, 2}));
}

TEST_CASE("enumeration") {
  const auto ck22 = enumerate_vertices({Family::CK, 2, 2});
  std::vector<std::string> text;
  for (const auto& v : ck22) text.push_back(format_word(v, 2));
  CHECK(text == std::vector<std::string>{"01", "02", "10", "12", "20", "21"});
  CHECK(enumerate_vertices({Family::CK, 3, 4}).size() == 84);
  CHECK(enumerate_vertices({Family::K, 2, 3}).size() == 12);
}

TEST_CASE("enumeration agrees with brute force and closed forms on the grid") {
  for (Family f : {Family::K, Family::sK, Family::CK, Family::MCK}) {
    for (int d = 2; d <= 5; ++d) {
      for (int l = 2; l <= 6; ++l) {
        const FamilySpec spec{f, d, l};
        CAPTURE(spec.name());
        const auto words = enumerate_vertices(spec);
        CHECK(words == as_words(oracle::vertices(f, d, l)));
        CHECK(static_cast<std::int64_t>(words.size()) == order_formula(spec));
        CHECK(std::is_sorted(words.begin(), words.end()));
        CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
      }
    }
  }
}

TEST_CASE("word period") {
  CHECK(word_period(w("01010")) == 2);
  CHECK(word_period(w("0120123012012")) == 7);
  CHECK(word_period(w("012")) == 3);
  CHECK(word_period(w("0101")) == 2);
}

TEST_CASE("period holds exactly for the returned value") {
  for (const Word& x : enumerate_vertices({Family::K, 2, 6})) {
    const int p = word_period(x);
    for (std::size_t i = 0; i + p < x.size(); ++i) CHECK(x[i] == x[i + p]);
    for (int q = 1; q < p; ++q) {
      bool periodic = true;
      for (std::size_t i = 0; i + q < x.size(); ++i) periodic = periodic && x[i] == x[i + q];
      CHECK_FALSE(periodic);
    }
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(w("012")) == w("210"));
  CHECK(reverse(w("0123")) == w("3210"));
  for (const Word& x : enumerate_vertices({Family::CK, 3, 4})) CHECK(reverse(reverse(x)) == x);
  for (Family f : {Family::K, Family::sK, Family::CK, Family::MCK}) {
    const FamilySpec spec{f, 3, 4};
    for (const Word& x : enumerate_vertices({Family::K, 3, 4}))
      CHECK(is_valid_vertex(reverse(x), spec) == is_valid_vertex(x, spec));
  }
}

TEST_CASE("text form") {
  CHECK(format_word(Word{0, 1, 2, 0}, 3) == "0120");
  CHECK(format_word(Word{0, 1, 2, 10}, 10) == "0,1,2,10");
  CHECK(parse_word("0,1,2,10", 10) == Word{0, 1, 2, 10});
  CHECK(parse_word("0,1,2", 3) == Word{0, 1, 2});
  CHECK_THROWS_AS(parse_word("01210", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("014", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0a1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("", 3), std::invalid_argument);
  for (const Word& x : enumerate_vertices({Family::sK, 11, 2})) CHECK(parse_word(format_word(x, 11), 11) == x);
}

TEST_CASE("family specs") {
  CHECK(parse_family("ck") == Family::CK);
  CHECK(parse_family("SK") == Family::sK);
  CHECK_THROWS_AS(parse_family("X"), std::invalid_argument);
  CHECK(FamilySpec{Family::CK, 3, 4}.name() == "CK(3,4)");
  CHECK_THROWS_AS((FamilySpec{Family::K, 1, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilySpec{Family::K, 3, 1}.validate()), std::invalid_argument);
  CHECK(known_disconnected({Family::CK, 2, 3}));
  CHECK_FALSE(known_disconnected({Family::CK, 2, 4}));
  CHECK_FALSE(known_disconnected({Family::CK, 2, 2}));
  CHECK_FALSE(known_disconnected({Family::CK, 3, 3}));
}

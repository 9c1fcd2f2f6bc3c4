#include "doctest.h"
#include "oracles.hpp"
#include "rtnn/error.hpp"
#include "rtnn/weyl.hpp"

using namespace rtnn;

TEST_SUITE("weyl") {

TEST_CASE("multiply composes right to left") {
  const auto s1 = WeylElt::simple(3, 1);
  const auto s2 = WeylElt::simple(3, 2);
  CHECK(s1 * s2 == WeylElt{2, 3, 1});
  CHECK(s1 * WeylElt::identity(3) == s1);
  CHECK((s1 * s1).is_identity());
  CHECK_THROWS_AS(multiply(s1, WeylElt::identity(4)), Error);
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_elements(n);
    for (const auto& u : all)
      for (const auto& v : all) CHECK((u * v).images() == oracle::compose(u.images(), v.images()));
  }
}

TEST_CASE("length counts inversions") {
  CHECK(length(WeylElt::identity(3)) == 0);
  CHECK(length(WeylElt{2, 3, 1}) == 2);
  CHECK(length(longest_element(4)) == 6);
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_elements(n)) CHECK(length(w) == oracle::bfs_length(w.images()));
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == WeylElt{2, 1});
  CHECK(longest_element(3) == WeylElt{3, 2, 1});
  CHECK((longest_element(3) * longest_element(3)).is_identity());
  for (int n = 1; n <= 4; ++n) {
    const auto w0 = longest_element(n);
    for (const auto& w : all_elements(n)) CHECK(length(w0 * w) + length(w) == length(w0));
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(WeylElt::identity(3)).empty());
  CHECK(reduced_word(WeylElt::simple(3, 1)) == Word{{1}});
  CHECK(reduced_word(longest_element(3)) == Word{{1, 2, 1}});
  CHECK(reduced_word(longest_element(3), WordStrategy::LargestDescent) == Word{{2, 1, 2}});
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_elements(n))
      for (auto strategy : {WordStrategy::SmallestDescent, WordStrategy::LargestDescent}) {
        const Word word = reduced_word(w, strategy);
        CHECK(static_cast<int>(word.size()) == length(w));
        CHECK(word_product(n, word) == w);
      }
  // S_3 longest element has exactly two reduced words.
  CHECK(all_reduced_words(longest_element(3)).size() == 2);
  // S_4 longest element has 16.
  CHECK(all_reduced_words(longest_element(4)).size() == 16);
}

TEST_CASE("bruhat order agrees with the subword criterion") {
  CHECK(bruhat_leq(WeylElt::identity(3), longest_element(3)));
  CHECK_FALSE(bruhat_leq(WeylElt::simple(3, 1), WeylElt::simple(3, 2)));
  CHECK(bruhat_leq(WeylElt::simple(3, 1), WeylElt::simple(3, 1) * WeylElt::simple(3, 2)));
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_elements(n);
    for (const auto& u : all)
      for (const auto& w : all) {
        const bool leq = bruhat_leq(u, w);
        CHECK(leq == oracle::subword_leq(u.images(), w.images()));
        if (leq && !(u == w)) CHECK(length(u) < length(w));
      }
  }
}

TEST_CASE("bruhat pairs") {
  const auto p2 = bruhat_pairs(2);
  REQUIRE(p2.size() == 3);
  const auto e = WeylElt::identity(2);
  const auto s = WeylElt::simple(2, 1);
  CHECK(p2[0] == std::pair{e, e});
  CHECK(p2[1] == std::pair{e, s});
  CHECK(p2[2] == std::pair{s, s});
  CHECK(bruhat_pairs(3).size() == 19);
  CHECK(bruhat_pairs(4).size() == 213);
  CHECK_THROWS_AS(bruhat_pairs(7), Error);
  CHECK(bruhat_pairs(5, 5).size() == 3781);
}

TEST_CASE("peel") {
  const auto e = WeylElt::identity(3);
  const auto w0 = longest_element(3);
  const auto s1 = WeylElt::simple(3, 1);
  CHECK(peel(e, e).v == w0);
  CHECK(peel(e, w0).v.is_identity());
  const auto r = peel(s1, s1);
  CHECK(r.v == WeylElt{1, 3, 2} * WeylElt{2, 1, 3});  // s2 s1
  CHECK(length(s1 * r.v) == 1 + length(r.v));
  CHECK_THROWS_AS(peel(w0, e), Error);

  for (int n = 2; n <= 4; ++n)
    for (const auto& [w, wp] : bruhat_pairs(n))
      for (auto strategy : {WordStrategy::SmallestDescent, WordStrategy::LargestDescent}) {
        const auto [v, word] = peel(w, wp, strategy);
        CHECK(word_product(n, word) == v);
        CHECK(static_cast<int>(word.size()) == length(v));
        CHECK(length(w * v) == length(w) + length(v));
        CHECK(length(wp * v) == length(wp) + length(v));
        for (int i = 1; i < n; ++i) {
          const bool up_w = length(times_simple(w * v, i)) > length(w * v);
          const bool up_wp = length(times_simple(wp * v, i)) > length(wp * v);
          CHECK_FALSE((up_w && up_wp));
        }
      }
}

TEST_CASE("find descent pair") {
  CHECK(find_descent_pair(WeylElt::identity(2), WeylElt::simple(2, 1)) == 1);
  CHECK(find_descent_pair(WeylElt::identity(3), longest_element(3)) == 1);
  const auto s2 = WeylElt::simple(3, 2);
  CHECK(find_descent_pair(s2, s2 * WeylElt::simple(3, 1)) == 1);
  CHECK_THROWS_AS(find_descent_pair(longest_element(3), longest_element(3)), Error);
  // After peeling, a strictly smaller pair always has a descent pair.
  for (int n = 2; n <= 4; ++n)
    for (const auto& [w, wp] : bruhat_pairs(n)) {
      if (w == wp) continue;
      const auto v = peel(w, wp).v;
      const int s = find_descent_pair(w * v, wp * v);
      CHECK(bruhat_leq(w * v, times_simple(wp * v, s)));
    }
}

TEST_CASE("demazure product of subwords") {
  CHECK(demazure_product(3, Word{{1, 1}}) == WeylElt::simple(3, 1));
  CHECK(demazure_product(3, Word{{1, 2, 1, 2}}) == longest_element(3));
  const auto w0 = longest_element(4);
  const Word word = reduced_word(w0);
  const auto products = oracle::subword_products(4, word.letters);
  for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1) sub.letters.push_back(word.letters[k]);
    const auto d = demazure_product(4, sub);
    CHECK(products.count(d.images()) == 1);
    CHECK(length(d) <= static_cast<int>(sub.size()));
  }
}

TEST_CASE("text formats") {
  CHECK(to_oneline(WeylElt{2, 3, 1}) == "2,3,1");
  CHECK(parse_oneline("2,3,1") == WeylElt{2, 3, 1});
  CHECK(to_string(Word{{1, 2, 1}}) == "[1,2,1]");
  CHECK(parse_word("[1,2,1]") == Word{{1, 2, 1}});
  CHECK(parse_reflection_word(3, "s1 s2") == WeylElt{2, 3, 1});
  CHECK(parse_reflection_word(3, "s1s2s1") == longest_element(3));
  CHECK(parse_reflection_word(3, "").is_identity());
  CHECK_THROWS_AS(parse_oneline("1,1,2"), Error);
  CHECK_THROWS_AS(parse_oneline("1,x"), Error);
  CHECK_THROWS_AS(parse_reflection_word(3, "s3"), Error);
}

}  // TEST_SUITE

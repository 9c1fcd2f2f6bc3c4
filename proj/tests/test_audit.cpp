#include "doctest.h"
#include "oracles.hpp"
#include "rtnn/audit.hpp"
#include "rtnn/error.hpp"
#include "rtnn/serialize.hpp"

using namespace rtnn;

TEST_SUITE("audit") {

TEST_CASE("random rationals stay in range") {
  auto rng = make_rng(3, 0);
  for (int k = 0; k < 500; ++k) {
    const Rat a = random_positive_rat(rng);
    CHECK(a > 0);
    CHECK(a.get_num() <= 10);
    CHECK(a.get_den() <= 10);
    CHECK(random_nonzero_rat(rng) != 0);
  }
  auto r1 = make_rng(9, 4);
  auto r2 = make_rng(9, 4);
  auto r3 = make_rng(9, 5);
  const auto a = r1();
  CHECK(a == r2());
  CHECK(a != r3());
}

TEST_CASE("sample_tnn_flag") {
  CHECK(sample_tnn_flag(3, 1, 0) == borel_plus(3));
  CHECK(sample_tnn_flag(4, 8, 0) == borel_plus(4));

  // n = 2 full mask: span of (a, 1) * const with a > 0; parameter 1 gives span(1,1)
  const BorelPt b2 = sample_tnn_flag(2, 5, 1);
  CHECK(b2.rep()(2, 1) == 1);
  CHECK(b2.rep()(1, 1) > 0);
  CHECK(act(gen_y(2, 1, 1), borel_plus(2)).rep()(1, 1) == 1);

  CHECK(sample_tnn_flag(3, 2, 5) == sample_tnn_flag(3, 2, 5));
  const Word w0word = tnn_sampling_word(3);
  REQUIRE(w0word.letters.size() == 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ClassifyResult r = classify(sample_tnn_flag(3, seed, 7));
    CHECK(r.index.w == WeylElt::identity(3));
    CHECK(r.index.wp == longest_element(3));
    CHECK(r.nonneg);
    for (const Rat& c : r.coords) CHECK(c > 0);
  }
}

TEST_CASE("subword masks land in R_{w0 v, w0}") {
  for (int n = 2; n <= 4; ++n) {
    const Word word = tnn_sampling_word(n);
    const std::uint64_t masks = std::uint64_t{1} << word.letters.size();
    const WeylElt w0 = longest_element(n);
    for (std::uint64_t mask = 0; mask < masks; mask += (n == 4 ? 7 : 1)) {
      Word sub;
      for (std::size_t k = 0; k < word.letters.size(); ++k)
        if ((mask >> k) & 1) sub.letters.push_back(word.letters[k]);
      const WeylElt v = demazure_product(n, sub);
      const Mat u = sample_tnn_unipotent(n, 11, mask);
      CHECK(u.is_lower_unitriangular());
      CHECK(semigroup_cell_of(u) == v);
      const ClassifyResult r = classify(sample_tnn_flag(n, 11, mask));
      CHECK(r.nonneg);
      CHECK(r.index == CellIndex{w0 * v, w0});
    }
  }
}

TEST_CASE("minor oracle") {
  CHECK(all_minors_nonneg(Mat::identity(3)));
  CHECK(all_minors_nonneg(gen_y(3, 1, 2) * gen_y(3, 2, 3) * gen_y(3, 1, 5)));
  CHECK_FALSE(all_minors_nonneg(gen_y(3, 1, 1) * gen_y(3, 1, -2)));
  // 2x2 minor negative, entries nonnegative
  CHECK_FALSE(all_minors_nonneg(Mat{{1, 0, 0}, {1, 1, 0}, {2, 1, 1}}));
  // sampled mode agrees on a product that is TNN
  const Mat u = sample_tnn_unipotent(5, 2, (std::uint64_t{1} << 10) - 1);
  CHECK(all_minors_nonneg(u, 300, 4));
}

TEST_CASE("semigroup_cell_of") {
  const WeylElt e = WeylElt::identity(3);
  const WeylElt w0 = longest_element(3);
  CHECK(semigroup_cell_of(Mat::identity(3)) == e);
  CHECK(semigroup_cell_of(gen_y(3, 1, Rat(7, 2))) == WeylElt::simple(3, 1));
  CHECK(semigroup_cell_of(gen_y(3, 1, 2) * gen_y(3, 2, 3) * gen_y(3, 1, 5)) == w0);
  CHECK(semigroup_cell_of(gen_y(2, 1, 2) * gen_y(2, 1, 3)) == WeylElt::simple(2, 1));
  try {
    semigroup_cell_of(gen_y(3, 1, 1) * gen_y(3, 1, -2));
    FAIL("expected NotTNN");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotTNN);
  }

  // rank-pattern oracle and independence of the reduced word
  std::mt19937_64 rng(6);
  for (const WeylElt& w : all_elements(4)) {
    for (const Word& word : all_reduced_words(w, 4)) {
      std::vector<Rat> params;
      for (std::size_t k = 0; k < word.letters.size(); ++k) params.push_back(random_positive_rat(rng));
      const Mat u = y_product(4, word, params);
      CHECK(semigroup_cell_of(u) == w);
      CHECK(oracle::cell_by_rank_pattern(u) == w.images());
    }
  }
}

TEST_CASE("audit_decomposition clean at small rank") {
  const AuditReport r2 = audit_decomposition(2, 5, 1);
  CHECK(r2.n == 2);
  CHECK(r2.cell_census.size() == 3);
  CHECK(r2.failures.empty());
  CHECK(r2.samples_total > 0);
  CHECK(r2.clean());

  const AuditReport r3 = audit_decomposition(3, 4, 7);
  CHECK(r3.cell_census.size() == 19);
  CHECK(r3.clean());
  for (const auto& [idx, dim] : r3.cell_census) CHECK(dim == length(idx.wp) - length(idx.w));
}

TEST_CASE("audit determinism and worker independence") {
  const Json a = to_json(audit_decomposition(3, 3, 42, 1));
  const Json b = to_json(audit_decomposition(3, 3, 42, 1));
  const Json c = to_json(audit_decomposition(3, 3, 42, 4));
  CHECK(a.dump() == b.dump());
  CHECK(a.dump() == c.dump());
  CHECK(a.dump() != to_json(audit_decomposition(3, 3, 43, 1)).dump());
}

TEST_CASE("audit_semigroup") {
  const AuditReport r2 = audit_semigroup(2, 5, 3);
  CHECK(r2.clean());
  CHECK(r2.samples_total > 0);
  const AuditReport r3 = audit_semigroup(3, 5, 3);
  CHECK(r3.clean());
  CHECK(to_json(r3).dump() == to_json(audit_semigroup(3, 5, 3)).dump());
}

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(audit_decomposition(5, 1, 0, 1, 4), Error);
  CHECK_THROWS_AS(audit_decomposition(0, 1, 0), Error);
}

TEST_CASE("report merge") {
  AuditReport a;
  a.n = 3;
  a.samples_total = 4;
  a.samples_passed = 4;
  AuditReport b;
  b.samples_total = 2;
  b.samples_passed = 1;
  b.failures.push_back({"x", "y", {}});
  a.merge(b);
  CHECK(a.samples_total == 6);
  CHECK(a.samples_passed == 5);
  CHECK(a.failures.size() == 1);
  CHECK_FALSE(a.clean());
}

}

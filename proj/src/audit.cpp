#include "rtnn/audit.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rtnn/error.hpp"
#include "rtnn/richardson.hpp"

namespace rtnn {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(seed ^ splitmix(a)) ^ b);
}

std::string cell_label(const CellIndex& idx) {
  return "(" + to_oneline(idx.w) + " | " + to_oneline(idx.wp) + ")";
}

// One unit of audit work; produces a partial report.
struct WorkItem {
  enum class Kind { Mask, RoundTrip } kind;
  std::uint64_t mask = 0;
  CellIndex cell;
};

void check(AuditReport& r, bool ok, std::string check_name, std::string detail,
           std::map<std::string, Mat> matrices = {}) {
  ++r.samples_total;
  if (ok) {
    ++r.samples_passed;
    return;
  }
  r.failures.push_back(AuditFailure{std::move(check_name), std::move(detail), std::move(matrices)});
}

AuditReport run_mask(int n, int samples, std::uint64_t seed, std::uint64_t mask, ChartCache& cache) {
  AuditReport r;
  const Word word = tnn_sampling_word(n);
  Word sub;
  for (std::size_t k = 0; k < word.size(); ++k)
    if (mask >> k & 1) sub.letters.push_back(word.letters[k]);
  const WeylElt v_expected = demazure_product(n, sub);
  const WeylElt w0 = longest_element(n);
  const CellIndex expected{w0 * v_expected, w0};

  for (int draw = 0; draw < samples; ++draw) {
    const std::uint64_t s = derive_seed(seed, mask, static_cast<std::uint64_t>(draw));
    const Mat u = sample_tnn_unipotent(n, s, mask);
    const BorelPt b = borel_from(u);
    const std::string where = "mask " + std::to_string(mask) + " draw " + std::to_string(draw);
    std::map<std::string, Mat> evidence{{"unipotent", u}, {"borel_rep", b.rep()}};

    WeylElt v;
    try {
      v = semigroup_cell_of(u);
    } catch (const Error& e) {
      check(r, false, "tnn_sample_cell", where + ": " + e.what(), evidence);
      continue;
    }
    check(r, v == v_expected, "tnn_sample_cell",
          where + ": cell " + to_oneline(v) + ", Demazure product " + to_oneline(v_expected), evidence);

    const ClassifyResult c = classify(b, WordStrategy::SmallestDescent, cache);
    check(r, c.nonneg, "tnn_sample_nonneg", where + ": reason " + c.reason, evidence);
    check(r, bruhat_leq(c.index.w, c.index.wp) &&
                 static_cast<int>(c.coords.size()) == length(c.index.wp) - length(c.index.w),
          "tnn_sample_shape", where + ": " + cell_label(c.index), evidence);
    check(r, c.index == expected, "tnn_sample_stratum",
          where + ": got " + cell_label(c.index) + ", expected " + cell_label(expected), evidence);
  }
  return r;
}

AuditReport run_round_trip(int samples, std::uint64_t seed, std::uint64_t item, const CellIndex& cell,
                           ChartCache& cache) {
  AuditReport r;
  const ChartPtr chart = cache.get(cell.w, cell.wp);
  for (int draw = 0; draw < samples; ++draw) {
    auto rng = make_rng(derive_seed(seed, item, 1), static_cast<std::uint64_t>(draw));
    std::vector<Rat> params;
    for (int k = 0; k < chart->dim(); ++k) params.push_back(random_positive_rat(rng));
    const std::string where = cell_label(cell) + " draw " + std::to_string(draw);
    try {
      const BorelPt b = eval_chart(*chart, params);
      const std::vector<Rat> back = invert_chart(*chart, b);
      check(r, back == params, "round_trip_params", where, {{"borel_rep", b.rep()}});
      check(r, eval_chart(*chart, back) == b, "round_trip_point", where, {{"borel_rep", b.rep()}});
    } catch (const Error& e) {
      check(r, false, "round_trip_error", where + ": " + e.what());
    }
  }
  return r;
}

}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Rat random_positive_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 10);
  const int p = d(rng);
  const int q = d(rng);
  Rat out(p, q);
  out.canonicalize();
  return out;
}

Rat random_nonzero_rat(std::mt19937_64& rng) {
  Rat q = random_positive_rat(rng);
  return (rng() & 1) ? Rat(-q) : q;
}

Word tnn_sampling_word(int n) { return reduced_word(longest_element(n)); }

Mat sample_tnn_unipotent(int n, std::uint64_t seed, std::uint64_t subset_mask) {
  const Word word = tnn_sampling_word(n);
  auto rng = make_rng(seed, subset_mask);
  Mat u = Mat::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k)
    if (subset_mask >> k & 1) u = u * gen_y(n, word.letters[k], random_positive_rat(rng));
  return u;
}

BorelPt sample_tnn_flag(int n, std::uint64_t seed, std::uint64_t subset_mask) {
  return borel_from(sample_tnn_unipotent(n, seed, subset_mask));
}

bool all_minors_nonneg(const Mat& m, int sampled, std::uint64_t seed) {
  const int n = m.size();
  auto subset = [n](unsigned mask) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) s.push_back(k + 1);
    return s;
  };
  if (sampled <= 0) {
    for (unsigned rows = 1; rows < (1u << n); ++rows)
      for (unsigned cols = 1; cols < (1u << n); ++cols) {
        if (__builtin_popcount(rows) != __builtin_popcount(cols)) continue;
        if (sgn(minor(m, subset(rows), subset(cols))) < 0) return false;
      }
    return true;
  }
  auto rng = make_rng(seed, 0x6d696e6f72ULL);
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
  std::uniform_int_distribution<int> size_dist(1, n);
  for (int trial = 0; trial < sampled; ++trial) {
    const int k = size_dist(rng);
    std::vector<int> rows = idx;
    std::vector<int> cols = idx;
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    rows.resize(static_cast<std::size_t>(k));
    cols.resize(static_cast<std::size_t>(k));
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (sgn(minor(m, rows, cols)) < 0) return false;
  }
  return true;
}

WeylElt semigroup_cell_of(const Mat& u) {
  if (!u.is_lower_unitriangular()) throw Error(ErrorCode::NotTNN, "matrix is not lower unitriangular");
  if (!all_minors_nonneg(u)) throw Error(ErrorCode::NotTNN, "matrix has a negative minor");
  return bruhat_factor_plus(u).w;
}

void AuditReport::merge(const AuditReport& other) {
  cell_census.insert(cell_census.end(), other.cell_census.begin(), other.cell_census.end());
  samples_total += other.samples_total;
  samples_passed += other.samples_passed;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

AuditReport audit_decomposition(int n, int samples, std::uint64_t seed, int workers, int max_rank) {
  AuditReport report;
  report.n = n;
  report.seed = seed;
  const auto pairs = bruhat_pairs(n, max_rank);
  ChartCache cache;

  for (const auto& [w, wp] : pairs) {
    const ChartPtr chart = cache.get(w, wp);
    report.cell_census.emplace_back(chart->index(), chart->dim());
    check(report, chart->dim() == length(wp) - length(w), "census_dim",
          "(" + to_oneline(w) + " | " + to_oneline(wp) + ") dim " + std::to_string(chart->dim()));
  }

  std::vector<WorkItem> items;
  const std::uint64_t masks = std::uint64_t{1} << tnn_sampling_word(n).size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) items.push_back({WorkItem::Kind::Mask, mask, {}});
  for (const auto& [w, wp] : pairs) items.push_back({WorkItem::Kind::RoundTrip, 0, CellIndex{w, wp}});

  std::vector<AuditReport> partial(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      const WorkItem& item = items[k];
      partial[k] = item.kind == WorkItem::Kind::Mask ? run_mask(n, samples, seed, item.mask, cache)
                                                     : run_round_trip(samples, seed, k, item.cell, cache);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(1, workers); ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& p : partial) report.merge(p);
  return report;
}

AuditReport audit_semigroup(int n, int samples, std::uint64_t seed, int max_rank) {
  if (n < 1 || n > max_rank)
    throw Error(ErrorCode::RankTooLarge, "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_rank));
  AuditReport report;
  report.n = n;
  report.seed = seed;
  // Exhaustive minors up to n = 4, sampled beyond.
  const int minor_samples = n <= 4 ? 0 : 500;
  const auto elements = all_elements(n);

  for (std::size_t e = 0; e < elements.size(); ++e) {
    const WeylElt& w = elements[e];
    const auto words = all_reduced_words(w, 2);
    for (std::size_t k = 0; k < words.size(); ++k) {
      for (int draw = 0; draw < samples; ++draw) {
        auto rng = make_rng(derive_seed(seed, e, k), static_cast<std::uint64_t>(draw));
        std::vector<Rat> params;
        for (std::size_t j = 0; j < words[k].size(); ++j) params.push_back(random_positive_rat(rng));
        const Mat u = y_product(n, words[k], params);
        const std::string where = to_oneline(w) + " word " + to_string(words[k]);
        check(report, all_minors_nonneg(u, minor_samples, rng()), "semigroup_minors", where, {{"unipotent", u}});
        WeylElt cell;
        try {
          cell = semigroup_cell_of(u);
        } catch (const Error& err) {
          check(report, false, "semigroup_cell", where + ": " + err.what(), {{"unipotent", u}});
          continue;
        }
        check(report, cell == w, "semigroup_cell", where + ": got " + to_oneline(cell), {{"unipotent", u}});
      }
    }
  }

  const WeylElt w0 = longest_element(n);
  const Word top = reduced_word(w0);
  for (int draw = 0; draw < samples; ++draw) {
    auto rng = make_rng(derive_seed(seed, 0x70726f64ULL, 0), static_cast<std::uint64_t>(draw));
    std::vector<Rat> p1;
    std::vector<Rat> p2;
    for (std::size_t j = 0; j < top.size(); ++j) p1.push_back(random_positive_rat(rng));
    for (std::size_t j = 0; j < top.size(); ++j) p2.push_back(random_positive_rat(rng));
    const Mat u = y_product(n, top, p1) * y_product(n, top, p2);
    const std::string where = "product draw " + std::to_string(draw);
    check(report, all_minors_nonneg(u, minor_samples, rng()), "product_minors", where, {{"unipotent", u}});
    try {
      const WeylElt cell = semigroup_cell_of(u);
      check(report, cell == w0, "product_cell", where + ": got " + to_oneline(cell), {{"unipotent", u}});
    } catch (const Error& err) {
      check(report, false, "product_cell", where + ": " + err.what(), {{"unipotent", u}});
    }

    // Arbitrary positive elements multiply to a TNN element; its cell is not asserted.
    const WeylElt a = elements[rng() % elements.size()];
    const WeylElt b = elements[rng() % elements.size()];
    const Word wa = reduced_word(a);
    const Word wb = reduced_word(b);
    std::vector<Rat> pa;
    std::vector<Rat> pb;
    for (std::size_t j = 0; j < wa.size(); ++j) pa.push_back(random_positive_rat(rng));
    for (std::size_t j = 0; j < wb.size(); ++j) pb.push_back(random_positive_rat(rng));
    const Mat m = y_product(n, wa, pa) * y_product(n, wb, pb);
    check(report, all_minors_nonneg(m, minor_samples, rng()), "product_minors",
          where + " " + to_oneline(a) + " * " + to_oneline(b), {{"unipotent", m}});
  }
  return report;
}

}  // namespace rtnn

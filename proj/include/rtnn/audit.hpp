#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rtnn/exact_linalg.hpp"
#include "rtnn/flag.hpp"
#include "rtnn/weyl.hpp"

namespace rtnn {

/// Deterministic stream keyed by (seed, stream index).
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream);

/// p/q with p, q uniform in 1..10.
Rat random_positive_rat(std::mt19937_64& rng);
/// random_positive_rat with a uniformly random sign.
Rat random_nonzero_rat(std::mt19937_64& rng);

/// The reduced word of w0 whose subwords sample_tnn_flag selects from.
Word tnn_sampling_word(int n);

/// y-product over the masked letters of tnn_sampling_word(n) (bit k selects
/// letter k) with random positive parameters, applied to B+.
BorelPt sample_tnn_flag(int n, std::uint64_t seed, std::uint64_t subset_mask);
/// The lower unitriangular matrix behind sample_tnn_flag.
Mat sample_tnn_unipotent(int n, std::uint64_t seed, std::uint64_t subset_mask);

/// Every minor is >= 0: all row/column subsets, or `sampled` random ones when
/// sampled > 0.
bool all_minors_nonneg(const Mat& m, int sampled = 0, std::uint64_t seed = 0);

/// Bruhat cell of a lower unitriangular TNN matrix. Throws NotTNN.
WeylElt semigroup_cell_of(const Mat& u);

struct AuditFailure {
  std::string check;
  std::string detail;
  std::map<std::string, Mat> matrices;
};

struct AuditReport {
  int n = 0;
  std::vector<std::pair<CellIndex, int>> cell_census;
  long samples_total = 0;
  long samples_passed = 0;
  std::vector<AuditFailure> failures;
  std::uint64_t seed = 0;

  bool clean() const { return failures.empty() && samples_passed == samples_total; }
  /// Concatenates censuses, sums counters, appends failures.
  void merge(const AuditReport& other);
};

/// Census, TNN sampling over all subword masks, and chart round trips.
/// Work items are spread over `workers` threads; the result does not depend on it.
AuditReport audit_decomposition(int n, int samples, std::uint64_t seed, int workers = 1,
                                int max_rank = kDefaultMaxRank);

/// Minor nonnegativity and cell recovery for positive y-products.
AuditReport audit_semigroup(int n, int samples, std::uint64_t seed,
                            int max_rank = kDefaultMaxRank);

}  // namespace rtnn

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "rtnn/exact_linalg.hpp"
#include "rtnn/flag.hpp"
#include "rtnn/weyl.hpp"

namespace rtnn {

// Maps between Bruhat cells attached to a length-additive product w*v.
//
// phi_down(w, v, B) is the unique P with B- --w--> P --v--> B, defined on
// points with pos(B-, B) = wv. phi_up(w, v, B) is the unique P with
// B+ --w0 w v--> P --v^-1--> B, defined on points with pos(B+, B) = w0 w.
// Both throw LengthNotAdditive or WrongCell when their domain conditions fail.
BorelPt phi_down(const WeylElt& w, const WeylElt& v, const BorelPt& b);
BorelPt phi_up(const WeylElt& w, const WeylElt& v, const BorelPt& b);

/// phi_down(w' s, s, B) restricted to R_{w,w'}; requires w <= ws and w's <= w'.
BorelPt pi(const WeylElt& w, const WeylElt& wp, int s, const BorelPt& b);

/// Reduced word of w0 w^{-1} w0 (the conjugating element used by psi).
Word conjugator_word(const WeylElt& w, WordStrategy strategy = WordStrategy::SmallestDescent);
/// y along conjugator_word(w) with every parameter equal to 1.
Mat conjugator(const WeylElt& w, WordStrategy strategy = WordStrategy::SmallestDescent);

/// Index i' with s_{i'} = w0 s_i w0.
inline int opposite_index(int n, int i) { return n - i; }

/// Lifts a point of R_{w,w's} along the s-line to R_{w,w'}. Throws
/// ZeroParameter, NotInBigCell, or NotComparable.
BorelPt psi(const WeylElt& w, const WeylElt& wp, int s, const BorelPt& b, const Rat& a,
            WordStrategy strategy = WordStrategy::SmallestDescent);

/// Left inverse of psi. Throws NotInChartImage or NotInBigCell when b is not
/// in the image.
std::pair<BorelPt, Rat> psi_inv(const WeylElt& w, const WeylElt& wp, int s, const BorelPt& b,
                                WordStrategy strategy = WordStrategy::SmallestDescent);

/// Positive-semigroup charts for R_{1,w'} and R_{w,w0}.
struct KeyChart {
  enum class Kind { Upper, Lower };

  Kind kind;
  int n;
  Word word;

  int dim() const { return static_cast<int>(word.size()); }
  /// Throws ParamCountMismatch.
  BorelPt operator()(std::span<const Rat> params) const;
};

/// Word of w0 w' w0; evaluates x_{i_1}(a_1)...x_{i_k}(a_k) * B-.
KeyChart key_chart_upper(const WeylElt& wp);
/// Word of w0 w; evaluates y_{j_1}(b_1)...y_{j_m}(b_m) * B+.
KeyChart key_chart_lower(const WeylElt& w);

/// The single point of R_{w,w}. Throws InternalInconsistency if neither
/// candidate w0*w*B+ nor w0*w^{-1}*B+ lies in R_{w,w}.
BorelPt base_point(const WeylElt& w);

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// Recursive parametrization (R*)^dim -> R_{w,w'}. Immutable once built.
class Chart {
 public:
  struct Base {
    BorelPt point;
  };
  struct Peel {
    WeylElt v;
    Word word_v;
    ChartPtr inner;
  };
  struct Extend {
    int s;
    Word y_word;
    Mat y;
    Mat y_inv;
    ChartPtr inner;
  };
  using Node = std::variant<Base, Peel, Extend>;

  Chart(CellIndex index, int dim, WordStrategy strategy, Node node)
      : index_(std::move(index)), dim_(dim), strategy_(strategy), node_(std::move(node)) {}

  const CellIndex& index() const { return index_; }
  int dim() const { return dim_; }
  int rank() const { return index_.w.rank(); }
  WordStrategy strategy() const { return strategy_; }
  const Node& node() const { return node_; }

  /// "base", "peel", or "extend" nodes from the outside in, e.g. "P E E B".
  std::string shape() const;

 private:
  CellIndex index_;
  int dim_;
  WordStrategy strategy_;
  Node node_;
};

/// Throws NotComparable if w is not <= w'.
ChartPtr build_chart(const WeylElt& w, const WeylElt& wp,
                     WordStrategy strategy = WordStrategy::SmallestDescent);

/// Throws ParamCountMismatch or ZeroParameter. Coordinates are ordered with the
/// innermost Extend first.
BorelPt eval_chart(const Chart& chart, std::span<const Rat> params);

/// Throws WrongStratum, NotInChartImage, or NotInBigCell.
std::vector<Rat> invert_chart(const Chart& chart, const BorelPt& b);

struct ClassifyResult {
  CellIndex index;
  std::vector<Rat> coords;
  bool nonneg = false;
  std::string reason;
};

/// Charts keyed by (n, w, w', strategy). Readers share; a miss builds outside
/// the lock and the first insert wins.
class ChartCache {
 public:
  ChartPtr get(const WeylElt& w, const WeylElt& wp,
               WordStrategy strategy = WordStrategy::SmallestDescent);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, std::vector<int>, std::vector<int>, int>;
  mutable std::shared_mutex mutex_;
  std::map<Key, ChartPtr> charts_;
};

ChartCache& default_chart_cache();

/// Never throws for a well-formed point; failures land in reason.
ClassifyResult classify(const BorelPt& b, WordStrategy strategy = WordStrategy::SmallestDescent,
                        ChartCache& cache = default_chart_cache());

}  // namespace rtnn

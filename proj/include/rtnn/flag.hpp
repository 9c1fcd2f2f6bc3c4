#pragma once

#include <utility>

#include "rtnn/exact_linalg.hpp"
#include "rtnn/weyl.hpp"

namespace rtnn {

/// A point g*B+ of the flag variety, stored in canonical column-echelon form.
class BorelPt {
 public:
  BorelPt() = default;

  const Mat& rep() const { return rep_; }
  int rank() const { return rep_.size(); }

  friend bool operator==(const BorelPt&, const BorelPt&) = default;

 private:
  friend BorelPt borel_from(const Mat& g);
  explicit BorelPt(Mat rep) : rep_(std::move(rep)) {}

  Mat rep_;
};

/// Label (w, w') of the open Richardson stratum containing a point.
struct CellIndex {
  WeylElt w;
  WeylElt wp;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Canonical representative of the coset g*B+. Throws Singular.
BorelPt borel_from(const Mat& g);

BorelPt borel_plus(int n);
BorelPt borel_minus(int n);

/// (g * rep) * B+. Throws Singular.
BorelPt act(const Mat& g, const BorelPt& b);

/// The w with B1 --w--> B2, read off the intersection-dimension array.
WeylElt relative_position(const BorelPt& b1, const BorelPt& b2);

/// w = w0 * pos(B+, B), w' = pos(B-, B). Throws InternalInconsistency if w > w'.
CellIndex stratum(const BorelPt& b);

/// (l(w), l(w') - l(w)) for the stratum of b.
std::pair<int, int> codim_check(const BorelPt& b);

}  // namespace rtnn

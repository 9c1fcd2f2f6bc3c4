#include "rtnn/flag.hpp"

#include <vector>

#include "rtnn/error.hpp"

namespace rtnn {

BorelPt borel_from(const Mat& g) {
  const int n = g.size();
  Mat m = g;
  std::vector<int> pivot_row(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= n; ++j) {
    // Clear earlier pivot rows; increasing order keeps cleared rows at zero.
    for (int jp = 1; jp < j; ++jp) {
      const int p = pivot_row[static_cast<std::size_t>(jp)];
      if (sgn(m(p, j)) == 0) continue;
      const Rat c = m(p, j);
      for (int r = 1; r <= n; ++r) m(r, j) -= c * m(r, jp);
    }
    int piv = n;
    while (piv >= 1 && sgn(m(piv, j)) == 0) --piv;
    if (piv < 1) throw Error(ErrorCode::Singular, "matrix is not invertible");
    pivot_row[static_cast<std::size_t>(j)] = piv;
    const Rat p = m(piv, j);
    for (int r = 1; r <= n; ++r) m(r, j) /= p;
  }
  // det(m) is the sign of the pivot permutation; fold it into the last column.
  const Rat det = m.determinant();
  if (det != 1)
    for (int r = 1; r <= n; ++r) m(r, n) *= det;
  return BorelPt(std::move(m));
}

BorelPt borel_plus(int n) { return borel_from(Mat::identity(n)); }

BorelPt borel_minus(int n) { return borel_from(rep_weyl(longest_element(n))); }

BorelPt act(const Mat& g, const BorelPt& b) { return borel_from(g * b.rep()); }

WeylElt relative_position(const BorelPt& b1, const BorelPt& b2) {
  const int n = b1.rank();
  if (b2.rank() != n) throw Error(ErrorCode::RankMismatch, "flags of different rank");
  const Mat& a = b1.rep();
  const Mat& b = b2.rep();
  // r[i][j] = dim(first i columns of a  cap  first j columns of b).
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n + 1),
                                  std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int cols = i + j;
      std::vector<Rat> block(static_cast<std::size_t>(n * cols));
      for (int row = 1; row <= n; ++row) {
        for (int c = 1; c <= i; ++c) block[static_cast<std::size_t>((row - 1) * cols + c - 1)] = a(row, c);
        for (int c = 1; c <= j; ++c) block[static_cast<std::size_t>((row - 1) * cols + i + c - 1)] = b(row, c);
      }
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i + j - rank_of(std::move(block), n, cols);
    }
  }
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const auto I = static_cast<std::size_t>(i);
      const auto J = static_cast<std::size_t>(j);
      if (r[I][J] - r[I - 1][J] - r[I][J - 1] + r[I - 1][J - 1] == 1) images[J - 1] = i;
    }
  }
  return WeylElt(std::move(images));
}

CellIndex stratum(const BorelPt& b) {
  const int n = b.rank();
  const WeylElt w0 = longest_element(n);
  CellIndex idx{w0 * relative_position(borel_plus(n), b), relative_position(borel_minus(n), b)};
  if (!bruhat_leq(idx.w, idx.wp))
    throw Error(ErrorCode::InternalInconsistency,
                "stratum (" + to_oneline(idx.w) + ", " + to_oneline(idx.wp) + ") is not Bruhat-ordered");
  return idx;
}

std::pair<int, int> codim_check(const BorelPt& b) {
  const CellIndex idx = stratum(b);
  const int lw = length(idx.w);
  return {lw, length(idx.wp) - lw};
}

}  // namespace rtnn

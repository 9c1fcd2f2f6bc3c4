#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rtnn/weyl.hpp"

namespace rtnn {

using Rat = mpq_class;

/// Square matrix of exact rationals. Indices are 1-based in the public API,
/// matching the (i, i+1) conventions of the generators.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n);  // zero matrix
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(int n);

  int size() const { return n_; }

  Rat& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rat& operator()(int i, int j) const { return data_[index(i, j)]; }

  Mat transpose() const;
  /// Throws Singular.
  Mat inverse() const;
  Rat determinant() const;
  int rank() const;

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_upper_unitriangular() const;
  bool is_lower_unitriangular() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }

  int n_ = 0;
  std::vector<Rat> data_;
};

/// Throws ShapeMismatch.
Mat operator*(const Mat& a, const Mat& b);

/// Rank of a dense row-major block with `rows` rows and `cols` columns.
int rank_of(std::vector<Rat> block, int rows, int cols);

/// x_i(a): identity plus a at (i, i+1).
Mat gen_x(int n, int i, const Rat& a);
/// y_i(a): identity plus a at (i+1, i).
Mat gen_y(int n, int i, const Rat& a);

/// Pinned representative y_i(1) x_i(-1) y_i(1); its (i, i+1) block is [[0,-1],[1,0]].
Mat rep_simple(int n, int i);
/// Product of rep_simple along reduced_word(w).
Mat rep_weyl(const WeylElt& w);
/// Product of rep_simple along an arbitrary word.
Mat rep_word(int n, const Word& word);

/// y_{i_1}(a_1) ... y_{i_k}(a_k). Throws ParamCountMismatch.
Mat y_product(int n, const Word& word, std::span<const Rat> params);
Mat x_product(int n, const Word& word, std::span<const Rat> params);

/// Determinant of the submatrix on the given (1-based) rows and columns.
Rat minor(const Mat& m, std::span<const int> rows, std::span<const int> cols);

struct BruhatFactors {
  Mat b1;  // upper unitriangular
  WeylElt w;
  Mat b2;  // upper triangular
};

/// g = b1 * rep_weyl(w) * b2. Throws Singular.
BruhatFactors bruhat_factor_plus(const Mat& g);

struct BigCellFactors {
  Mat x;     // upper unitriangular
  Mat rest;  // lower triangular
};

/// Writes g * rep_weyl(w0)^{-1} = x * rest, so that the flag of g is x
/// applied to the opposite flag. Throws NotInBigCell.
BigCellFactors opposite_big_cell_factor(const Mat& g);

// Rationals as "p/q" or "p".
std::string to_string(const Rat& q);
/// Throws ParseError.
Rat parse_rat(const std::string& text);

}  // namespace rtnn

#include "rtnn/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "rtnn/error.hpp"

namespace rtnn {

namespace {

void require_index(int n, int i) {
  if (i < 1 || i >= n)
    throw Error(ErrorCode::IndexOutOfRange,
                "generator index " + std::to_string(i) + " for n = " + std::to_string(n));
}

}  // namespace

Mat::Mat(int n) : n_(n), data_(static_cast<std::size_t>(n * n), Rat(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows)
    : Mat(static_cast<int>(rows.size())) {
  int i = 1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    int j = 1;
    for (const auto& x : row) (*this)(i, j++) = x;
    ++i;
  }
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::inverse() const {
  // Gauss-Jordan on [A | I].
  Mat a = *this;
  Mat inv = identity(n_);
  for (int col = 1; col <= n_; ++col) {
    int piv = col;
    while (piv <= n_ && sgn(a(piv, col)) == 0) ++piv;
    if (piv > n_) throw Error(ErrorCode::Singular, "matrix is not invertible");
    if (piv != col) {
      for (int j = 1; j <= n_; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rat p = a(col, col);
    for (int j = 1; j <= n_; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 1; r <= n_; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rat f = a(r, col);
      for (int j = 1; j <= n_; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rat Mat::determinant() const {
  Mat a = *this;
  Rat det = 1;
  for (int col = 1; col <= n_; ++col) {
    int piv = col;
    while (piv <= n_ && sgn(a(piv, col)) == 0) ++piv;
    if (piv > n_) return Rat(0);
    if (piv != col) {
      for (int j = 1; j <= n_; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r <= n_; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rat f = a(r, col) / a(col, col);
      for (int j = col; j <= n_; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

int Mat::rank() const { return rank_of(data_, n_, n_); }

bool Mat::is_upper_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool Mat::is_lower_triangular() const { return transpose().is_upper_triangular(); }

bool Mat::is_upper_unitriangular() const {
  if (!is_upper_triangular()) return false;
  for (int i = 1; i <= n_; ++i)
    if ((*this)(i, i) != 1) return false;
  return true;
}

bool Mat::is_lower_unitriangular() const { return transpose().is_upper_unitriangular(); }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "matrix sizes differ");
  const int n = a.size();
  Mat c(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 1; j <= n; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

int rank_of(std::vector<Rat> block, int rows, int cols) {
  auto at = [&](int i, int j) -> Rat& { return block[static_cast<std::size_t>(i * cols + j)]; };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    while (piv < rows && sgn(at(piv, col)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(at(r, col)) == 0) continue;
      const Rat f = at(r, col) / at(rank, col);
      for (int j = col; j < cols; ++j) at(r, j) -= f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Mat gen_x(int n, int i, const Rat& a) {
  require_index(n, i);
  Mat m = Mat::identity(n);
  m(i, i + 1) = a;
  return m;
}

Mat gen_y(int n, int i, const Rat& a) {
  require_index(n, i);
  Mat m = Mat::identity(n);
  m(i + 1, i) = a;
  return m;
}

Mat rep_simple(int n, int i) { return gen_y(n, i, 1) * gen_x(n, i, -1) * gen_y(n, i, 1); }

Mat rep_word(int n, const Word& word) {
  Mat m = Mat::identity(n);
  for (int i : word.letters) m = m * rep_simple(n, i);
  return m;
}

Mat rep_weyl(const WeylElt& w) { return rep_word(w.rank(), reduced_word(w)); }

Mat y_product(int n, const Word& word, std::span<const Rat> params) {
  if (params.size() != word.size())
    throw Error(ErrorCode::ParamCountMismatch, "expected " + std::to_string(word.size()) +
                                                   " parameters, got " + std::to_string(params.size()));
  Mat m = Mat::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k) m = m * gen_y(n, word.letters[k], params[k]);
  return m;
}

Mat x_product(int n, const Word& word, std::span<const Rat> params) {
  if (params.size() != word.size())
    throw Error(ErrorCode::ParamCountMismatch, "expected " + std::to_string(word.size()) +
                                                   " parameters, got " + std::to_string(params.size()));
  Mat m = Mat::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k) m = m * gen_x(n, word.letters[k], params[k]);
  return m;
}

Rat minor(const Mat& m, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size() || rows.empty())
    throw Error(ErrorCode::ShapeMismatch, "minor needs equally many rows and columns");
  const int k = static_cast<int>(rows.size());
  for (int r : rows)
    if (r < 1 || r > m.size()) throw Error(ErrorCode::ShapeMismatch, "row index out of range");
  for (int c : cols)
    if (c < 1 || c > m.size()) throw Error(ErrorCode::ShapeMismatch, "column index out of range");
  Mat sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i + 1, j + 1) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
  return sub.determinant();
}

BruhatFactors bruhat_factor_plus(const Mat& g) {
  const int n = g.size();
  // Invariant: g = b1 * m * b2 throughout.
  Mat b1 = Mat::identity(n);
  Mat m = g;
  Mat b2 = Mat::identity(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int piv = n;
    while (piv >= 1 && sgn(m(piv, j)) == 0) --piv;
    if (piv < 1) throw Error(ErrorCode::Singular, "matrix is not invertible");
    images[static_cast<std::size_t>(j - 1)] = piv;
    const Rat p = m(piv, j);
    // Clear above the pivot: row_k -= c row_piv for k < piv (upper unitriangular on the left).
    for (int k = 1; k < piv; ++k) {
      if (sgn(m(k, j)) == 0) continue;
      const Rat c = m(k, j) / p;
      for (int l = 1; l <= n; ++l) m(k, l) -= c * m(piv, l);
      for (int r = 1; r <= n; ++r) b1(r, piv) += c * b1(r, k);
    }
    // Clear right of the pivot: col_l -= c col_j for l > j (upper unitriangular on the right).
    for (int l = j + 1; l <= n; ++l) {
      if (sgn(m(piv, l)) == 0) continue;
      const Rat c = m(piv, l) / p;
      for (int r = 1; r <= n; ++r) m(r, l) -= c * m(r, j);
      for (int r = 1; r <= n; ++r) b2(j, r) += c * b2(l, r);
    }
  }
  WeylElt w(std::move(images));
  // m is monomial with the pattern of w; m = rep_weyl(w) * t with t diagonal.
  const Mat wdot = rep_weyl(w);
  Mat t(n);
  for (int j = 1; j <= n; ++j) t(j, j) = m(w(j), j) / wdot(w(j), j);
  BruhatFactors out{std::move(b1), std::move(w), t * b2};
  if (!(out.b1 * wdot * out.b2 == g))
    throw Error(ErrorCode::InternalInconsistency, "Bruhat factorization failed to reconstruct input");
  return out;
}

BigCellFactors opposite_big_cell_factor(const Mat& g) {
  const int n = g.size();
  // Invariant: h = x * rest, h = g * rep_weyl(w0)^{-1}.
  const Mat h = g * rep_weyl(longest_element(n)).inverse();
  Mat x = Mat::identity(n);
  Mat rest = h;
  for (int j = n; j >= 1; --j) {
    if (sgn(rest(j, j)) == 0)
      throw Error(ErrorCode::NotInBigCell, "trailing principal minor of order " +
                                               std::to_string(n - j + 1) + " vanishes");
    const Rat p = rest(j, j);
    for (int k = 1; k < j; ++k) {
      if (sgn(rest(k, j)) == 0) continue;
      const Rat c = rest(k, j) / p;
      for (int l = 1; l <= n; ++l) rest(k, l) -= c * rest(j, l);
      for (int r = 1; r <= n; ++r) x(r, j) += c * x(r, k);
    }
  }
  return BigCellFactors{std::move(x), std::move(rest)};
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
  const auto bad = [&] { return Error(ErrorCode::ParseError, "bad rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw bad();
  Rat out(p, q);
  out.canonicalize();
  return out;
}

}  // namespace rtnn

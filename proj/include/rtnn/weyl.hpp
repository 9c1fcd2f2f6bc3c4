#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rtnn {

/// Element of the symmetric group S_n in one-line notation (1-based images).
class WeylElt {
 public:
  WeylElt() = default;
  /// Throws ParseError unless `images` is a permutation of 1..n.
  explicit WeylElt(std::vector<int> images);
  WeylElt(std::initializer_list<int> images);

  static WeylElt identity(int n);
  /// The simple transposition s_i swapping i and i+1.
  static WeylElt simple(int n, int i);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  WeylElt inverse() const;
  bool is_identity() const;

  friend bool operator==(const WeylElt&, const WeylElt&) = default;
  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;

 private:
  std::vector<int> images_;
};

/// Sequence of simple-reflection indices; letter i stands for s_i.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

enum class WordStrategy { SmallestDescent, LargestDescent };

/// Composition: (u*v)(k) = u(v(k)). Throws RankMismatch.
WeylElt multiply(const WeylElt& u, const WeylElt& v);
WeylElt operator*(const WeylElt& u, const WeylElt& v);

/// w * s_i, i.e. swap positions i and i+1 of the one-line notation.
WeylElt times_simple(const WeylElt& w, int i);

int length(const WeylElt& w);
WeylElt longest_element(int n);

/// Product of the letters, left to right.
WeylElt word_product(int n, const Word& word);

/// Canonical reduced word, built by repeatedly stripping a right descent
/// (the smallest one by default).
Word reduced_word(const WeylElt& w,
                  WordStrategy strategy = WordStrategy::SmallestDescent);

/// Every reduced word of w in lexicographic order, stopping after `limit`.
std::vector<Word> all_reduced_words(const WeylElt& w, std::size_t limit = 64);

/// All n! permutations in lexicographic order.
std::vector<WeylElt> all_elements(int n);

/// Bruhat order via the tableau (rank-matrix) criterion.
bool bruhat_leq(const WeylElt& u, const WeylElt& w);

inline constexpr int kDefaultMaxRank = 6;

/// All pairs (w, w') with w <= w'. Ordered by w lexicographically, then w'.
std::vector<std::pair<WeylElt, WeylElt>> bruhat_pairs(int n, int max_rank = kDefaultMaxRank);

struct PeelResult {
  WeylElt v;
  Word word_v;
};

/// Greedily extends v by simple reflections that lengthen both w*v and
/// w'*v. SmallestDescent tries s_1 first; LargestDescent tries s_{n-1} first.
PeelResult peel(const WeylElt& w, const WeylElt& wp,
                WordStrategy strategy = WordStrategy::SmallestDescent);

/// Smallest i with l(w s_i) > l(w) and l(w' s_i) < l(w').
int find_descent_pair(const WeylElt& w, const WeylElt& wp);

/// Demazure (0-Hecke) product of a possibly non-reduced word.
WeylElt demazure_product(int n, const Word& word);

// "2,3,1"
std::string to_oneline(const WeylElt& w);
WeylElt parse_oneline(const std::string& text);
// "[1,2,1]"
std::string to_string(const Word& word);
Word parse_word(const std::string& text);
/// Accepts "s1 s2", "s1s2", "1 2", or "[1,2]". Empty text is the identity.
WeylElt parse_reflection_word(int n, const std::string& text);

}  // namespace rtnn

#include "rtnn/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "rtnn/error.hpp"

namespace rtnn {

namespace {

void require_same_rank(const WeylElt& u, const WeylElt& v) {
  if (u.rank() != v.rank())
    throw Error(ErrorCode::RankMismatch,
                "ranks " + std::to_string(u.rank()) + " and " + std::to_string(v.rank()));
}

bool is_right_descent(const WeylElt& w, int i) { return w(i) > w(i + 1); }

void reduced_words_rec(const WeylElt& w, std::vector<int>& suffix, std::vector<Word>& out,
                       std::size_t limit) {
  if (out.size() >= limit) return;
  if (w.is_identity()) {
    out.push_back(Word{{suffix.rbegin(), suffix.rend()}});
    return;
  }
  for (int i = 1; i < w.rank(); ++i) {
    if (!is_right_descent(w, i)) continue;
    suffix.push_back(i);
    reduced_words_rec(times_simple(w, i), suffix, out, limit);
    suffix.pop_back();
  }
}

}  // namespace

WeylElt::WeylElt(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > rank() || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::ParseError, "not a permutation of 1.." + std::to_string(rank()));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

WeylElt::WeylElt(std::initializer_list<int> images) : WeylElt(std::vector<int>(images)) {}

WeylElt WeylElt::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return WeylElt(std::move(images));
}

WeylElt WeylElt::simple(int n, int i) {
  if (i < 1 || i >= n)
    throw Error(ErrorCode::IndexOutOfRange, "s_" + std::to_string(i) + " in S_" + std::to_string(n));
  return times_simple(identity(n), i);
}

WeylElt WeylElt::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= rank(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return WeylElt(std::move(inv));
}

bool WeylElt::is_identity() const {
  for (int k = 1; k <= rank(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

WeylElt multiply(const WeylElt& u, const WeylElt& v) {
  require_same_rank(u, v);
  std::vector<int> out(static_cast<std::size_t>(u.rank()));
  for (int k = 1; k <= u.rank(); ++k) out[static_cast<std::size_t>(k - 1)] = u(v(k));
  return WeylElt(std::move(out));
}

WeylElt operator*(const WeylElt& u, const WeylElt& v) { return multiply(u, v); }

WeylElt times_simple(const WeylElt& w, int i) {
  if (i < 1 || i >= w.rank())
    throw Error(ErrorCode::IndexOutOfRange, "s_" + std::to_string(i));
  std::vector<int> images = w.images();
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return WeylElt(std::move(images));
}

int length(const WeylElt& w) {
  int inversions = 0;
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j)
      if (w(i) > w(j)) ++inversions;
  return inversions;
}

WeylElt longest_element(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = n - k;
  return WeylElt(std::move(images));
}

WeylElt word_product(int n, const Word& word) {
  WeylElt w = WeylElt::identity(n);
  for (int i : word.letters) w = times_simple(w, i);
  return w;
}

Word reduced_word(const WeylElt& w, WordStrategy strategy) {
  std::vector<int> stripped;
  WeylElt cur = w;
  while (!cur.is_identity()) {
    int pick = 0;
    if (strategy == WordStrategy::SmallestDescent) {
      for (int i = 1; i < cur.rank() && pick == 0; ++i)
        if (is_right_descent(cur, i)) pick = i;
    } else {
      for (int i = cur.rank() - 1; i >= 1 && pick == 0; --i)
        if (is_right_descent(cur, i)) pick = i;
    }
    stripped.push_back(pick);
    cur = times_simple(cur, pick);
  }
  // Letters were removed from the right end.
  return Word{{stripped.rbegin(), stripped.rend()}};
}

std::vector<Word> all_reduced_words(const WeylElt& w, std::size_t limit) {
  std::vector<Word> out;
  std::vector<int> suffix;
  reduced_words_rec(w, suffix, out, limit);
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return a.letters < b.letters; });
  return out;
}

std::vector<WeylElt> all_elements(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<WeylElt> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w) {
  require_same_rank(u, w);
  const int n = u.rank();
  // u <= w iff #{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j} for all i, j.
  for (int j = 1; j <= n; ++j) {
    int cu = 0;
    int cw = 0;
    for (int i = 1; i <= n; ++i) {
      if (u(i) >= j) ++cu;
      if (w(i) >= j) ++cw;
      if (cu > cw) return false;
    }
  }
  return true;
}

std::vector<std::pair<WeylElt, WeylElt>> bruhat_pairs(int n, int max_rank) {
  if (n < 1 || n > max_rank)
    throw Error(ErrorCode::RankTooLarge,
                "n = " + std::to_string(n) + " exceeds bound " + std::to_string(max_rank));
  const auto elements = all_elements(n);
  std::vector<std::pair<WeylElt, WeylElt>> out;
  for (const auto& w : elements)
    for (const auto& wp : elements)
      if (bruhat_leq(w, wp)) out.emplace_back(w, wp);
  return out;
}

PeelResult peel(const WeylElt& w, const WeylElt& wp, WordStrategy strategy) {
  if (!bruhat_leq(w, wp)) throw Error(ErrorCode::NotComparable, to_oneline(w) + " vs " + to_oneline(wp));
  const int n = w.rank();
  PeelResult out{WeylElt::identity(n), {}};
  WeylElt a = w;
  WeylElt b = wp;
  for (;;) {
    int pick = 0;
    for (int step = 0; step < n - 1 && pick == 0; ++step) {
      const int i = strategy == WordStrategy::SmallestDescent ? step + 1 : n - 1 - step;
      if (!is_right_descent(a, i) && !is_right_descent(b, i)) pick = i;
    }
    if (pick == 0) break;
    a = times_simple(a, pick);
    b = times_simple(b, pick);
    out.v = times_simple(out.v, pick);
    out.word_v.letters.push_back(pick);
  }
  return out;
}

int find_descent_pair(const WeylElt& w, const WeylElt& wp) {
  require_same_rank(w, wp);
  for (int i = 1; i < w.rank(); ++i)
    if (!is_right_descent(w, i) && is_right_descent(wp, i)) return i;
  throw Error(ErrorCode::NoDescentPair, to_oneline(w) + " vs " + to_oneline(wp));
}

WeylElt demazure_product(int n, const Word& word) {
  WeylElt w = WeylElt::identity(n);
  for (int i : word.letters)
    if (!is_right_descent(w, i)) w = times_simple(w, i);
  return w;
}

std::string to_oneline(const WeylElt& w) {
  std::string out;
  for (int k = 1; k <= w.rank(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(w(k));
  }
  return out;
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      cur += c;
    } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '\t' || c == 's') {
      flush();
    } else {
      throw Error(ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
    }
  }
  flush();
  return out;
}

}  // namespace

WeylElt parse_oneline(const std::string& text) {
  if (text.find('s') != std::string::npos)
    throw Error(ErrorCode::ParseError, "one-line notation expected: " + text);
  return WeylElt(parse_ints(text));
}

std::string to_string(const Word& word) {
  std::string out = "[";
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(word.letters[k]);
  }
  return out + "]";
}

Word parse_word(const std::string& text) { return Word{parse_ints(text)}; }

WeylElt parse_reflection_word(int n, const std::string& text) {
  const Word word = parse_word(text);
  for (int i : word.letters)
    if (i < 1 || i >= n) throw Error(ErrorCode::ParseError, "s_" + std::to_string(i) + " out of range");
  return word_product(n, word);
}

}  // namespace rtnn

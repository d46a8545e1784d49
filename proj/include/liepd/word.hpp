#ifndef LIEPD_WORD_HPP
#define LIEPD_WORD_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace liepd {

/// Index of a generator in its pool (x1, x2, ... or y1, y2, ...). Pool
/// indices start at 1; the order of letters is the order of indices.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Shorter words first, then lexicographic on letters.
struct GradedLex {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// A finite ordered set of pool indices.
class Alphabet {
public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Letter> letters) : letters_(letters) { normalize(); }
  explicit Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    normalize();
  }

  /// {1, ..., n}
  static Alphabet first(std::size_t n) {
    std::vector<Letter> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = static_cast<Letter>(i + 1);
    return Alphabet(std::move(v));
  }

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool contains(Letter l) const {
    return std::binary_search(letters_.begin(), letters_.end(), l);
  }
  bool contains(const Word &w) const {
    return std::all_of(w.begin(), w.end(), [&](Letter l) { return contains(l); });
  }
  bool is_subset_of(const Alphabet &other) const {
    return std::includes(other.letters_.begin(), other.letters_.end(), letters_.begin(),
                         letters_.end());
  }
  Letter max_letter() const { return letters_.empty() ? 0 : letters_.back(); }

  Alphabet united(const Alphabet &o) const {
    std::vector<Letter> v;
    std::set_union(letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end(),
                   std::back_inserter(v));
    return Alphabet(std::move(v));
  }

  friend bool operator==(const Alphabet &, const Alphabet &) = default;
  friend bool operator<(const Alphabet &a, const Alphabet &b) {
    return a.letters_ < b.letters_;
  }

private:
  void normalize() {
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (!letters_.empty() && letters_.front() == 0)
      throw std::invalid_argument("pool indices start at 1");
  }

  std::vector<Letter> letters_;
};

inline std::string letter_name(char pool, Letter l) {
  return std::string(1, pool) + std::to_string(l);
}

/// "x1*x2*x1"; the empty word prints as "1".
inline std::string word_to_string(const Word &w, char pool = 'x') {
  if (w.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += '*';
    s += letter_name(pool, w[i]);
  }
  return s;
}

/// Strictly smaller than every proper rotation.
inline bool is_lyndon(const Word &w) {
  const std::size_t n = w.size();
  if (n == 0)
    return false;
  for (std::size_t k = 1; k < n; ++k) {
    // compare w with rotation starting at k
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = w[i];
      Letter b = w[(i + k) % n];
      if (a < b)
        break;
      if (a > b)
        return false;
      if (i + 1 == n)
        return false; // periodic word
    }
  }
  return true;
}

/// Standard factorization w = uv with v the longest proper Lyndon suffix.
/// Requires |w| >= 2 and w Lyndon.
inline std::pair<Word, Word> standard_factorization(const Word &w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    if (is_lyndon(v))
      return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), std::move(v)};
  }
  throw std::logic_error("standard_factorization: not a Lyndon word of length >= 2");
}

/// Lyndon words over the alphabet with length <= max_len, by Duval's
/// generation algorithm, returned in graded-lex order.
inline std::vector<Word> lyndon_words(const Alphabet &alphabet, std::size_t max_len) {
  std::vector<Word> out;
  const std::size_t k = alphabet.size();
  if (k == 0 || max_len == 0)
    return out;
  // Duval over indices 0..k-1
  std::vector<std::size_t> w{0};
  while (!w.empty()) {
    Word word;
    word.reserve(w.size());
    for (auto i : w)
      word.push_back(alphabet[i]);
    out.push_back(std::move(word));
    const std::size_t m = w.size();
    while (w.size() < max_len)
      w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1)
      w.pop_back();
    if (!w.empty())
      ++w.back();
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

/// All words of exactly the given length over the alphabet, lexicographic.
inline std::vector<Word> all_words(const Alphabet &alphabet, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto &w : out)
      for (Letter l : alphabet) {
        Word v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

/// Letter-wise substitution, used when generators are renamed.
template <class Map> Word rename_word(const Word &w, const Map &rename) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    auto it = rename.find(l);
    out.push_back(it == rename.end() ? l : it->second);
  }
  return out;
}

} // namespace liepd

#endif

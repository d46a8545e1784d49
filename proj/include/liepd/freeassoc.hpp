#ifndef LIEPD_FREEASSOC_HPP
#define LIEPD_FREEASSOC_HPP

#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace liepd {

namespace detail {

// Appends one "c*term" to a canonical sum. Coefficient 1 is omitted, a lone
// leading -1 is kept as "-1*", later negative terms use " - ".
inline void append_term(std::string &out, const Scalar &c, const std::string &term) {
  if (out.empty()) {
    if (c.is_one())
      out = term;
    else
      out = c.to_string() + "*" + term;
    return;
  }
  if (c.sign() > 0) {
    out += " + ";
    if (!c.is_one())
      out += c.to_string() + "*";
  } else {
    out += " - ";
    Scalar a = -c;
    if (!a.is_one())
      out += a.to_string() + "*";
  }
  out += term;
}

} // namespace detail

/// Element of the free unital associative algebra A(X): a sparse combination
/// of words over X, the empty word being the unit.
class AssocElement {
public:
  using Terms = std::map<Word, Scalar, GradedLex>;

  AssocElement() = default;
  explicit AssocElement(Alphabet x) : x_(std::move(x)) {}
  AssocElement(Alphabet x, Terms terms) : x_(std::move(x)) {
    for (auto &[w, c] : terms) {
      if (!x_.contains(w))
        throw ContextError("word " + word_to_string(w) + " uses a letter outside the alphabet");
      if (!c.is_zero())
        terms_.emplace(w, std::move(c));
    }
  }

  static AssocElement unit(Alphabet x) { return monomial(std::move(x), Word{}); }
  static AssocElement letter(Alphabet x, Letter l) { return monomial(std::move(x), Word{l}); }
  static AssocElement monomial(Alphabet x, Word w, Scalar c = Scalar::one()) {
    Terms t;
    t.emplace(std::move(w), std::move(c));
    return AssocElement(std::move(x), std::move(t));
  }

  const Alphabet &alphabet() const { return x_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  /// First term in graded-lex order: lowest degree, lexicographically least.
  const std::pair<const Word, Scalar> &leading() const {
    if (terms_.empty())
      throw std::logic_error("leading term of zero");
    return *terms_.begin();
  }

  /// Max word length; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

  AssocElement &operator+=(const AssocElement &o) {
    check(o);
    axpy(terms_, Scalar::one(), o.terms_);
    return *this;
  }
  AssocElement &operator-=(const AssocElement &o) {
    check(o);
    axpy(terms_, Scalar(-1), o.terms_);
    return *this;
  }
  AssocElement &operator*=(const Scalar &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[w, a] : terms_)
      a *= c;
    return *this;
  }

  friend AssocElement operator+(AssocElement a, const AssocElement &b) { return a += b; }
  friend AssocElement operator-(AssocElement a, const AssocElement &b) { return a -= b; }
  friend AssocElement operator*(const Scalar &c, AssocElement a) { return a *= c; }
  friend AssocElement operator-(AssocElement a) { return a *= Scalar(-1); }

  friend bool operator==(const AssocElement &a, const AssocElement &b) {
    return a.x_ == b.x_ && a.terms_ == b.terms_;
  }

  void add_term(const Word &w, const Scalar &c) {
    if (!x_.contains(w))
      throw ContextError("word " + word_to_string(w) + " uses a letter outside the alphabet");
    auto [it, inserted] = terms_.try_emplace(w, Scalar::zero());
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  /// Same terms viewed in a larger alphabet.
  AssocElement rebased(const Alphabet &x) const { return AssocElement(x, terms_); }

  std::string to_string() const {
    std::string out;
    for (const auto &[w, c] : terms_)
      detail::append_term(out, c, word_to_string(w));
    return out.empty() ? "0" : out;
  }

  void check(const AssocElement &o) const {
    if (!(x_ == o.x_))
      throw ContextError("associative elements over different alphabets");
  }

private:
  Alphabet x_;
  Terms terms_;
};

/// Bilinear concatenation product.
inline AssocElement assoc_mul(const AssocElement &a, const AssocElement &b) {
  a.check(b);
  AssocElement::Terms out;
  for (const auto &[u, c] : a.terms())
    for (const auto &[v, d] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto [it, inserted] = out.try_emplace(std::move(w), Scalar::zero());
      it->second += c * d;
      if (it->second.is_zero())
        out.erase(it);
    }
  return AssocElement(a.alphabet(), std::move(out));
}

inline AssocElement operator*(const AssocElement &a, const AssocElement &b) { return assoc_mul(a, b); }

/// Basis element (w, y) of the free module A(X)Y.
struct ModuleKey {
  Word word;
  Letter y = 0;

  std::size_t degree() const { return word.size() + 1; }
  friend bool operator==(const ModuleKey &, const ModuleKey &) = default;
};

/// Graded by |w|+1, then lexicographic on w, then y index.
struct ModuleKeyLess {
  bool operator()(const ModuleKey &a, const ModuleKey &b) const {
    if (a.word.size() != b.word.size())
      return a.word.size() < b.word.size();
    if (a.word != b.word)
      return a.word < b.word;
    return a.y < b.y;
  }
};

inline std::string module_key_to_string(const ModuleKey &k) {
  std::string s;
  for (Letter l : k.word)
    s += letter_name('x', l) + "*";
  return s + letter_name('y', k.y);
}

/// Element of the free A(X)-module with basis Y.
class ModuleElement {
public:
  using Terms = std::map<ModuleKey, Scalar, ModuleKeyLess>;

  ModuleElement() = default;
  ModuleElement(Alphabet x, Alphabet y) : x_(std::move(x)), y_(std::move(y)) {}
  ModuleElement(Alphabet x, Alphabet y, Terms terms) : x_(std::move(x)), y_(std::move(y)) {
    for (auto &[k, c] : terms) {
      validate(k);
      if (!c.is_zero())
        terms_.emplace(k, std::move(c));
    }
  }

  static ModuleElement generator(Alphabet x, Alphabet y, Letter gen) {
    return basis(std::move(x), std::move(y), ModuleKey{{}, gen});
  }
  static ModuleElement basis(Alphabet x, Alphabet y, ModuleKey k, Scalar c = Scalar::one()) {
    Terms t;
    t.emplace(std::move(k), std::move(c));
    return ModuleElement(std::move(x), std::move(y), std::move(t));
  }

  const Alphabet &x_alphabet() const { return x_; }
  const Alphabet &y_alphabet() const { return y_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(const ModuleKey &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  /// Max of |w|+1; -1 for zero.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
  }

  ModuleElement &operator+=(const ModuleElement &o) {
    check(o);
    axpy(terms_, Scalar::one(), o.terms_);
    return *this;
  }
  ModuleElement &operator-=(const ModuleElement &o) {
    check(o);
    axpy(terms_, Scalar(-1), o.terms_);
    return *this;
  }
  ModuleElement &operator*=(const Scalar &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[k, a] : terms_)
      a *= c;
    return *this;
  }

  friend ModuleElement operator+(ModuleElement a, const ModuleElement &b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement &b) { return a -= b; }
  friend ModuleElement operator*(const Scalar &c, ModuleElement a) { return a *= c; }
  friend ModuleElement operator-(ModuleElement a) { return a *= Scalar(-1); }

  friend bool operator==(const ModuleElement &a, const ModuleElement &b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.terms_ == b.terms_;
  }

  void add_term(const ModuleKey &k, const Scalar &c) {
    validate(k);
    auto [it, inserted] = terms_.try_emplace(k, Scalar::zero());
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  ModuleElement rebased(const Alphabet &x, const Alphabet &y) const {
    return ModuleElement(x, y, terms_);
  }

  std::string to_string() const {
    std::string out;
    for (const auto &[k, c] : terms_)
      detail::append_term(out, c, module_key_to_string(k));
    return out.empty() ? "0" : out;
  }

  void check(const ModuleElement &o) const {
    if (!(x_ == o.x_) || !(y_ == o.y_))
      throw ContextError("module elements over different alphabets");
  }

private:
  void validate(const ModuleKey &k) const {
    if (!x_.contains(k.word) || !y_.contains(k.y))
      throw ContextError("module term " + module_key_to_string(k) + " outside the context");
  }

  Alphabet x_;
  Alphabet y_;
  Terms terms_;
};

/// Bilinear extension of (w, (w', y)) -> (ww', y).
inline ModuleElement module_mul(const AssocElement &a, const ModuleElement &v) {
  if (!(a.alphabet() == v.x_alphabet()))
    throw ContextError("module_mul: algebra and module over different alphabets");
  ModuleElement::Terms out;
  for (const auto &[u, c] : a.terms())
    for (const auto &[k, d] : v.terms()) {
      ModuleKey nk{u, k.y};
      nk.word.insert(nk.word.end(), k.word.begin(), k.word.end());
      auto [it, inserted] = out.try_emplace(std::move(nk), Scalar::zero());
      it->second += c * d;
      if (it->second.is_zero())
        out.erase(it);
    }
  return ModuleElement(v.x_alphabet(), v.y_alphabet(), std::move(out));
}

/// Module basis (w, y) with |w|+1 <= max_degree, in graded order.
inline std::vector<ModuleKey> module_basis(const Alphabet &x, const Alphabet &y, std::size_t max_degree) {
  std::vector<ModuleKey> out;
  for (std::size_t len = 0; len + 1 <= max_degree; ++len)
    for (const auto &w : all_words(x, len))
      for (Letter g : y)
        out.push_back(ModuleKey{w, g});
  return out;
}

} // namespace liepd

#endif

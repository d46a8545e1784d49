#ifndef LIEPD_FREELIE_HPP
#define LIEPD_FREELIE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "freeassoc.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace liepd {

/// A Lyndon word together with its standard bracketing. The bracketing is
/// determined by the word, so only the word is stored.
struct LyndonBasisElement {
  Word word;

  std::size_t degree() const { return word.size(); }

  /// "[x1,[x1,x2]]"
  std::string to_string() const { return bracketing(word); }

  static std::string bracketing(const Word &w) {
    if (w.size() == 1)
      return letter_name('x', w[0]);
    auto [u, v] = standard_factorization(w);
    return "[" + bracketing(u) + "," + bracketing(v) + "]";
  }

  friend bool operator==(const LyndonBasisElement &, const LyndonBasisElement &) = default;
};

namespace detail {

// Process-wide memo tables. Values are immutable once inserted.
template <class Key, class Value, class Compare = std::less<Key>> class Memo {
public:
  template <class Make> const Value &get(const Key &k, Make &&make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(k);
      if (it != map_.end())
        return *it->second;
    }
    auto fresh = std::make_shared<const Value>(make());
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.emplace(k, std::move(fresh));
    return *it->second;
  }

private:
  std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const Value>, Compare> map_;
};

inline Memo<Word, AssocElement::Terms, GradedLex> &expansion_memo() {
  static Memo<Word, AssocElement::Terms, GradedLex> m;
  return m;
}

inline Memo<std::pair<Alphabet, std::size_t>, std::vector<Word>> &basis_memo() {
  static Memo<std::pair<Alphabet, std::size_t>, std::vector<Word>> m;
  return m;
}

inline AssocElement::Terms commutator_terms(const AssocElement::Terms &a,
                                            const AssocElement::Terms &b) {
  AssocElement::Terms out;
  auto add = [&](const AssocElement::Terms &p, const AssocElement::Terms &q, const Scalar &sign) {
    for (const auto &[u, c] : p)
      for (const auto &[v, d] : q) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        auto [it, inserted] = out.try_emplace(std::move(w), Scalar::zero());
        it->second += sign * c * d;
        if (it->second.is_zero())
          out.erase(it);
      }
  };
  add(a, b, Scalar(1));
  add(b, a, Scalar(-1));
  return out;
}

} // namespace detail

/// Associative expansion P_w of the standard bracketing of a Lyndon word.
/// P_w = w + (words of the same length that are lexicographically larger).
inline const AssocElement::Terms &lyndon_expansion(const Word &w) {
  return detail::expansion_memo().get(w, [&] {
    if (w.size() == 1) {
      AssocElement::Terms t;
      t.emplace(w, Scalar::one());
      return t;
    }
    auto [u, v] = standard_factorization(w);
    return detail::commutator_terms(lyndon_expansion(u), lyndon_expansion(v));
  });
}

/// Lyndon words of length <= d over X in graded-lex order. Cached per (X, d).
inline const std::vector<Word> &lyndon_basis_words(const Alphabet &x, std::size_t d) {
  return detail::basis_memo().get({x, d}, [&] { return lyndon_words(x, d); });
}

inline std::vector<LyndonBasisElement> lyndon_basis(const Alphabet &x, std::size_t d) {
  std::vector<LyndonBasisElement> out;
  for (const auto &w : lyndon_basis_words(x, d))
    out.push_back(LyndonBasisElement{w});
  return out;
}

/// Element of the free Lie algebra L(X) in the Lyndon basis.
class LieElement {
public:
  using Terms = std::map<Word, Scalar, GradedLex>;

  LieElement() = default;
  explicit LieElement(Alphabet x) : x_(std::move(x)) {}
  LieElement(Alphabet x, Terms terms) : x_(std::move(x)) {
    for (auto &[w, c] : terms) {
      if (!is_lyndon(w))
        throw std::invalid_argument("not a Lyndon word: " + word_to_string(w));
      if (!x_.contains(w))
        throw ContextError("Lie term " + word_to_string(w) + " outside the alphabet");
      if (!c.is_zero())
        terms_.emplace(w, std::move(c));
    }
  }

  static LieElement generator(Alphabet x, Letter l) { return basis(std::move(x), Word{l}); }
  static LieElement basis(Alphabet x, Word w, Scalar c = Scalar::one()) {
    Terms t;
    t.emplace(std::move(w), std::move(c));
    return LieElement(std::move(x), std::move(t));
  }

  const Alphabet &alphabet() const { return x_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

  Scalar coeff(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  LieElement &operator+=(const LieElement &o) {
    check(o);
    axpy(terms_, Scalar::one(), o.terms_);
    return *this;
  }
  LieElement &operator-=(const LieElement &o) {
    check(o);
    axpy(terms_, Scalar(-1), o.terms_);
    return *this;
  }
  LieElement &operator*=(const Scalar &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[w, a] : terms_)
      a *= c;
    return *this;
  }

  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
  friend LieElement operator*(const Scalar &c, LieElement a) { return a *= c; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
  friend bool operator==(const LieElement &a, const LieElement &b) {
    return a.x_ == b.x_ && a.terms_ == b.terms_;
  }

  LieElement rebased(const Alphabet &x) const { return LieElement(x, terms_); }

  /// Terms of degree exactly k.
  LieElement component(std::size_t k) const {
    Terms t;
    for (const auto &[w, c] : terms_)
      if (w.size() == k)
        t.emplace(w, c);
    return LieElement(x_, std::move(t));
  }

  std::string to_string() const {
    std::string out;
    for (const auto &[w, c] : terms_)
      detail::append_term(out, c, LyndonBasisElement::bracketing(w));
    return out.empty() ? "0" : out;
  }

  void check(const LieElement &o) const {
    if (!(x_ == o.x_))
      throw ContextError("Lie elements over different alphabets");
  }

private:
  Alphabet x_;
  Terms terms_;
};

inline AssocElement embed_assoc(const LieElement &l) {
  AssocElement::Terms acc;
  for (const auto &[w, c] : l.terms())
    axpy(acc, c, lyndon_expansion(w));
  return AssocElement(l.alphabet(), std::move(acc));
}

/// Rewrites an associative Lie polynomial in the Lyndon basis by repeatedly
/// cancelling the graded-lex least word.
inline LieElement lie_normal_form(const AssocElement &a) {
  AssocElement::Terms rest = a.terms();
  LieElement::Terms out;
  while (!rest.empty()) {
    const Word w = rest.begin()->first;
    const Scalar c = rest.begin()->second;
    if (!is_lyndon(w))
      throw std::logic_error("not a Lie element (leading word " + word_to_string(w) + ")");
    axpy(rest, -c, lyndon_expansion(w));
    out.emplace(w, c);
  }
  return LieElement(a.alphabet(), std::move(out));
}

/// Formal bracket expression over X: generators, scalar multiples, sums and
/// brackets.
struct LieExpr {
  struct Gen {
    Letter x;
  };
  struct Scaled {
    Scalar c;
    std::shared_ptr<const LieExpr> e;
  };
  struct Sum {
    std::shared_ptr<const LieExpr> a, b;
  };
  struct Bracket {
    std::shared_ptr<const LieExpr> a, b;
  };
  std::variant<Gen, Scaled, Sum, Bracket> node;

  static std::shared_ptr<const LieExpr> gen(Letter x) {
    return std::make_shared<const LieExpr>(LieExpr{Gen{x}});
  }
  static std::shared_ptr<const LieExpr> scaled(Scalar c, std::shared_ptr<const LieExpr> e) {
    return std::make_shared<const LieExpr>(LieExpr{Scaled{std::move(c), std::move(e)}});
  }
  static std::shared_ptr<const LieExpr> sum(std::shared_ptr<const LieExpr> a,
                                            std::shared_ptr<const LieExpr> b) {
    return std::make_shared<const LieExpr>(LieExpr{Sum{std::move(a), std::move(b)}});
  }
  static std::shared_ptr<const LieExpr> bracket(std::shared_ptr<const LieExpr> a,
                                                std::shared_ptr<const LieExpr> b) {
    return std::make_shared<const LieExpr>(LieExpr{Bracket{std::move(a), std::move(b)}});
  }

  std::string to_string() const {
    return std::visit(
        [](const auto &n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Gen>)
            return letter_name('x', n.x);
          else if constexpr (std::is_same_v<T, Scaled>)
            return n.c.to_string() + "*(" + n.e->to_string() + ")";
          else if constexpr (std::is_same_v<T, Sum>)
            return "(" + n.a->to_string() + " + " + n.b->to_string() + ")";
          else
            return "[" + n.a->to_string() + "," + n.b->to_string() + "]";
        },
        node);
  }
};

namespace detail {

inline AssocElement::Terms expand_expr(const LieExpr &e, const Alphabet &x) {
  return std::visit(
      [&](const auto &n) -> AssocElement::Terms {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LieExpr::Gen>) {
          if (!x.contains(n.x))
            throw ContextError("generator " + letter_name('x', n.x) + " outside the alphabet");
          AssocElement::Terms t;
          t.emplace(Word{n.x}, Scalar::one());
          return t;
        } else if constexpr (std::is_same_v<T, LieExpr::Scaled>) {
          AssocElement::Terms t;
          axpy(t, n.c, expand_expr(*n.e, x));
          return t;
        } else if constexpr (std::is_same_v<T, LieExpr::Sum>) {
          auto t = expand_expr(*n.a, x);
          axpy(t, Scalar::one(), expand_expr(*n.b, x));
          return t;
        } else {
          return commutator_terms(expand_expr(*n.a, x), expand_expr(*n.b, x));
        }
      },
      e.node);
}

} // namespace detail

inline LieElement lie_normal_form(const LieExpr &e, const Alphabet &x) {
  return lie_normal_form(AssocElement(x, detail::expand_expr(e, x)));
}

/// Bracket of two Lyndon basis elements, cached.
inline const LieElement::Terms &basis_bracket(const Word &u, const Word &v) {
  static detail::Memo<std::pair<Word, Word>, LieElement::Terms> memo;
  return memo.get({u, v}, [&] {
    AssocElement::Terms t = detail::commutator_terms(lyndon_expansion(u), lyndon_expansion(v));
    Alphabet letters(Word(u.begin(), u.end()));
    letters = letters.united(Alphabet(Word(v.begin(), v.end())));
    return lie_normal_form(AssocElement(letters, std::move(t))).terms();
  });
}

inline LieElement lie_bracket(const LieElement &a, const LieElement &b) {
  a.check(b);
  LieElement::Terms out;
  for (const auto &[u, c] : a.terms())
    for (const auto &[v, d] : b.terms())
      axpy(out, c * d, basis_bracket(u, v));
  return LieElement(a.alphabet(), std::move(out));
}

} // namespace liepd

#endif

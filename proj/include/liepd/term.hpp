#ifndef LIEPD_TERM_HPP
#define LIEPD_TERM_HPP

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "projder.hpp"
#include "representation.hpp"

namespace liepd {

/// Parsed term. Sums keep a sign per summand; products are flat; actions
/// associate to the left.
struct Term {
  enum class Kind { Num, Gen, Sum, Product, Action, Bracket, Proj, Retr };

  Kind kind = Kind::Num;
  Scalar num;
  char pool = 'x';
  Letter index = 0;
  std::vector<std::shared_ptr<const Term>> kids;
  std::vector<bool> neg;
  int line = 1;
  int col = 1;
};

using TermPtr = std::shared_ptr<const Term>;

/// Structural equality, ignoring source positions.
inline bool term_equal(const Term &a, const Term &b) {
  if (a.kind != b.kind || a.kids.size() != b.kids.size() || a.neg != b.neg)
    return false;
  if (a.kind == Term::Kind::Num && !(a.num == b.num))
    return false;
  if (a.kind == Term::Kind::Gen && (a.pool != b.pool || a.index != b.index))
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!term_equal(*a.kids[i], *b.kids[i]))
      return false;
  return true;
}

namespace detail {

// Precedence levels: 0 sum, 1 action, 2 product, 3 atom.
inline std::string format_at(const Term &t, int level) {
  auto wrap = [&](std::string s, int own) { return level > own ? "(" + s + ")" : s; };
  switch (t.kind) {
  case Term::Kind::Num:
    return t.num.to_string();
  case Term::Kind::Gen:
    return letter_name(t.pool, t.index);
  case Term::Kind::Sum: {
    std::string s;
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
      if (i == 0)
        s += t.neg[0] ? "-" : "";
      else
        s += t.neg[i] ? " - " : " + ";
      s += format_at(*t.kids[i], 1);
    }
    return wrap(s, 0);
  }
  case Term::Kind::Action:
    return wrap(format_at(*t.kids[0], 1) + " . " + format_at(*t.kids[1], 2), 1);
  case Term::Kind::Product: {
    std::string s;
    for (std::size_t i = 0; i < t.kids.size(); ++i)
      s += (i ? "*" : "") + format_at(*t.kids[i], 3);
    return wrap(s, 2);
  }
  case Term::Kind::Bracket:
    return "[" + format_at(*t.kids[0], 0) + "," + format_at(*t.kids[1], 0) + "]";
  case Term::Kind::Proj:
    return "p(" + format_at(*t.kids[0], 0) + ")";
  case Term::Kind::Retr:
    return "r(" + format_at(*t.kids[0], 0) + ")";
  }
  return "";
}

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  TermPtr parse() {
    skip();
    if (at_end())
      fail("empty term");
    TermPtr t = sum();
    skip();
    if (!at_end())
      fail(std::string("unexpected '") + src_[pos_] + "'");
    return t;
  }

private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() {
    skip();
    return at_end() ? '\0' : src_[pos_];
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }
  [[noreturn]] void fail(const std::string &what) { throw ParseError(what, line_, col_); }
  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }
  std::shared_ptr<Term> node(Term::Kind k) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->line = line_;
    t->col = col_;
    return t;
  }

  TermPtr sum() {
    auto t = node(Term::Kind::Sum);
    bool first_neg = false;
    if (peek() == '-') {
      advance();
      first_neg = true;
    }
    t->kids.push_back(action());
    t->neg.push_back(first_neg);
    while (peek() == '+' || peek() == '-') {
      bool n = peek() == '-';
      advance();
      t->kids.push_back(action());
      t->neg.push_back(n);
    }
    if (t->kids.size() == 1 && !first_neg)
      return t->kids[0];
    return t;
  }

  TermPtr action() {
    TermPtr left = product();
    while (peek() == '.') {
      auto t = node(Term::Kind::Action);
      advance();
      t->kids.push_back(left);
      t->kids.push_back(product());
      left = t;
    }
    return left;
  }

  TermPtr product() {
    auto t = node(Term::Kind::Product);
    t->kids.push_back(factor());
    while (peek() == '*') {
      advance();
      t->kids.push_back(factor());
    }
    if (t->kids.size() == 1)
      return t->kids[0];
    return t;
  }

  TermPtr factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return number();
    return atom();
  }

  TermPtr number() {
    auto t = node(Term::Kind::Num);
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      s += src_[pos_];
      advance();
    }
    if (!at_end() && src_[pos_] == '/') {
      s += '/';
      advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail("expected denominator");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        s += src_[pos_];
        advance();
      }
    }
    try {
      t->num = Scalar::parse(s);
    } catch (const std::exception &e) {
      fail(e.what());
    }
    return t;
  }

  TermPtr atom() {
    char c = peek();
    if (c == '[') {
      auto t = node(Term::Kind::Bracket);
      advance();
      t->kids.push_back(sum());
      expect(',');
      t->kids.push_back(sum());
      expect(']');
      return t;
    }
    if (c == '(') {
      advance();
      TermPtr inner = sum();
      expect(')');
      return inner;
    }
    if ((c == 'p' || c == 'r') && pos_ + 1 < src_.size() && src_[pos_ + 1] == '(') {
      auto t = node(c == 'p' ? Term::Kind::Proj : Term::Kind::Retr);
      advance();
      advance();
      t->kids.push_back(sum());
      expect(')');
      return t;
    }
    if (c == 'x' || c == 'y' || c == 'm') {
      auto t = node(Term::Kind::Gen);
      t->pool = c;
      advance();
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_];
        advance();
      }
      if (digits.empty())
        fail(std::string("generator '") + c + "' needs an index");
      unsigned long v = std::stoul(digits);
      if (v == 0 || v > 1000000)
        fail("generator index out of range");
      t->index = static_cast<Letter>(v);
      return t;
    }
    if (c == '\0')
      fail("unexpected end of term");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

} // namespace detail

inline std::string format_term(const Term &t) { return detail::format_at(t, 0); }

/// Grammar:
///   sum     := ['-'] action (('+'|'-') action)*
///   action  := product ('.' product)*
///   product := factor ('*' factor)*
///   factor  := number | atom
///   atom    := gen | '[' sum ',' sum ']' | 'p(' sum ')' | 'r(' sum ')' | '(' sum ')'
inline TermPtr parse_term(std::string_view src) { return detail::Parser(src).parse(); }

enum class Mode { Rep, PD };

/// Static sort of a subterm. S is a bare scalar, Z the zero element (any sort).
enum class TermSort { S, Z, L, V, M };

namespace detail {

inline void collect_indices(const Term &t, std::set<Letter> &xs, std::set<Letter> &ys, std::set<Letter> &ms) {
  if (t.kind == Term::Kind::Gen)
    (t.pool == 'x' ? xs : t.pool == 'y' ? ys : ms).insert(t.index);
  for (const auto &k : t.kids)
    collect_indices(*k, xs, ys, ms);
}

struct Value {
  TermSort sort = TermSort::Z;
  Scalar scalar;
  PDElement e;
};

class Evaluator {
public:
  Evaluator(Mode mode, FreeRep ctx) : mode_(mode), ctx_(std::move(ctx)) {}

  Value eval(const Term &t) {
    switch (t.kind) {
    case Term::Kind::Num:
      return scalar(t.num);
    case Term::Kind::Gen:
      return gen(t);
    case Term::Kind::Sum:
      return sum(t);
    case Term::Kind::Product:
      return product(t);
    case Term::Kind::Action: {
      Value a = eval(*t.kids[0]), b = eval(*t.kids[1]);
      if (!is_l(a) || !is_v(b))
        fail(t, "action needs an L-sort left side and a V-sort right side");
      return element(TermSort::V, pd_bracket(a.e, b.e));
    }
    case Term::Kind::Bracket: {
      Value a = eval(*t.kids[0]), b = eval(*t.kids[1]);
      if (a.sort == TermSort::S || b.sort == TermSort::S)
        fail(t, "bracket of a scalar");
      if (mode_ == Mode::Rep && (a.sort == TermSort::V || b.sort == TermSort::V))
        fail(t, "V-sort elements have no bracket");
      TermSort s = TermSort::M;
      if (a.sort == TermSort::Z || b.sort == TermSort::Z)
        s = TermSort::Z;
      else if (a.sort == TermSort::L && b.sort == TermSort::L)
        s = TermSort::L;
      else if (a.sort != TermSort::M && b.sort != TermSort::M)
        s = TermSort::V;
      return element(s, pd_bracket(a.e, b.e));
    }
    case Term::Kind::Proj:
    case Term::Kind::Retr: {
      if (mode_ == Mode::Rep)
        fail(t, "p(.) and r(.) exist only in pd mode");
      Value a = eval(*t.kids[0]);
      if (a.sort == TermSort::S)
        fail(t, "projection of a scalar");
      if (t.kind == Term::Kind::Proj)
        return element(a.sort == TermSort::Z ? TermSort::Z : TermSort::V, pd_p(a.e));
      return element(a.sort == TermSort::Z ? TermSort::Z : TermSort::L, pd_r(a.e));
    }
    }
    fail(t, "unknown node");
  }

private:
  [[noreturn]] static void fail(const Term &t, const std::string &why) {
    throw SortError(why + " in '" + format_term(t) + "'");
  }

  Value scalar(const Scalar &s) {
    Value v;
    v.sort = s.is_zero() ? TermSort::Z : TermSort::S;
    v.scalar = s;
    v.e = PDElement::zero(ctx_);
    return v;
  }
  Value element(TermSort s, PDElement e) {
    Value v;
    v.sort = s;
    v.e = std::move(e);
    return v;
  }
  static bool is_l(const Value &v) { return v.sort == TermSort::L || v.sort == TermSort::Z; }
  static bool is_v(const Value &v) { return v.sort == TermSort::V || v.sort == TermSort::Z; }

  Value gen(const Term &t) {
    if (t.pool == 'x')
      return element(TermSort::L, PDElement::from_l(ctx_, ctx_.x(t.index)));
    if (t.pool == 'y')
      return element(TermSort::V, PDElement::from_v(ctx_, ctx_.y(t.index)));
    if (mode_ == Mode::Rep)
      fail(t, "m-generators exist only in pd mode");
    return element(TermSort::M, PDElement{ctx_, ctx_.x(t.index), ctx_.y(t.index)});
  }

  Value sum(const Term &t) {
    Value acc;
    acc.e = PDElement::zero(ctx_);
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
      Value v = eval(*t.kids[i]);
      if (v.sort == TermSort::S)
        fail(t, "sum with a bare scalar");
      if (v.sort != TermSort::Z) {
        if (acc.sort == TermSort::Z)
          acc.sort = v.sort;
        else if (acc.sort != v.sort) {
          if (mode_ == Mode::Rep)
            fail(t, "sum mixes L-sort and V-sort elements");
          acc.sort = TermSort::M;
        }
      }
      if (t.neg[i])
        acc.e -= v.e;
      else
        acc.e += v.e;
    }
    return acc;
  }

  Value product(const Term &t) {
    Scalar c = Scalar::one();
    std::vector<Value> elems;
    for (const auto &k : t.kids) {
      Value v = eval(*k);
      if (v.sort == TermSort::S)
        c *= v.scalar;
      else if (k->kind == Term::Kind::Num)
        c = Scalar::zero();
      else
        elems.push_back(std::move(v));
    }
    if (elems.empty())
      return scalar(c);
    Value out = elems.back();
    for (std::size_t i = elems.size() - 1; i-- > 0;) {
      if (!is_l(elems[i]) || !is_v(out))
        fail(t, elems.size() == 2 && elems[0].sort == TermSort::L && elems[1].sort == TermSort::L
                    ? "product of two L-sort elements; use [,]"
                    : "juxtaposition is the action: L-sort factors followed by one V-sort factor");
      out = element(TermSort::V, pd_bracket(elems[i].e, out.e));
    }
    out.e *= c;
    if (c.is_zero())
      out.sort = TermSort::Z;
    return out;
  }

  Mode mode_;
  FreeRep ctx_;
};

} // namespace detail

/// Generators a term mentions. Rep mode: X from x-indices, Y from
/// y-indices. PD mode: X = Y = all indices of x, y and m.
inline FreeRep term_context(const Term &t, Mode mode) {
  std::set<Letter> xs, ys, ms;
  detail::collect_indices(t, xs, ys, ms);
  if (mode == Mode::Rep)
    return FreeRep{Alphabet(std::vector<Letter>(xs.begin(), xs.end())),
                   Alphabet(std::vector<Letter>(ys.begin(), ys.end()))};
  std::set<Letter> all = xs;
  all.insert(ys.begin(), ys.end());
  all.insert(ms.begin(), ms.end());
  Alphabet a(std::vector<Letter>(all.begin(), all.end()));
  return FreeRep{a, a};
}

struct TermValue {
  TermSort sort;
  PDElement value;

  /// Canonical normal form text: Lie element, module element or PD element.
  std::string to_string() const { return value.to_string(); }
};

/// Sort-checks and evaluates a term in the given context; SortError on
/// ill-sorted input. A bare nonzero scalar is not an element.
inline TermValue eval_term(const Term &t, Mode mode, const FreeRep &ctx) {
  detail::Evaluator ev(mode, ctx);
  auto v = ev.eval(t);
  if (v.sort == TermSort::S)
    throw SortError("a bare scalar is not an element: '" + format_term(t) + "'");
  return TermValue{v.sort, std::move(v.e)};
}

inline TermValue eval_term(const Term &t, Mode mode) { return eval_term(t, mode, term_context(t, mode)); }

/// Parses a term expected to be an L-sort element of ctx.
inline LieElement parse_lie(std::string_view src, const FreeRep &ctx) {
  TermPtr t = parse_term(src);
  auto v = eval_term(*t, Mode::Rep, ctx);
  if (v.sort != TermSort::L && v.sort != TermSort::Z)
    throw SortError("expected an L-sort element: '" + std::string(src) + "'");
  return v.value.l;
}

/// Parses a term expected to be a V-sort element of ctx.
inline ModuleElement parse_module(std::string_view src, const FreeRep &ctx) {
  TermPtr t = parse_term(src);
  auto v = eval_term(*t, Mode::Rep, ctx);
  if (v.sort != TermSort::V && v.sort != TermSort::Z)
    throw SortError("expected a V-sort element: '" + std::string(src) + "'");
  return v.value.v;
}

inline PDElement parse_pd(std::string_view src, const FreeRep &ctx) {
  TermPtr t = parse_term(src);
  return eval_term(*t, Mode::PD, ctx).value;
}

} // namespace liepd

#endif

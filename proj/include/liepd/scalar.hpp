#ifndef LIEPD_SCALAR_HPP
#define LIEPD_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace liepd {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}
  Scalar(int v) : q_(static_cast<long>(v)) {}
  Scalar(long num, long den) {
    if (den == 0)
      throw std::domain_error("zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (optional leading '-').
  static Scalar parse(std::string_view text) {
    std::string s(text);
    if (s.empty())
      throw std::invalid_argument("empty scalar literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
      if (!ok)
        throw std::invalid_argument("bad scalar literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("bad scalar literal '" + s + "'");
    if (q.get_den() == 0)
      throw std::domain_error("zero denominator");
    q.canonicalize();
    return Scalar(q);
  }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar from_scalar(const Scalar &s) { return s; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  const mpz_class &numerator() const { return q_.get_num(); }
  const mpz_class &denominator() const { return q_.get_den(); }
  const mpq_class &value() const { return q_; }

  Scalar inv() const {
    if (is_zero())
      throw std::domain_error("inverse of zero");
    return Scalar(mpq_class(1) / q_);
  }

  Scalar pow(unsigned e) const {
    Scalar r = one();
    for (unsigned i = 0; i < e; ++i)
      r *= *this;
    return r;
  }

  Scalar abs() const { return Scalar(mpq_class(::abs(q_))); }

  Scalar &operator+=(const Scalar &o) { q_ += o.q_; return *this; }
  Scalar &operator-=(const Scalar &o) { q_ -= o.q_; return *this; }
  Scalar &operator*=(const Scalar &o) { q_ *= o.q_; return *this; }
  Scalar &operator/=(const Scalar &o) {
    if (o.is_zero())
      throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  friend Scalar operator-(const Scalar &a) { return Scalar(mpq_class(-a.q_)); }

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.q_ == b.q_; }
  friend bool operator<(const Scalar &a, const Scalar &b) { return a.q_ < b.q_; }

  /// "n/d", denominator omitted when it is 1.
  std::string to_string() const {
    if (q_.get_den() == 1)
      return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) {
    return os << s.to_string();
  }

private:
  mpq_class q_{0};
};

/// Residue modulo a small prime. Only used by the finite-model oracle.
template <unsigned P> class Fp {
  static_assert(P == 2 || P == 3 || P == 5, "finite-model fields are F2, F3, F5");

public:
  static constexpr unsigned modulus = P;

  Fp() = default;
  Fp(long v) : r_(reduce(v)) {}

  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }

  /// Image of a rational under Z_(p) -> F_p. Fails if p divides the denominator.
  static Fp from_scalar(const Scalar &s) {
    mpz_class num = s.numerator() % P;
    mpz_class den = s.denominator() % P;
    if (den == 0)
      throw std::domain_error("denominator divisible by " + std::to_string(P) +
                              ": " + s.to_string());
    return Fp(num.get_si()) / Fp(den.get_si());
  }

  unsigned residue() const { return r_; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Fp inv() const {
    if (r_ == 0)
      throw std::domain_error("inverse of zero");
    for (unsigned c = 1; c < P; ++c)
      if ((c * r_) % P == 1)
        return from_residue(c);
    throw std::logic_error("unreachable");
  }

  Fp &operator+=(const Fp &o) { r_ = (r_ + o.r_) % P; return *this; }
  Fp &operator-=(const Fp &o) { r_ = (r_ + P - o.r_) % P; return *this; }
  Fp &operator*=(const Fp &o) { r_ = (r_ * o.r_) % P; return *this; }
  Fp &operator/=(const Fp &o) { return *this *= o.inv(); }

  friend Fp operator+(Fp a, const Fp &b) { return a += b; }
  friend Fp operator-(Fp a, const Fp &b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp &b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp &b) { return a /= b; }
  friend Fp operator-(const Fp &a) { return from_residue((P - a.r_) % P); }

  friend bool operator==(const Fp &a, const Fp &b) { return a.r_ == b.r_; }
  friend bool operator<(const Fp &a, const Fp &b) { return a.r_ < b.r_; }

  std::string to_string() const { return std::to_string(r_); }

  friend std::ostream &operator<<(std::ostream &os, const Fp &s) {
    return os << s.to_string();
  }

  /// All field elements in residue order.
  static std::vector<Fp> elements() {
    std::vector<Fp> out;
    for (unsigned c = 0; c < P; ++c)
      out.push_back(from_residue(c));
    return out;
  }

private:
  static Fp from_residue(unsigned r) {
    Fp f;
    f.r_ = r;
    return f;
  }
  static unsigned reduce(long v) {
    long m = v % static_cast<long>(P);
    return static_cast<unsigned>(m < 0 ? m + P : m);
  }

  unsigned r_ = 0;
};

template <class F> struct is_finite_field : std::false_type {};
template <unsigned P> struct is_finite_field<Fp<P>> : std::true_type {};

template <class F>
concept Field = requires(F a, F b, Scalar s) {
  { a + b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { F::from_scalar(s) } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
};

static_assert(Field<Scalar>);
static_assert(Field<Fp<2>>);

} // namespace liepd

#endif

#ifndef LIEPD_IO_HPP
#define LIEPD_IO_HPP

#include <json.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "projder.hpp"
#include "representation.hpp"
#include "term.hpp"

namespace liepd {

namespace detail {

inline std::vector<Letter> parse_gen_list(std::string_view s, char pool, int col0) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  };
  skip();
  if (i == s.size())
    return out;
  while (true) {
    skip();
    if (i >= s.size() || s[i] != pool)
      throw ParseError(std::string("expected generator ") + pool + "<n>", 1, col0 + static_cast<int>(i));
    ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (start == i)
      throw ParseError("generator needs an index", 1, col0 + static_cast<int>(i));
    unsigned long v = std::stoul(std::string(s.substr(start, i - start)));
    if (v == 0)
      throw ParseError("generator indices start at 1", 1, col0 + static_cast<int>(start));
    out.push_back(static_cast<Letter>(v));
    skip();
    if (i == s.size())
      return out;
    if (s[i] != ',')
      throw ParseError("expected ','", 1, col0 + static_cast<int>(i));
    ++i;
  }
}

} // namespace detail

/// "W(x1,x2;y1)"; either list may be empty.
inline FreeRep parse_free_rep(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "W(" || s.back() != ')')
    throw ParseError("expected W(x..;y..)", 1, 1);
  std::string_view inner = s.substr(2, s.size() - 3);
  auto semi = inner.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("expected ';' between the X and Y lists", 1, static_cast<int>(s.size()));
  return FreeRep{Alphabet(detail::parse_gen_list(inner.substr(0, semi), 'x', 3)),
                 Alphabet(detail::parse_gen_list(inner.substr(semi + 1), 'y', static_cast<int>(semi) + 4))};
}

/// "F(m1,m2)": the free PD algebra whose generators are m_i = x_i + y_i.
inline FreePD parse_free_pd(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "F(" || s.back() != ')')
    throw ParseError("expected F(m..)", 1, 1);
  Alphabet a(detail::parse_gen_list(s.substr(2, s.size() - 3), 'm', 3));
  return FreePD{FreeRep{a, a}};
}

using Json = nlohmann::json;

/// Scalar from a JSON string "n/d" or integer.
inline Scalar json_scalar(const Json &j) {
  if (j.is_number_integer())
    return Scalar(j.get<long>());
  if (j.is_string())
    return Scalar::parse(j.get<std::string>());
  throw ValidationError("expected a rational as \"n/d\" or an integer, got " + j.dump());
}

inline std::string json_field(const Json &j) {
  return j.contains("field") ? j.at("field").get<std::string>() : std::string("Q");
}

/// FinRep from {"n":..,"c":[[i,j,k,"coeff"],..],"m":..,"act":[[[..],..],..]}.
/// Indices are 1-based; the antisymmetric partner of a listed constant is
/// filled in when absent and must agree when present.
template <class F> FinRep<F> load_finrep(const Json &j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t m = j.at("m").get<std::size_t>();
  std::vector<F> c(n * n * n, F::zero());
  std::vector<bool> given(n * n * n, false);
  auto at = [&](std::size_t i, std::size_t jj, std::size_t k) { return (i * n + jj) * n + k; };
  if (j.contains("c"))
    for (const auto &e : j.at("c")) {
      if (!e.is_array() || e.size() != 4)
        throw ValidationError("structure constant entries are [i,j,k,coeff]");
      std::size_t i = e[0].get<std::size_t>(), jj = e[1].get<std::size_t>(), k = e[2].get<std::size_t>();
      if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n)
        throw ValidationError("structure constant index out of range");
      --i, --jj, --k;
      F v = F::from_scalar(json_scalar(e[3]));
      if (given[at(i, jj, k)] && !(c[at(i, jj, k)] == v))
        throw ValidationError("inconsistent structure constants");
      c[at(i, jj, k)] = v;
      given[at(i, jj, k)] = true;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k)
        if (given[at(i, jj, k)] && !given[at(jj, i, k)]) {
          c[at(jj, i, k)] = -c[at(i, jj, k)];
          given[at(jj, i, k)] = true;
        }
  std::vector<typename FinRep<F>::Matrix> act;
  if (j.contains("act"))
    for (const auto &mat : j.at("act")) {
      typename FinRep<F>::Matrix a;
      for (const auto &row : mat) {
        std::vector<F> r;
        for (const auto &x : row)
          r.push_back(F::from_scalar(json_scalar(x)));
        a.push_back(std::move(r));
      }
      act.push_back(std::move(a));
    }
  return FinRep<F>(n, std::move(c), m, std::move(act));
}

template <class F> std::vector<F> json_vector(const Json &j, std::size_t size) {
  if (!j.is_array() || j.size() != size)
    throw ValidationError("expected a coordinate vector of length " + std::to_string(size));
  std::vector<F> out;
  for (const auto &x : j)
    out.push_back(F::from_scalar(json_scalar(x)));
  return out;
}

/// Name "x3" / "y2" to its index within the given pool.
inline Letter json_gen(const std::string &name, char pool) {
  if (name.size() < 2 || name[0] != pool)
    throw ValidationError("expected a generator " + std::string(1, pool) + "<n>, got '" + name + "'");
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw ValidationError("bad generator name '" + name + "'");
  return static_cast<Letter>(std::stoul(name.substr(1)));
}

/// {"kind":"hom","source":"W(..)","target":"W(..)","phi":{"x1":"term"},
///  "psi":{"y1":"term"},"override_l":{"[x1,x2]":"term"},"override_v":{"x1*y1":"term"}}
inline RepHom<FreeRep> load_free_hom(const Json &j) {
  FreeRep src = parse_free_rep(j.at("source").get<std::string>());
  FreeRep tgt = parse_free_rep(j.at("target").get<std::string>());
  RepHom<FreeRep> h{src, tgt, {}, {}, {}, {}};
  if (j.contains("phi"))
    for (const auto &[k, v] : j.at("phi").items())
      h.phi.emplace(json_gen(k, 'x'), parse_lie(v.get<std::string>(), tgt));
  if (j.contains("psi"))
    for (const auto &[k, v] : j.at("psi").items())
      h.psi.emplace(json_gen(k, 'y'), parse_module(v.get<std::string>(), tgt));
  if (j.contains("override_l"))
    for (const auto &[k, v] : j.at("override_l").items()) {
      LieElement key = parse_lie(k, src);
      if (key.terms().size() != 1 || !key.terms().begin()->second.is_one())
        throw ValidationError("override key must be a single basis element: '" + k + "'");
      h.override_l.emplace(key.terms().begin()->first, parse_lie(v.get<std::string>(), tgt));
    }
  if (j.contains("override_v"))
    for (const auto &[k, v] : j.at("override_v").items()) {
      ModuleElement key = parse_module(k, src);
      if (key.terms().size() != 1 || !key.terms().begin()->second.is_one())
        throw ValidationError("override key must be a single basis element: '" + k + "'");
      h.override_v.emplace(key.terms().begin()->first, parse_module(v.get<std::string>(), tgt));
    }
  h.validate();
  return h;
}

/// Same layout with "target" a FinRep object and images given as
/// coordinate vectors.
template <class F> RepHom<FinRep<F>> load_fin_hom(const Json &j) {
  FreeRep src = parse_free_rep(j.at("source").get<std::string>());
  FinRep<F> tgt = load_finrep<F>(j.at("target"));
  RepHom<FinRep<F>> h{src, tgt, {}, {}, {}, {}};
  if (j.contains("phi"))
    for (const auto &[k, v] : j.at("phi").items())
      h.phi.emplace(json_gen(k, 'x'), json_vector<F>(v, tgt.lie_dim()));
  if (j.contains("psi"))
    for (const auto &[k, v] : j.at("psi").items())
      h.psi.emplace(json_gen(k, 'y'), json_vector<F>(v, tgt.module_dim()));
  if (j.contains("override_l"))
    for (const auto &[k, v] : j.at("override_l").items()) {
      LieElement key = parse_lie(k, src);
      if (key.terms().size() != 1 || !key.terms().begin()->second.is_one())
        throw ValidationError("override key must be a single basis element: '" + k + "'");
      h.override_l.emplace(key.terms().begin()->first, json_vector<F>(v, tgt.lie_dim()));
    }
  if (j.contains("override_v"))
    for (const auto &[k, v] : j.at("override_v").items()) {
      ModuleElement key = parse_module(k, src);
      if (key.terms().size() != 1 || !key.terms().begin()->second.is_one())
        throw ValidationError("override key must be a single basis element: '" + k + "'");
      h.override_v.emplace(key.terms().begin()->first, json_vector<F>(v, tgt.module_dim()));
    }
  h.validate();
  return h;
}

/// {"kind":"pdhom","source":"F(m1,m2)","target":"F(m1,m2)","images":{"m1":"term"}}
inline PDHom<FreeRep> load_pd_hom(const Json &j) {
  FreePD src = parse_free_pd(j.at("source").get<std::string>());
  FreePD tgt = parse_free_pd(j.at("target").get<std::string>());
  PDHom<FreeRep> f{src, tgt.rep, {}};
  const auto &imgs = j.at("images");
  for (Letter x : src.rep.X) {
    std::string name = "m" + std::to_string(x);
    if (!imgs.contains(name))
      throw ValidationError("no image for " + name);
    f.images.push_back(parse_pd(imgs.at(name).get<std::string>(), tgt.rep));
  }
  if (imgs.size() != src.rank())
    throw ValidationError("images given for generators outside the source");
  return f;
}

} // namespace liepd

#endif

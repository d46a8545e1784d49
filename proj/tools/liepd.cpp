#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liepd/liepd.hpp"

using namespace liepd;

namespace {

std::size_t default_degree() {
  if (const char *env = std::getenv("LIEPD_DEGREE")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return static_cast<std::size_t>(v);
    throw ValidationError(std::string("LIEPD_DEGREE must be a positive integer, got '") + env + "'");
  }
  return 3;
}

Json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open '" + path + "'");
  return Json::parse(in);
}

std::string kind_of(const Json &j) { return j.contains("kind") ? j.at("kind").get<std::string>() : ""; }

/// Runs f with the field type named by "Q" or "Fp:p".
template <class Fn> void with_field(const std::string &name, bool need_finite, Fn &&fn) {
  if (name == "Q") {
    if (need_finite)
      throw ValidationError("this command needs a finite field (Fp:2, Fp:3 or Fp:5)");
    fn(Scalar{});
  } else if (name == "Fp:2")
    fn(Fp<2>{});
  else if (name == "Fp:3")
    fn(Fp<3>{});
  else if (name == "Fp:5")
    fn(Fp<5>{});
  else
    throw ValidationError("unknown field '" + name + "' (use Q, Fp:2, Fp:3 or Fp:5)");
}

int cmd_nf(const std::string &src, const std::string &mode) {
  TermPtr t = parse_term(src);
  std::cout << eval_term(*t, mode == "pd" ? Mode::PD : Mode::Rep).to_string() << "\n";
  return 0;
}

int cmd_check_hom(const std::string &file, std::size_t d) {
  Json j = read_json(file);
  if (j.at("target").is_string()) {
    std::cout << hom_check(load_free_hom(j), d).to_string() << "\n";
    return 0;
  }
  with_field(json_field(j.at("target")), false, [&](auto tag) {
    using F = decltype(tag);
    std::cout << hom_check(load_fin_hom<F>(j), d).to_string() << "\n";
  });
  return 0;
}

template <class F> void print_pd_structure(const FinRep<F> &h) {
  const std::size_t n = h.lie_dim(), m = h.module_dim();
  std::cout << "pd algebra of dimension " << n + m << " (" << n << " + " << m << ")\n";
  auto basis = [&](std::size_t i) {
    FinPDElement<F> e{h.zero_l(), h.zero_v()};
    if (i < n)
      e.l[i] = F::one();
    else
      e.v[i - n] = F::one();
    return e;
  };
  auto name = [&](std::size_t i) { return i < n ? "e" + std::to_string(i + 1) : "f" + std::to_string(i - n + 1); };
  for (std::size_t i = 0; i < n + m; ++i)
    for (std::size_t j = i + 1; j < n + m; ++j) {
      auto b = pd_bracket(h, basis(i), basis(j));
      if (!all_zero(b.l) || !all_zero(b.v))
        std::cout << "[" << name(i) << "," << name(j) << "] = " << b.to_string() << "\n";
    }
  std::cout << "p: e1..e" << n << " -> 0, f1..f" << m << " fixed\n";
}

int cmd_f_apply(const std::string &file) {
  Json j = read_json(file);
  const std::string kind = kind_of(j);
  if (kind == "rep") {
    std::cout << functor_F(parse_free_rep(j.at("rep").get<std::string>())).to_string() << "\n";
  } else if (kind == "finrep") {
    with_field(json_field(j), false, [&](auto tag) {
      using F = decltype(tag);
      print_pd_structure(functor_F(load_finrep<F>(j)));
    });
  } else if (kind == "hom") {
    auto print = [](const auto &f) {
      std::cout << f.source.to_string() << "\n";
      for (std::size_t i = 0; i < f.images.size(); ++i)
        std::cout << "m" << f.source.rep.X.begin()[i] << " -> " << f.images[i].to_string() << "\n";
    };
    if (j.at("target").is_string())
      print(functor_F_hom(load_free_hom(j)));
    else
      with_field(json_field(j.at("target")), false, [&](auto tag) {
        using F = decltype(tag);
        print(functor_F_hom(load_fin_hom<F>(j)));
      });
  } else {
    throw ValidationError("f-apply expects kind rep, finrep or hom, got '" + kind + "'");
  }
  return 0;
}

int cmd_finv_apply(const std::string &file) {
  Json j = read_json(file);
  const std::string kind = kind_of(j);
  if (kind == "pd") {
    std::cout << functor_Finv(parse_free_pd(j.at("pd").get<std::string>())).to_string() << "\n";
  } else if (kind == "finrep") {
    with_field(json_field(j), false, [&](auto tag) {
      using F = decltype(tag);
      auto h = functor_Finv(load_finrep<F>(j));
      std::cout << "representation: ker p of dimension " << h.lie_dim() << ", im p of dimension "
                << h.module_dim() << "\n";
    });
  } else if (kind == "pdhom") {
    auto h = functor_Finv_hom(load_pd_hom(j));
    std::cout << h.source.to_string() << " -> " << h.target.to_string() << "\n";
    for (const auto &[x, img] : h.phi)
      std::cout << letter_name('x', x) << " -> " << img.to_string() << "\n";
    for (const auto &[y, img] : h.psi)
      std::cout << letter_name('y', y) << " -> " << img.to_string() << "\n";
  } else {
    throw ValidationError("finv-apply expects kind pd, finrep or pdhom, got '" + kind + "'");
  }
  return 0;
}

int cmd_rank(const std::string &rep, std::size_t d) {
  auto [a, b] = rank_invariants(parse_free_rep(rep), std::max<std::size_t>(d, 2));
  std::cout << a << " " << b << "\n";
  return 0;
}

int cmd_word_classify(int range, std::size_t d) {
  if (range < 0)
    throw ValidationError("--range must be non-negative");
  std::vector<Scalar> r;
  for (int i = -range; i <= range; ++i)
    r.emplace_back(i);
  auto cls = word_classify(r, d);
  std::cout << "# candidate table (verified up to degree " << d << ")\n";
  for (const auto &c : cls.table)
    std::cout << c.component << " " << c.params << " " << c.verdict << "\n";
  std::cout << "# survivors: " << cls.survivors.size() << "\n";
  for (std::size_t i = 0; i < cls.survivors.size(); ++i)
    std::cout << "survivor alpha=" << cls.survivor_alpha[i].to_string() << " " << cls.survivors[i].describe()
              << " inner=" << (cls.inner[i] ? "yes" : "no") << "\n";
  return 0;
}

template <class F>
void run_closure(const Json &finrep, const FreeRep &w, const std::vector<std::string> &gens, std::size_t d,
                 const std::vector<std::string> &beta) {
  FinRep<F> h = load_finrep<F>(finrep);
  std::vector<LieElement> gl;
  std::vector<ModuleElement> gv;
  for (const auto &g : gens) {
    auto v = eval_term(*parse_term(g), Mode::Rep, w);
    if (v.sort == TermSort::L)
      gl.push_back(v.value.l);
    else if (v.sort == TermSort::V)
      gv.push_back(v.value.v);
  }
  auto t = CongruencePair<F>::from_elements(w, gl, gv, d);
  std::cout << "T " << t.to_string() << "\n";
  std::cout << double_prime(t, h).to_string() << "\n";
  if (!beta.empty()) {
    if (beta.size() != 2)
      throw ValidationError("--beta takes exactly two hom files");
    auto h1 = load_free_hom(read_json(beta[0]));
    auto h2 = load_free_hom(read_json(beta[1]));
    std::cout << "beta: " << (beta_related(h1, h2, t) ? "related" : "not related") << "\n";
  }
}

int cmd_closure(const std::string &field, const std::string &finrep, const std::string &rep,
                const std::vector<std::string> &gens, std::size_t d, const std::vector<std::string> &beta) {
  Json j = read_json(finrep);
  FreeRep w = parse_free_rep(rep);
  with_field(field, true, [&](auto tag) {
    using F = decltype(tag);
    if constexpr (is_finite_field<F>::value)
      run_closure<F>(j, w, gens, d, beta);
  });
  return 0;
}

int cmd_coproduct(const std::vector<std::string> &reps) {
  if (reps.size() != 2)
    throw ValidationError("coproduct takes exactly two --rep arguments");
  auto cp = coproduct(parse_free_rep(reps[0]), parse_free_rep(reps[1]));
  std::cout << cp.sum.to_string() << "\n";
  auto print = [](const char *label, const RepHom<FreeRep> &h) {
    std::cout << label;
    for (const auto &[x, img] : h.phi)
      std::cout << " " << letter_name('x', x) << "->" << img.to_string();
    for (const auto &[y, img] : h.psi)
      std::cout << " " << letter_name('y', y) << "->" << img.to_string();
    std::cout << "\n";
  };
  print("inj1:", cp.inj1);
  print("inj2:", cp.inj2);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Free Lie representations and projection-derivation algebras"};
  app.require_subcommand(1);

  std::size_t degree = 3;
  try {
    degree = default_degree();
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  std::string term, mode = "rep";
  auto *nf = app.add_subcommand("nf", "normal form of a term");
  nf->add_option("term", term, "term text")->required();
  nf->add_option("--mode", mode, "rep or pd")->check(CLI::IsMember({"rep", "pd"}));

  std::string file;
  auto *check = app.add_subcommand("check-hom", "check a hom file up to a degree");
  check->add_option("--file", file)->required();
  check->add_option("--degree", degree);

  auto *fapply = app.add_subcommand("f-apply", "apply F to an object or hom file");
  fapply->add_option("--file", file)->required();
  auto *finv = app.add_subcommand("finv-apply", "apply the inverse functor to an object or hom file");
  finv->add_option("--file", file)->required();

  std::string rep;
  auto *rank = app.add_subcommand("rank", "print dim L/L^2 and dim V/LV");
  rank->add_option("--rep", rep)->required();
  rank->add_option("--degree", degree);

  int range = 2;
  auto *classify = app.add_subcommand("word-classify", "run the word solvers and print the table");
  classify->add_option("--range", range, "coefficients run over -R..R");
  classify->add_option("--degree", degree);

  std::string field = "Fp:2", finrep;
  std::vector<std::string> gens, beta;
  auto *closure = app.add_subcommand("closure", "finite-model closure of a congruence pair");
  closure->add_option("--field", field);
  closure->add_option("--finrep", finrep)->required();
  closure->add_option("--rep", rep)->required();
  closure->add_option("--gen", gens, "generating term (repeatable)");
  closure->add_option("--degree", degree);
  closure->add_option("--beta", beta, "two hom files to test for the beta relation");

  std::vector<std::string> reps;
  auto *cop = app.add_subcommand("coproduct", "coproduct of two free representations");
  cop->add_option("--rep", reps)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*nf)
      return cmd_nf(term, mode);
    if (*check)
      return cmd_check_hom(file, degree);
    if (*fapply)
      return cmd_f_apply(file);
    if (*finv)
      return cmd_finv_apply(file);
    if (*rank)
      return cmd_rank(rep, degree);
    if (*classify)
      return cmd_word_classify(range, degree);
    if (*closure)
      return cmd_closure(field, finrep, rep, gens, degree, beta);
    if (*cop)
      return cmd_coproduct(reps);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const SortError &e) {
    std::cerr << "sort error: " << e.what() << "\n";
    return 2;
  } catch (const ContextError &e) {
    std::cerr << "context error: " << e.what() << "\n";
    return 2;
  } catch (const RankError &e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return 2;
  } catch (const ArityError &e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <optional>

#include "interp/comb.hpp"
#include "interp/errors.hpp"
#include "interp/group.hpp"
#include "interp/inverse_solve.hpp"
#include "interp/io.hpp"
#include "interp/lie_exp.hpp"
#include "interp/polymat.hpp"
#include "interp/riordan.hpp"

using namespace interp;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConsistency = 4;

struct Globals {
  std::optional<int> order;
  int sdeg = 6;
  std::string format = "json";
};

struct CheckFailed {
  std::string output;
};

io::Format fmt(const Globals& g) { return io::parse_format(g.format); }

// Plain coefficient lists are exact polynomials and get padded up to --order.
SeriesQ series_arg(const std::string& text, const Globals& g) {
  SeriesQ s = io::parse_series(text);
  if (!g.order) return s;
  if (*g.order < 0) throw ValidationError("--order must be >= 0");
  const auto first = text.find_first_not_of(" \t");
  const bool plain = first != std::string::npos && text[first] != '@' && text[first] != '{' && text.compare(first, 7, "preset:") != 0;
  if (plain && s.order() < *g.order) return SeriesQ(s.val(), s.coeffs(), *g.order);
  return s.truncated(*g.order);
}

int order_or(const Globals& g, int fallback) { return g.order.value_or(fallback); }

std::string render_record(const json& j, io::Format f) {
  if (f == io::Format::json) return j.dump() + "\n";
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
    out += f == io::Format::csv ? it.key() + "," + (v.find(',') != std::string::npos ? "\"" + v + "\"" : v) + "\n"
                                : it.key() + ": " + v + "\n";
  }
  return out;
}

bool all_zero(const SeriesQ& a) { return a == SeriesQ::zero(a.order()); }
bool all_zero(const SeriesP& a) { return a == SeriesP::zero(a.order()); }

std::string check_result(json j, bool ok, const Globals& g) {
  j["ok"] = ok;
  std::string out = render_record(j, fmt(g));
  if (!ok) throw CheckFailed{out};
  return out;
}

std::vector<Rat> padded_weights(const std::string& text, int m) {
  std::vector<Rat> w = io::parse_rat_list(text);
  if (static_cast<int>(w.size()) < m + 1) w.resize(static_cast<std::size_t>(m + 1), Rat(0));
  return w;
}

json rat_array(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(io::to_json(q));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation group, Riordan matrices and Exp(alpha; beta) in exact arithmetic"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--order", g.order, "Truncation order N");
  app.add_option("--sdeg", g.sdeg, "Degree M of s-jets")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::function<std::string()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string a1, alpha1, a2, alpha2;
  std::string kappa = "1", lambda = "0", mu = "0", tau = "1", variant = "G";
  std::string alpha_s, beta_s, gamma_s, w_s, p_s, b_s, relation = "quadratic";
  std::optional<int> dim;
  int n = 0, k = 2;
  bool flag = false;
  std::string kind = "all";

  auto* mul = sub("mul", "Group product (A1, alpha1)(A2, alpha2)");
  mul->add_option("--a1", a1)->required();
  mul->add_option("--alpha1", alpha1)->required();
  mul->add_option("--a2", a2)->required();
  mul->add_option("--alpha2", alpha2)->required();
  mul->callback([&] {
    action = [&] {
      return io::render(gmul(GroupElem(series_arg(a1, g), series_arg(alpha1, g)),
                             GroupElem(series_arg(a2, g), series_arg(alpha2, g))),
                        fmt(g));
    };
  });

  auto* inv = sub("inv", "Group inverse");
  inv->add_option("--a", a1)->required();
  inv->add_option("--alpha", alpha1)->required();
  inv->callback([&] { action = [&] { return io::render(ginv(GroupElem(series_arg(a1, g), series_arg(alpha1, g))), fmt(g)); }; });

  auto* phic = sub("phi", "Endomorphism phi_{kappa,lambda,mu}");
  phic->add_option("--a", a1)->required();
  phic->add_option("--alpha", alpha1)->required();
  phic->add_option("--kappa", kappa);
  phic->add_option("--lambda", lambda);
  phic->add_option("--mu", mu);
  phic->add_flag("--inverse", flag, "Apply the inverse endomorphism");
  phic->callback([&] {
    action = [&] {
      GroupElem e(series_arg(a1, g), series_arg(alpha1, g));
      Rat kq = parse_rat(kappa), lq = parse_rat(lambda), mq = parse_rat(mu);
      if (flag) {
        const auto inv_e = phi_inverse_exponents(kq, lq, mq);
        kq = inv_e.kappa;
        lq = inv_e.lambda;
        mq = inv_e.mu;
      }
      return io::render(phi(e, kq, lq, mq), fmt(g));
    };
  });

  auto* interpc = sub("interp", "Interpolation between series inverse and reversion");
  interpc->add_option("--a", a1)->required();
  interpc->add_option("--tau", tau);
  interpc->add_option("--variant", variant)->check(CLI::IsMember({"G", "Gprime"}));
  interpc->callback([&] {
    action = [&] {
      const auto v = variant == "G" ? InterpVariant::G : InterpVariant::Gprime;
      return io::render(interp_inverse(series_arg(a1, g), parse_rat(tau), v), fmt(g));
    };
  });

  auto* rhoc = sub("rho", "Riordan matrix rho(A, alpha)");
  rhoc->add_option("--a", a1)->required();
  rhoc->add_option("--alpha", alpha1)->required();
  rhoc->add_option("--n", dim, "Dimension (default order + 1)");
  rhoc->callback([&] {
    action = [&] {
      GroupElem e(series_arg(a1, g), series_arg(alpha1, g));
      return io::render(rho(e, dim.value_or(e.order() + 1)), fmt(g));
    };
  });

  auto* aseq = sub("aseq", "A-sequence of rho(A, alpha)");
  aseq->add_option("--a", a1)->required();
  aseq->add_option("--alpha", alpha1)->required();
  aseq->add_option("--n", dim);
  aseq->add_option("--check-a", w_s, "Verify this A-sequence instead of extracting one");
  aseq->callback([&] {
    action = [&] {
      GroupElem e(series_arg(a1, g), series_arg(alpha1, g));
      const int nn = dim.value_or(e.order() + 1);
      if (!w_s.empty()) {
        const auto bad = aseq_violation(rho(e, nn), io::parse_rat_list(w_s));
        json j{{"n", nn}};
        if (bad) j["violation"] = {bad->first, bad->second};
        return check_result(j, !bad, g);
      }
      const auto a = aseq_extract(rho(e, nn));
      const SeriesQ f = aseq_formula(e.alpha());
      bool agree = true;
      for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= f.order(); ++i) agree = agree && a[i] == f.coef(static_cast<int>(i));
      return check_result({{"a", rat_array(a)}, {"formula", io::to_json(f)}}, agree, g);
    };
  });

  auto* toep = sub("toeplitz", "Matrix of the Toeplitz-determinant polynomials");
  toep->add_option("--a", a1, "Coefficients a_0, a_1, ...")->required();
  toep->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  toep->callback([&] { action = [&] { return io::render(toeplitz_matrix(toeplitz_d(io::parse_rat_list(a1), n), n), fmt(g)); }; });

  auto* expc = sub("exp", "Exp(alpha; beta) for alpha, beta in m");
  expc->add_option("--alpha", alpha_s)->required();
  expc->add_option("--beta", beta_s)->required();
  expc->callback([&] {
    action = [&] {
      const SeriesQ a = series_arg(alpha_s, g), b = series_arg(beta_s, g);
      return io::render(Exp_strict(a, b, order_or(g, std::min(a.order(), b.order()))), fmt(g));
    };
  });

  auto* exps_c = sub("exp-spoly", "s-jet of Exp(s alpha; s beta)");
  exps_c->add_option("--alpha", alpha_s)->required();
  exps_c->add_option("--beta", beta_s)->required();
  exps_c->callback([&] {
    action = [&] {
      const SeriesQ a = series_arg(alpha_s, g), b = series_arg(beta_s, g);
      return io::render(Exp_spoly(a, b, order_or(g, std::min(a.order(), b.order())), g.sdeg), fmt(g));
    };
  });

  auto* ode = sub("ode-check", "Residuals of the differential system for Exp");
  ode->add_option("--alpha", alpha_s)->required();
  ode->add_option("--beta", beta_s)->required();
  ode->add_flag("--spoly", flag, "Use s-jets (any constant terms)");
  ode->callback([&] {
    action = [&] {
      const SeriesQ a = series_arg(alpha_s, g), b = series_arg(beta_s, g);
      const int nn = order_or(g, std::min(a.order(), b.order()));
      if (flag) {
        auto [ry, rz] = ode_residual_spoly(a, b, nn, g.sdeg);
        return check_result({{"y_residual", io::to_json(ry)}, {"z_residual", io::to_json(rz)}}, all_zero(ry) && all_zero(rz), g);
      }
      auto [ry, rz] = ode_residual_main(a, b, nn);
      return check_result({{"y_residual", io::to_json(ry)}, {"z_residual", io::to_json(rz)}}, all_zero(ry) && all_zero(rz), g);
    };
  });

  auto* fch = sub("f-check", "F(x Exp(s beta; s beta)) - F(x) - s");
  fch->add_option("--beta", beta_s)->required();
  fch->callback([&] {
    action = [&] {
      const SeriesQ b = series_arg(beta_s, g);
      const SeriesP r = f_invariant_residual(b, b.order() - 2, g.sdeg);
      return check_result({{"residual", io::to_json(r)}}, all_zero(r), g);
    };
  });

  auto* alg = sub("alg-check", "Algebraic relations satisfied by x Exp(s beta; s beta)");
  alg->add_option("--relation", relation)->check(CLI::IsMember({"quadratic", "quartic"}));
  alg->add_option("--k", k, "Family index for the quartic relation")->check(CLI::NonNegativeNumber);
  alg->callback([&] {
    action = [&] {
      const int nn = order_or(g, 10);
      SeriesP z, r;
      if (relation == "quadratic") {
        const SeriesQ b = beta_family(0, nn);
        z = Exp_spoly(b, b, nn, g.sdeg);
        r = algebraic_residual(quadratic_relation(nn), z, g.sdeg).truncated(nn);
      } else {
        const SeriesQ b = beta_family(k, nn);
        z = shift(Exp_spoly(b, b, nn, g.sdeg), 1);
        r = algebraic_residual(quartic_relation(k, nn), z, g.sdeg).truncated(nn);
      }
      json j{{"relation", relation}, {"residual", io::to_json(r)}};
      if (g.sdeg >= nn) j["at_s_1"] = io::to_json(eval_param(z, 1).truncated(nn));
      return check_result(j, all_zero(r), g);
    };
  });

  auto* sa = sub("solve-alpha", "alpha in m with Exp(alpha; beta) = gamma");
  sa->add_option("--beta", beta_s)->required();
  sa->add_option("--gamma", gamma_s)->required();
  sa->callback([&] {
    action = [&] {
      const SeriesQ b = series_arg(beta_s, g), c = series_arg(gamma_s, g);
      return io::render(solve_alpha(b, c, order_or(g, std::min(b.order(), c.order()))), fmt(g));
    };
  });

  auto* sb = sub("solve-beta", "beta in m with Exp(beta; beta) = gamma");
  sb->add_option("--gamma", gamma_s)->required();
  sb->callback([&] {
    action = [&] {
      const SeriesQ c = series_arg(gamma_s, g);
      return io::render(solve_beta(c, order_or(g, c.order())), fmt(g));
    };
  });

  auto* glog = sub("group-log", "(alpha, beta) with exp(u_alpha + d_beta) = rho(A, alpha)");
  glog->add_option("--a", a1)->required();
  glog->add_option("--alpha", alpha1)->required();
  glog->callback([&] {
    action = [&] {
      const LieElem l = group_log(GroupElem(series_arg(a1, g), series_arg(alpha1, g)));
      switch (fmt(g)) {
        case io::Format::json:
          return json{{"a", io::to_json(l.a())}, {"b", io::to_json(l.b())}}.dump() + "\n";
        case io::Format::csv: {
          std::string out = "exponent,a,b\n";
          for (int e = 0; e <= l.order(); ++e) out += std::to_string(e) + "," + to_string(l.a().coef(e)) + "," + to_string(l.b().coef(e)) + "\n";
          return out;
        }
        case io::Format::pretty:
          break;
      }
      return "a = " + to_string(l.a()) + "\nb = " + to_string(l.b()) + "\n";
    };
  });

  auto* z0 = sub("z0", "Z_0 for EGF weights W_0, W_1, ...");
  z0->add_option("--w", w_s, "Weights W_0,W_1,... (missing ones are 0)")->required();
  z0->callback([&] {
    action = [&] {
      const auto w = padded_weights(w_s, g.sdeg);
      return io::render(z0_series<Rat>(w, g.sdeg), fmt(g));
    };
  });

  auto* z0b = sub("z0-brute", "Sum of e_W(f) over admissible f on {1..n}");
  z0b->add_option("--w", w_s)->required();
  z0b->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  z0b->callback([&] {
    action = [&] {
      const auto w = padded_weights(w_s, n);
      const Rat brute = z0_bruteforce<Rat>(w, n);
      const Rat series = z0_series<Rat>(w, n).coef(n) * factorial(n);
      return check_result({{"n", n}, {"bruteforce", io::to_json(brute)}, {"series", io::to_json(series)}}, brute == series, g);
    };
  });

  auto* andre = sub("andre", "Andre polynomial A_n(t)");
  andre->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  andre->add_flag("--brute", flag, "Cross-check by enumeration");
  andre->callback([&] {
    action = [&] {
      const Poly a = andre_poly(n);
      json j{{"n", n}, {"coeffs", rat_array(a.coeffs())}, {"poly", to_string(a)}};
      if (!flag) return render_record(j, fmt(g));
      return check_result(j, andre_bruteforce(n) == a, g);
    };
  });

  auto* trees = sub("trees", "Increasing trees through admissible functions");
  trees->add_option("--n", n, "Number of non-root vertices (all) or vertices (S, E)")->required()->check(CLI::NonNegativeNumber);
  trees->add_option("--kind", kind)->check(CLI::IsMember({"all", "S", "E"}));
  trees->callback([&] {
    action = [&] {
      if (kind == "all") {
        if (n > 7) throw ValidationError("trees: listing limited to n <= 7");
        json list = json::array();
        for_each_admissible(n, [&](const AdmissibleFun& f) {
          const RootedTree t = tree_from_admissible(f);
          list.push_back({{"rank", admissible_rank(f)}, {"f", f.f}, {"parent", t.parent}});
        });
        if (fmt(g) == io::Format::json) return json{{"n", n}, {"trees", list}}.dump() + "\n";
        std::string out = fmt(g) == io::Format::csv ? "rank,f,parent\n" : "";
        for (const auto& e : list) {
          auto join = [](const json& a) {
            std::string s;
            for (const auto& x : a) s += (s.empty() ? "" : " ") + std::to_string(x.get<int>());
            return s;
          };
          out += fmt(g) == io::Format::csv ? std::to_string(e["rank"].get<std::uint64_t>()) + "," + join(e["f"]) + "," + join(e["parent"]) + "\n"
                                           : "#" + std::to_string(e["rank"].get<std::uint64_t>()) + " f = (" + join(e["f"]) + ") parent = (" + join(e["parent"]) + ")\n";
        }
        return out;
      }
      json counts = json::array();
      for (int kk = 0; kk <= n; ++kk) counts.push_back(kind == "S" ? count_S(n, kk) : count_E(n, kk));
      return render_record({{"kind", kind}, {"vertices", n}, {"counts", counts}}, fmt(g));
    };
  });

  auto* idc = sub("idcomben", "Leaf counts of degree-<=2 trees vs interior counts of even trees");
  idc->add_option("--n", n, "Half the vertex count, 2n <= 10")->required()->check(CLI::NonNegativeNumber);
  idc->callback([&] {
    action = [&] {
      const bool ok = idcomben_check(n);
      json s = json::array(), e = json::array();
      if (n > 0)
        for (int kk = 0; kk <= 2 * n + 1; ++kk) {
          s.push_back(count_S(2 * n, kk));
          e.push_back(count_E(2 * n + 1, kk));
        }
      return check_result({{"n", n}, {"S", s}, {"E", e}}, ok, g);
    };
  });

  auto* uode = sub("u-ode", "Residual of W_0 U' = W(W_0 U) for U the primitive of Z_0");
  uode->add_option("--w", w_s)->required();
  uode->callback([&] {
    action = [&] {
      const SeriesQ r = u_ode_residual(padded_weights(w_s, g.sdeg), g.sdeg);
      return check_result({{"residual", io::to_json(r)}}, all_zero(r), g);
    };
  });

  auto* pmm = sub("polymat-mul", "Product (or bracket) of polynomial matrices");
  pmm->add_option("--a", p_s, "PolyMat JSON or @file")->required();
  pmm->add_option("--b", b_s, "PolyMat JSON or @file")->required();
  pmm->add_flag("--bracket", flag);
  pmm->callback([&] {
    action = [&] {
      const PolyMat a = io::parse_polymat(p_s), b = io::parse_polymat(b_s);
      return io::render(flag ? pm_bracket(a, b) : pm_mul(a, b), fmt(g));
    };
  });

  auto* pme = sub("polymat-exp", "exp (or log) of a polynomial matrix");
  pme->add_option("--p", p_s, "PolyMat JSON or @file")->required();
  pme->add_flag("--log", flag);
  pme->callback([&] {
    action = [&] {
      const PolyMat p = io::parse_polymat(p_s);
      return io::render(flag ? pm_log(p) : pm_exp(p), fmt(g));
    };
  });

  auto* pmt = sub("polymat-tau", "Argument shift tau_lambda");
  pmt->add_option("--p", p_s, "PolyMat JSON or @file")->required();
  pmt->add_option("--lambda", lambda);
  pmt->callback([&] { action = [&] { return io::render(tau_lambda(io::parse_polymat(p_s), parse_rat(lambda)), fmt(g)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    std::cout << action();
    return kExitOk;
  } catch (const CheckFailed& f) {
    std::cout << f.output;
    std::cerr << "check failed\n";
    return kExitConsistency;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
}

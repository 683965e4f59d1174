// Command-line front end: pf, pf-modular, pf-smooth, reduce, series, verify, dims.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "telescoper/algebra/rational_field.hpp"
#include "telescoper/cli/parser.hpp"
#include "telescoper/errors.hpp"
#include "telescoper/modular/modular.hpp"
#include "telescoper/picardfuchs/driver.hpp"
#include "telescoper/picardfuchs/integrand.hpp"
#include "telescoper/picardfuchs/operator.hpp"
#include "telescoper/picardfuchs/series.hpp"
#include "telescoper/reduction/engine.hpp"

using json = nlohmann::json;
using namespace tel;

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kResource = 3, kDegenerate = 4, kUnconfirmed = 5, kRejected = 6 };

struct Common {
  std::string input;
  std::string mode = "exact";
  int r_start = 1;
  int max_r = 8;
  int prime_bits = 31;
  int primes = 0;
  int points = 8;
  std::uint64_t seed = 1;
  bool certificates = false;
  double budget = 0;
  bool json_out = false;
  bool x0 = false;
  bool serial = false;
};

std::string read_input(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw Error("cannot read " + s.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, ',')) {
    if (!x.empty()) out.push_back(x);
  }
  return out;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json operator_json(const DiffOperator& L) {
  json j;
  j["order"] = L.order();
  j["coeffs"] = json::array();
  for (const auto& c : L.coeffs) j["coeffs"].push_back(zpoly::to_string(c));
  ThetaOperator T = to_theta(L);
  j["theta_coeffs"] = json::array();
  for (const auto& r : T.rows) j["theta_coeffs"].push_back(zpoly::to_string(r, "theta"));
  return j;
}

void print_operator(const DiffOperator& L) {
  std::cout << "operator: " << to_string(L) << "\n";
  std::cout << "theta form: " << to_string(to_theta(L)) << "\n";
}

HomogeneousIntegrand integrand_of(const Common& c) { return homogenize(parse_rational(read_input(c.input)), c.x0); }

int run_pf(const Common& c, const std::string& cmd) {
  auto t0 = std::chrono::steady_clock::now();
  HomogeneousIntegrand H = integrand_of(c);
  json out;
  DiffOperator L;
  if (cmd == "pf-modular" || c.mode == "modular") {
    ModularOptions o;
    o.r_start = c.r_start;
    o.max_r = c.max_r;
    o.prime_bits = c.prime_bits;
    o.primes = c.primes;
    o.initial_points = c.points;
    o.seed = c.seed;
    o.parallel = !c.serial;
    o.budget_seconds = c.budget;
    ModularResult res = picard_fuchs_modular(H, o);
    L = res.op;
    out = operator_json(L);
    out["r_used"] = res.r_used;
    out["certified"] = false;
    out["primes"] = res.primes.size();
    out["confirmation_prime"] = res.confirmation_prime;
    out["points_per_prime"] = res.points_per_prime;
    out["confirmed"] = true;
  } else {
    QtField K;
    EngineOptions eo;
    eo.certificates = c.certificates;
    ReductionEngine<QtField> E(K, H.f, H.nvars, eo);
    PFOptions o;
    o.r_start = c.r_start;
    o.max_r = c.max_r;
    o.certificates = c.certificates;
    o.budget_seconds = c.budget;
    PFResult<QtField> res = cmd == "pf-smooth" ? picard_fuchs_smooth(E, H.a, o) : picard_fuchs(E, H.a, o);
    L = normalize_operator(res.relation);
    out = operator_json(L);
    out["r_used"] = res.r_used;
    bool certified = false;
    if (c.certificates) {
      auto chk = verify_certificates(K, H.f, H.nvars, H.a, res.rhos, res.betas, res.relation);
      certified = chk.ok;
      if (!chk.ok) {
        std::cerr << "certificate check failed at index " << chk.failed_index << "\n";
        return kRejected;
      }
    }
    out["certified"] = certified;
  }
  out["timings"] = {{"total_seconds", since(t0)}};
  print_operator(L);
  std::cout << "r used: " << out["r_used"] << "\n";
  if (c.json_out) std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_reduce(const Common& c, const std::string& f_text, const std::string& alpha_text, const std::string& vars,
               int r, bool gd) {
  std::vector<std::string> names = split_names(vars);
  QtField K;
  QtPoly f = parse_polynomial(read_input(f_text), names);
  QtPoly alpha = parse_polynomial(read_input(alpha_text), names);
  EngineOptions eo;
  eo.certificates = c.certificates;
  ReductionEngine<QtField> E(K, f, static_cast<int>(names.size()), eo);
  NForm<QtField> cert;
  TopForm<QtField> out = gd ? E.reduce_gd(alpha, c.certificates ? &cert : nullptr)
                            : E.reduce_r(alpha, r, c.certificates ? &cert : nullptr);
  const int q = out.is_zero() ? 0 : forms::pole_order(E.ctx(), out);
  std::cout << "reduction: " << poly::to_string(K, out, names) << "\n";
  std::cout << "pole order: " << q << "\n";
  json j;
  j["reduction"] = poly::to_string(K, out, names);
  j["pole_order"] = q;
  if (c.certificates) {
    json b = json::array();
    for (const auto& p : cert) b.push_back(poly::to_string(K, p, names));
    j["certificate"] = b;
    const bool ok = poly::equal(K, poly::sub(K, alpha, out), forms::twisted_D(K, E.partials(), cert));
    j["certified"] = ok;
    std::cout << "certificate: " << (ok ? "verified" : "FAILED") << "\n";
    if (!ok) return kRejected;
  }
  if (c.json_out) std::cout << j.dump(2) << "\n";
  return kOk;
}

int run_series(const Common& c, int terms) {
  LaurentPoly g = parse_laurent(read_input(c.input), ParseOptions{});
  SeriesOptions so;
  so.parallel = !c.serial;
  auto s = constant_term_series(g, terms, so);
  json arr = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::cout << (i ? ", " : "") << s[i].get_str();
    arr.push_back(s[i].get_str());
  }
  std::cout << "\n";
  if (c.json_out) std::cout << json{{"series", arr}}.dump(2) << "\n";
  return kOk;
}

int run_verify(const Common& c, const std::string& theta_text, int terms) {
  auto t0 = std::chrono::steady_clock::now();
  LaurentPoly g = parse_laurent(read_input(c.input), ParseOptions{});
  ThetaOperator T;
  json out;
  if (!theta_text.empty()) {
    T = parse_theta_operator(read_input(theta_text));
  } else {
    HomogeneousIntegrand H = homogenize(laurent_to_rational(g), c.x0);
    QtField K;
    EngineOptions eo;
    eo.certificates = c.certificates;
    ReductionEngine<QtField> E(K, H.f, H.nvars, eo);
    PFOptions o;
    o.r_start = c.r_start;
    o.max_r = c.max_r;
    o.certificates = c.certificates;
    o.budget_seconds = c.budget;
    auto res = picard_fuchs(E, H.a, o);
    DiffOperator L = normalize_operator(res.relation);
    print_operator(L);
    out = operator_json(L);
    if (c.certificates) {
      auto chk = verify_certificates(K, H.f, H.nvars, H.a, res.rhos, res.betas, res.relation);
      out["certified"] = chk.ok;
      std::cout << "certificates: " << (chk.ok ? "verified" : "FAILED") << "\n";
      if (!chk.ok) return kRejected;
    }
    T = to_theta(L);
  }
  SeriesOptions so;
  so.parallel = !c.serial;
  auto s = constant_term_series(g, terms, so);
  const bool ok = operator_annihilates_series(T, s);
  std::cout << "series check (" << terms << " terms): " << (ok ? "annihilated" : "NOT annihilated") << "\n";
  out["annihilates_series"] = ok;
  out["timings"] = {{"total_seconds", since(t0)}};
  if (c.json_out) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kRejected;
}

template <class F>
json dims_table(ReductionEngine<F>& E, int r, int qmax, bool syz) {
  json j;
  std::vector<int> row;
  for (int q = 0; q <= qmax; ++q) row.push_back(E.dim_E(r, q));
  j["dim_E"] = row;
  std::cout << "dim E_q^" << r << ":";
  for (int v : row) std::cout << " " << v;
  std::cout << "\n";
  if (syz) {
    std::vector<int> S, St, A;
    for (int q = 0; q <= qmax; ++q) {
      S.push_back(E.dim_S(q));
      St.push_back(E.dim_S_trivial(q));
      A.push_back(E.dim_A(q));
    }
    auto print = [&](const char* name, const std::vector<int>& v) {
      std::cout << name << ":";
      for (int x : v) std::cout << " " << x;
      std::cout << "\n";
    };
    print("dim S_q ", S);
    print("dim S'_q", St);
    print("dim A_q ", A);
    j["dim_S"] = S;
    j["dim_S_trivial"] = St;
    j["dim_A"] = A;
  }
  return j;
}

int run_dims(const Common& c, const std::string& f_text, const std::string& vars, int r, int qmax, bool syz,
             std::uint32_t prime) {
  std::vector<std::string> names = split_names(vars);
  QtField Q;
  QtPoly f = parse_polynomial(read_input(f_text), names);
  const int nv = static_cast<int>(names.size());
  json j;
  if (prime) {
    PrimeField K(prime);
    Poly<PrimeField> fp = poly::map_coeffs(K, f, [&](const QtElem& a) {
      if (!Q.is_polynomial(a) || a.num.size() > 1) throw Error("dims modulo p needs constant coefficients");
      return a.num.empty() ? 0u : K.from_mpz(a.num[0]);
    });
    ReductionEngine<PrimeField> E(K, fp, nv);
    j = dims_table(E, r, qmax, syz);
  } else {
    bool constant = true;
    for (const auto& t : f.terms) constant = constant && Q.is_polynomial(t.c) && t.c.num.size() <= 1;
    if (constant) {
      RationalField K;
      Poly<RationalField> fq =
          poly::map_coeffs(K, f, [&](const QtElem& a) { return a.num.empty() ? mpq_class(0) : mpq_class(a.num[0]); });
      ReductionEngine<RationalField> E(K, fq, nv);
      j = dims_table(E, r, qmax, syz);
    } else {
      ReductionEngine<QtField> E(Q, f, nv);
      j = dims_table(E, r, qmax, syz);
    }
  }
  if (c.json_out) std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-Fuchs operators for periods of rational functions"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* s, bool needs_input) {
    if (needs_input) s->add_option("input", c.input, "expression, or @file")->required();
    s->add_flag("--json", c.json_out, "print a JSON block");
    s->add_option("--budget-seconds", c.budget, "time budget, 0 for none");
    s->add_flag("--serial", c.serial, "disable OpenMP loops");
  };
  auto add_pf = [&](CLI::App* s) {
    add_common(s, true);
    s->add_option("--mode", c.mode, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
    s->add_option("--r-start", c.r_start, "initial reduction order");
    s->add_option("--max-r", c.max_r, "largest reduction order tried");
    s->add_option("--prime-bits", c.prime_bits, "bit size of the modular primes");
    s->add_option("--primes", c.primes, "fixed number of primes (0 = adaptive)");
    s->add_option("--points", c.points, "initial evaluation points per prime");
    s->add_option("--seed", c.seed, "random seed");
    s->add_flag("--certificates", c.certificates, "compute and check certificates (exact mode)");
    s->add_flag("--multiply-x0", c.x0, "replace f by x0 f when homogenizing");
  };

  auto* pf = app.add_subcommand("pf", "Picard-Fuchs operator with the r loop (exact over Q(t) by default)");
  add_pf(pf);
  auto* pfm = app.add_subcommand("pf-modular", "Picard-Fuchs operator by evaluation/interpolation");
  add_pf(pfm);
  auto* pfs = app.add_subcommand("pf-smooth", "Picard-Fuchs operator with plain Griffiths-Dwork reduction");
  add_pf(pfs);

  std::string f_text, alpha_text, vars = "x0,x1,x2";
  int r = 1, qmax = 4, terms = 10;
  bool gd = false, syz = false;
  std::uint32_t prime = 0;
  std::string theta_text;

  auto* red = app.add_subcommand("reduce", "print the reduction [alpha]_r of alpha/f^q");
  add_common(red, false);
  red->add_option("--f", f_text, "homogeneous polynomial f")->required();
  red->add_option("--alpha", alpha_text, "numerator of the top form")->required();
  red->add_option("--vars", vars, "comma separated variables");
  red->add_option("--r", r, "reduction order");
  red->add_flag("--gd", gd, "Griffiths-Dwork reduction only");
  red->add_flag("--certificates", c.certificates, "print and check the certificate");

  auto* ser = app.add_subcommand("series", "constant terms of powers of a Laurent polynomial");
  add_common(ser, true);
  ser->add_option("--terms", terms, "number of terms");

  auto* ver = app.add_subcommand("verify", "check an operator against the constant-term series");
  add_common(ver, true);
  ver->add_option("--theta", theta_text, "operator in theta and t; computed with pf when absent");
  ver->add_option("--terms", terms, "number of series terms")->default_val(60);
  ver->add_option("--r-start", c.r_start, "initial reduction order");
  ver->add_option("--max-r", c.max_r, "largest reduction order tried");
  ver->add_flag("--certificates", c.certificates, "also check the reduction certificates");
  ver->add_flag("--multiply-x0", c.x0, "replace f by x0 f when homogenizing");

  auto* dims = app.add_subcommand("dims", "dimensions of E_q^r and of the syzygy spaces");
  add_common(dims, false);
  dims->add_option("--f", f_text, "homogeneous polynomial f")->required();
  dims->add_option("--vars", vars, "comma separated variables");
  dims->add_option("--r", r, "reduction order");
  dims->add_option("--qmax", qmax, "largest pole order");
  dims->add_flag("--syzygies", syz, "also print dim S_q, S'_q, A_q");
  dims->add_option("--prime", prime, "work modulo this prime instead of over Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*pf) return run_pf(c, "pf");
    if (*pfm) return run_pf(c, "pf-modular");
    if (*pfs) return run_pf(c, "pf-smooth");
    if (*red) return run_reduce(c, f_text, alpha_text, vars, r, gd);
    if (*ser) return run_series(c, terms);
    if (*ver) return run_verify(c, theta_text, terms);
    if (*dims) return run_dims(c, f_text, vars, r, qmax, syz, prime);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnknownVariable& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const UnconfirmedReconstruction& e) {
    std::cerr << "unconfirmed reconstruction: " << e.what() << "\n";
    return kUnconfirmed;
  } catch (const NoReconstruction& e) {
    std::cerr << "unconfirmed reconstruction: " << e.what() << "\n";
    return kUnconfirmed;
  } catch (const DegenerateEvaluation& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const NotSmooth& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const SupportDisagreement& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const InterpolationDegreeExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InsufficientTerms& e) {
    std::cerr << "insufficient terms: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}

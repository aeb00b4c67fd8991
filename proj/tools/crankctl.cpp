// crankctl: command-line front end for the crank/rank engine.
//
// Exit codes: 0 success, 1 usage, 2 verification failure, 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crank/crank.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace crank;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::size_t nmax = 200;
  std::vector<int> r_list;
  std::vector<int> ell_list;
  std::vector<int> ladder;
  std::string format = "csv";
  std::string convention = "generating_function";
  std::string dtilde = "slr";
  std::string kind = "both";
  std::string out;
  std::string grid;
  bool brute = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Statistic> kinds_of(const RunConfig& c) {
  if (c.kind == "crank") return {Statistic::crank};
  if (c.kind == "rank") return {Statistic::rank};
  return {Statistic::crank, Statistic::rank};
}

Convention convention_of(const RunConfig& c) {
  return c.convention == "combinatorial" ? Convention::combinatorial : Convention::generating_function;
}

DTildeVariant variant_of(const RunConfig& c) { return c.dtilde == "theorem" ? DTildeVariant::theorem : DTildeVariant::slr; }

std::vector<int> or_default(const std::vector<int>& v, std::vector<int> fallback) { return v.empty() ? fallback : v; }

void require_increasing(const std::vector<int>& ladder) {
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1]) throw UsageError("--ladder must be strictly increasing");
}

std::string str(const BigInt& v) { return v.str(); }

// ---------------------------------------------------------------------------

int cmd_tables(const RunConfig& c, std::ostream& os) {
  if (c.brute && c.nmax > static_cast<std::size_t>(kEnumerationCap))
    throw ResourceError("partition enumeration is capped at n = " + std::to_string(kEnumerationCap));
  json doc = json::object();
  if (c.format == "csv") os << "kind,n,m,coefficient\n";
  for (Statistic k : kinds_of(c)) {
    json rows = json::array();
    auto emit = [&](std::size_t n, long m, const std::string& v) {
      if (c.format == "csv")
        os << to_string(k) << ',' << n << ',' << m << ',' << v << '\n';
      else
        rows.push_back({{"n", n}, {"m", m}, {"coefficient", v}});
    };
    if (c.brute) {
      for (std::size_t n = 0; n <= c.nmax; ++n) {
        auto h = brute_distribution(static_cast<int>(n), k);
        if (convention_of(c) == Convention::combinatorial) h = reconcile_combinatorial(std::move(h), static_cast<int>(n), k);
        for (const auto& [m, cnt] : h)
          if (cnt != 0) emit(n, m, std::to_string(cnt));
      }
    } else {
      const auto t = build_table(k, c.nmax, convention_of(c));
      for (std::size_t n = 0; n <= c.nmax; ++n) {
        const auto row = t.row(n);
        for (std::size_t i = 0; i < row.size(); ++i)
          if (row[i] != 0) emit(n, static_cast<long>(i) - static_cast<long>(n), str(row[i]));
      }
    }
    if (c.format == "json") doc[std::string(to_string(k))] = std::move(rows);
  }
  if (c.format == "json") os << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_moments(const RunConfig& c, std::ostream& os) {
  if (convention_of(c) != Convention::generating_function)
    throw UsageError("moments are defined on the generating_function convention");
  const auto rs = or_default(c.r_list, {1, 2, 3, 4});
  for (int r : rs)
    if (r < 1 || r > 40) throw UsageError("--r values must lie in 1..40");
  json doc = json::array();
  if (c.format == "csv") os << "kind,variant,r,ell,N,value\n";
  auto emit = [&](const MomentTable& t) {
    if (c.format == "csv") {
      for (std::size_t N = 0; N < t.values.size(); ++N)
        os << to_string(t.kind) << ',' << to_string(t.variant) << ',' << t.r << ',' << t.ell << ',' << N << ','
           << t.values[N] << '\n';
    } else {
      json vals = json::array();
      for (const auto& v : t.values) vals.push_back(str(v));
      doc.push_back({{"kind", to_string(t.kind)}, {"variant", to_string(t.variant)}, {"r", t.r}, {"ell", t.ell}, {"values", vals}});
    }
  };
  for (Statistic k : kinds_of(c)) {
    const auto table = build_table(k, c.nmax);
    for (int r : rs) {
      emit(full_moment_table(table, r));
      emit(positive_moment_table(table, r));
      emit(symmetrized_moments(k == Statistic::crank ? 1 : 3, r, c.nmax));
    }
  }
  if (c.format == "json") os << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_spt_ospt(const RunConfig& c, std::ostream& os) {
  if (c.nmax < 1) throw UsageError("spt-ospt needs --nmax >= 1");
  const auto s = spt_ospt(c.nmax);
  if (c.format == "csv") {
    os << "N,spt,ospt\n";
    for (std::size_t N = 1; N <= c.nmax; ++N) os << N << ',' << s.spt[N] << ',' << s.ospt[N] << '\n';
  } else {
    json doc = json::array();
    for (std::size_t N = 1; N <= c.nmax; ++N) doc.push_back({{"N", N}, {"spt", str(s.spt[N])}, {"ospt", str(s.ospt[N])}});
    os << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
  VerifyOptions opt;
  opt.nmax = c.nmax;
  const auto rep = run_identity_suite(opt);
  if (c.format == "csv") {
    os << "identity,passed,checked,counterexample\n";
    for (const auto& r : rep.results)
      os << r.name << ',' << (r.passed() ? "true" : "false") << ',' << r.checked << ',' << r.counterexample.value_or("") << '\n';
  } else {
    json doc = {{"nmax", opt.nmax}, {"brute_max", opt.brute_max}, {"rmax", opt.rmax}, {"passed", rep.passed()}};
    json items = json::array();
    for (const auto& r : rep.results) {
      json it = {{"identity", r.name}, {"passed", r.passed()}, {"checked", r.checked}};
      it["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
      items.push_back(it);
    }
    doc["identities"] = items;
    os << doc.dump(2) << '\n';
  }
  if (!rep.passed()) {
    for (const auto& r : rep.results)
      if (!r.passed()) {
        std::cerr << "identity " << r.name << " failed at " << *r.counterexample << '\n';
        break;
      }
    return kExitVerification;
  }
  return kExitOk;
}

json trend_json(const TrendReport& t) {
  return {{"target", t.target},       {"r", t.r},
          {"ell", t.ell},             {"Ns", t.Ns},
          {"exact_log", t.exact_log}, {"predicted_log", t.predicted_log},
          {"ratios", t.ratios},       {"fitted_exponent", t.fitted_exponent},
          {"exponent_stderr", t.exponent_stderr}, {"decreasing", t.decreasing}};
}

int cmd_asym(const RunConfig& c, std::ostream& os) {
  const auto ladder = or_default(c.ladder, {250, 500, 1000, 2000});
  require_increasing(ladder);
  if (ladder.front() < 1) throw UsageError("--ladder values must be positive");
  const auto rs = or_default(c.r_list, {1, 2, 3, 4, 5, 6});
  for (int r : rs)
    if (r < 1 || r > 40) throw UsageError("--r values must lie in 1..40");
  const auto top = static_cast<std::size_t>(ladder.back());
  std::vector<double> Ns(ladder.begin(), ladder.end());

  const auto crank_t = build_table(Statistic::crank, top);
  const auto rank_t = build_table(Statistic::rank, top);
  int rmax = 0;
  for (int r : rs) rmax = std::max(rmax, r);
  const auto mp = positive_moment_tables(crank_t, rmax);
  const auto np = positive_moment_tables(rank_t, rmax);

  std::vector<TrendReport> reports;
  auto pick = [&](auto&& value_at, auto&& predict_at, const std::string& name, int r, int ell) {
    std::vector<LogValue> ex, pr;
    for (int N : ladder) {
      ex.push_back(value_at(static_cast<std::size_t>(N)));
      pr.push_back(predict_at(static_cast<double>(N)));
    }
    reports.push_back(trend(Ns, ex, pr, name, r, ell));
  };
  for (int r : rs) {
    const auto m1 = build_model(r, 1, variant_of(c));
    const auto m3 = build_model(r, 3, variant_of(c));
    const auto& M = mp[static_cast<std::size_t>(r)].values;
    const auto& Nn = np[static_cast<std::size_t>(r)].values;
    pick([&](std::size_t N) { return LogValue::from_bigint(M[N]); },
         [&](double N) { return predict(m1, Target::m_pos, N); }, "M_pos", r, 0);
    pick([&](std::size_t N) { return LogValue::from_bigint(Nn[N]); },
         [&](double N) { return predict(m1, Target::n_pos, N); }, "N_pos", r, 0);
    pick([&](std::size_t N) { return LogValue::from_bigint(M[N] - Nn[N]); },
         [&](double N) { return predict(m1, Target::diff, N); }, "diff", r, 0);
    if (r >= 2) {
      const auto mu = symmetrized_moments(1, r, top).values;
      const auto eta = symmetrized_moments(3, r, top).values;
      pick([&](std::size_t N) { return LogValue::from_bigint(mu[N]); },
           [&](double N) { return predict(m1, Target::mu, N, 2); }, "mu", r, 1);
      pick([&](std::size_t N) { return LogValue::from_bigint(eta[N]); },
           [&](double N) { return predict(m3, Target::eta, N, 2); }, "eta", r, 3);
    }
  }
  {
    const auto p = euler_inverse(top);
    pick([&](std::size_t N) { return LogValue::from_bigint(mp[1].values[N] - np[1].values[N]); },
         [&](double N) { return LogValue::from_bigint(p[static_cast<std::size_t>(N)]) * LogValue{std::log(0.25), 1}; },
         "ospt_over_quarter_p", 1, 0);
  }

  if (c.format == "csv") {
    os << "target,r,ell,N,exact_log,predicted_log,ratio\n";
    os.precision(17);
    for (const auto& t : reports)
      for (std::size_t i = 0; i < t.Ns.size(); ++i)
        os << t.target << ',' << t.r << ',' << t.ell << ',' << t.Ns[i] << ',' << t.exact_log[i] << ','
           << t.predicted_log[i] << ',' << t.ratios[i] << '\n';
  } else {
    json doc = json::array();
    for (const auto& t : reports) doc.push_back(trend_json(t));
    os << doc.dump(2) << '\n';
  }
  return kExitOk;
}

json complex_json(Complex z) { return {z.real(), z.imag()}; }

int cmd_circle(const RunConfig& c, std::ostream& os) {
  const auto ells = or_default(c.ell_list, {1, 3});
  const auto rs = or_default(c.r_list, {3, 4});
  if (!c.grid.empty()) {
    const auto ladder = or_default(c.ladder, {100, 1000, 10000, 100000});
    require_increasing(ladder);
    std::vector<double> Ns(ladder.begin(), ladder.end());
    BoundCheck chk;
    const int ell = ells.front();
    const int r = rs.front();
    if (c.grid == "qinfty")
      chk = qinfty_check(Ns);
    else if (c.grid == "slr")
      chk = slr_check(ell, r, Ns, variant_of(c));
    else if (c.grid == "slraway")
      chk = slraway_check(ell, r, Ns);
    else if (c.grid == "flraway")
      chk = flraway_check(ell, r, Ns);
    else
      chk = glj_check(ell, r, Ns);  // --r carries j here
    write_bound_csv(os, chk);
    return kExitOk;
  }
  const auto ladder = or_default(c.ladder, {50, 100});
  require_increasing(ladder);
  json doc = json::array();
  if (c.format == "csv") os << "ell,r,N,I_prime_re,I_prime_im,I_double_prime_re,I_double_prime_im,exact,relative_error,arc_ratio\n";
  os.precision(17);
  for (int ell : ells)
    for (int r : rs)
      for (int N : ladder) {
        const auto q = wright_integrals(ell, r, N);
        if (c.format == "csv") {
          os << ell << ',' << r << ',' << N << ',' << q.I_prime.real() << ',' << q.I_prime.imag() << ','
             << q.I_double_prime.real() << ',' << q.I_double_prime.imag() << ',' << q.exact_coefficient << ','
             << q.relative_error << ',' << q.arc_ratio << '\n';
        } else {
          doc.push_back({{"N", q.N}, {"ell", q.ell}, {"r", q.r}, {"I_prime", complex_json(q.I_prime)},
                         {"I_double_prime", complex_json(q.I_double_prime)}, {"exact_coefficient", str(q.exact_coefficient)},
                         {"relative_error", q.relative_error}, {"arc_ratio", q.arc_ratio}, {"evaluations", q.evaluations},
                         {"estimated_quadrature_error", q.estimated_quadrature_error}});
        }
      }
  if (c.format == "json") os << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_parity(const RunConfig& c, std::ostream& os) {
  if (c.nmax < 1) throw UsageError("parity needs --nmax >= 1");
  const auto rep = parity_suite(c.nmax);
  if (c.format == "csv") {
    write_parity_csv(os, rep);
  } else {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"N", r.N}, {"24N-1", 24 * r.N - 1}, {"factorization", r.factorization.to_string()},
                      {"predicted_parity", r.predicted_odd ? 1 : 0}, {"ospt_mod_2", r.ospt_mod_2}, {"spt_mod_2", r.spt_mod_2}});
    json doc = {{"passed", rep.passed()}, {"rows", rows}};
    if (rep.first_failure) doc["first_failure"] = *rep.first_failure;
    os << doc.dump(2) << '\n';
  }
  if (!rep.passed()) {
    std::cerr << "parity law failed at N=" << *rep.first_failure << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic crank/rank moment engine"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nmax", cfg.nmax, "Truncation order")->capture_default_str();
    sub->add_option("--r", cfg.r_list, "Moment orders")->delimiter(',');
    sub->add_option("--ell", cfg.ell_list, "Symmetrization parameters (1 or 3)")
        ->delimiter(',')
        ->check(CLI::IsMember({1, 3}));
    sub->add_option("--ladder", cfg.ladder, "Values of N for trends, quadrature or bound grids")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--convention", cfg.convention, "Crank convention at N = 1")
        ->check(CLI::IsMember({"generating_function", "combinatorial"}))
        ->capture_default_str();
    sub->add_option("--dtilde-variant", cfg.dtilde, "Second-order constant variant")
        ->check(CLI::IsMember({"slr", "theorem"}))
        ->capture_default_str();
    sub->add_option("--kind", cfg.kind, "Statistic")->check(CLI::IsMember({"crank", "rank", "both"}))->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const Sub subs[] = {
      {"tables", "Crank/rank distributions M(m,N), N(m,N)", cmd_tables},
      {"moments", "Full, positive and symmetrized moments", cmd_moments},
      {"spt-ospt", "spt(N) and ospt(N)", cmd_spt_ospt},
      {"verify", "Run the exact identity suite", cmd_verify},
      {"asym", "Asymptotic trend reports", cmd_asym},
      {"circle", "Circle-method quadrature and bound grids", cmd_circle},
      {"parity", "Parity of spt/ospt against the factorization of 24N-1", cmd_parity},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    if (std::string(s.name) == "tables") sub->add_flag("--brute", cfg.brute, "Enumerate partitions instead of expanding the series");
    if (std::string(s.name) == "circle")
      sub->add_option("--grid", cfg.grid, "Emit a bound grid instead of quadrature reports (j is taken from --r for glj)")
          ->check(CLI::IsMember({"qinfty", "slr", "slraway", "flraway", "glj"}));
    registered.emplace_back(sub, &s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto& [sub, s] : registered) {
      if (!sub->parsed()) continue;
      if (cfg.out.empty()) return s->run(cfg, std::cout);
      std::ostringstream buf;
      const int rc = s->run(cfg, buf);
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw UsageError("cannot open " + cfg.out);
      f << buf.str();
      return rc;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ConvergenceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

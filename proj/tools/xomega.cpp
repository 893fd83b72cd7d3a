// xomega: build, export and analyze the graphs X_ω, X_n, Γ_n and run the
// verification suite. Exit codes: 0 success, 1 failed check, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xomega/analysis.hpp"
#include "xomega/errors.hpp"
#include "xomega/export.hpp"
#include "xomega/omega_graph.hpp"
#include "xomega/schreier.hpp"
#include "xomega/verify.hpp"

using namespace xomega;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Args {
  std::string omega = "(10)";
  std::string other = "(110)";
  int n = 3;
  int r = 2;
  int m = 8;
  int from = 2;
  std::optional<std::int64_t> lo, hi;
  std::string window;
  std::optional<int> level;
  std::string format;
  std::uint64_t seed = 42;
  int threads = 0;
  std::string out;
  std::string golden_dir = XOMEGA_GOLDEN_DIR;
  bool quick = false;
  bool check = false;
  bool interval = false;
  bool big_memory = false;
  std::size_t samples = 100;
  std::size_t max_len = 64;
};

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw Error("cannot write " + a.out);
  f << text;
}

OmegaWord omega_of(const std::string& text) {
  try {
    return OmegaWord::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(e.what()) + " (omega syntax: PRE(PERIOD), e.g. 01(10))");
  }
}

// "2^m" or an integer half-width h, both meaning [-h, h].
std::pair<std::int64_t, std::int64_t> interval_of(const Args& a) {
  if (!a.window.empty()) {
    std::int64_t half = 0;
    try {
      if (a.window.rfind("2^", 0) == 0) {
        const int m = std::stoi(a.window.substr(2));
        if (m < 0 || m > 40) throw UsageError("--window exponent out of range");
        half = std::int64_t{1} << m;
      } else {
        half = std::stoll(a.window);
      }
    } catch (const std::logic_error&) {
      throw UsageError("--window expects 2^m or an integer, got '" + a.window + "'");
    }
    return {-half, half};
  }
  if (!a.lo || !a.hi) throw UsageError("give --lo and --hi, or --window 2^m");
  if (*a.lo > *a.hi) throw UsageError("--lo must not exceed --hi");
  return {*a.lo, *a.hi};
}

GraphFormat graph_format(const Args& a) {
  try {
    return parse_graph_format(a.format.empty() ? "dot" : a.format);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void require_csv(const Args& a) {
  if (!a.format.empty() && a.format != "csv") throw UsageError("tables are written as csv only");
}

int build_xn(const Args& a) {
  emit(a, export_graph(model_graph(a.n), graph_format(a), {"X" + std::to_string(a.n), "", a.n}));
  return kOk;
}

int build_gamma(const Args& a) {
  emit(a, export_graph(gamma_n(a.n), graph_format(a), {"Gamma" + std::to_string(a.n), "", a.n}));
  return kOk;
}

int build_window(const Args& a) {
  const auto w = omega_of(a.omega);
  const auto [lo, hi] = interval_of(a);
  const auto win = a.level ? partial_graph(w, *a.level, lo, hi) : window(w, lo, hi);
  emit(a, export_graph(win.graph, graph_format(a), {"X", w.str(), a.level}));
  return kOk;
}

int quotient(const Args& a) {
  const auto w = omega_of(a.omega);
  emit(a, export_graph(quotient_mod(w, a.n), graph_format(a), {"Q", w.str(), a.n}));
  return kOk;
}

int growth(const Args& a) {
  require_csv(a);
  const auto table = growth_x_omega(omega_of(a.omega), a.r);
  std::ostringstream os;
  os << "r,count\n";
  for (int r = 0; r <= table.radius(); ++r) os << r << ',' << table.counts[static_cast<std::size_t>(r)] << '\n';
  emit(a, os.str());
  if (!a.check) return kOk;
  const auto report = growth_bounds_check(table);
  std::fprintf(stderr, "upper bound %s, lower mechanism %s\n", report.upper_ok ? "PASS" : "FAIL",
               report.lower_ok ? "PASS" : "FAIL");
  return report.passed() ? kOk : kFailed;
}

int diam(const Args& a) {
  require_csv(a);
  std::ostringstream os;
  os << "n,diam,lower,upper,ratio\n";
  bool ok = true;
  for (int n = a.from; n <= a.n; ++n) {
    const auto d = a.interval ? diameter_interval(n, a.big_memory) : diameter_gamma(n);
    os << n << ',';
    if (d.diameter >= 0) {
      os << d.diameter;
      ok = ok && d.lower <= d.diameter && d.diameter <= d.upper;
    }
    os << ',' << d.lower << ',' << d.upper << ',';
    if (d.diameter >= 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", d.ratio());
      os << buf;
    }
    os << '\n';
  }
  emit(a, os.str());
  return ok ? kOk : kFailed;
}

int corner(const Args& a) {
  const auto d = corner_distance(a.n, a.big_memory);
  const std::int64_t expected = a.n * (std::int64_t{1} << a.n) + 1;
  const bool ok = d == expected;
  emit(a, std::to_string(d) + "\n" + (ok ? "PASS" : "FAIL") + "\n");
  return ok ? kOk : kFailed;
}

int census(const Args& a) {
  require_csv(a);
  const auto w = omega_of(a.omega);
  const auto [lo, hi] = interval_of(a);
  const auto c = type_census(window(w, lo, hi), a.r, 1);
  std::ostringstream os;
  os << "certificate,multiplicity,representative\n";
  for (const auto& [cert, entry] : c.types) {
    os << cert.short_id() << ',' << entry.multiplicity << ',' << entry.representatives.front() << '\n';
  }
  emit(a, os.str());
  return kOk;
}

int holonomy(const Args& a) {
  const auto rep = dense_holonomy_R(omega_of(a.omega), a.r);
  std::ostringstream os;
  os << "r " << rep.r << "\nR " << rep.R << "\ntypes " << rep.types << "\nchecked [" << rep.checked_lo << ", "
     << rep.checked_hi << "]\n"
     << (rep.verified ? "PASS" : "FAIL") << '\n';
  emit(a, os.str());
  return rep.verified ? kOk : kFailed;
}

int localiso(const Args& a) {
  const auto v = local_iso_check(omega_of(a.omega), omega_of(a.other), a.r, a.m);
  std::ostringstream os;
  os << (v.locally_iso() ? "LocallyIso" : "Distinguished");
  if (v.witness) os << ' ' << v.witness->short_id() << " (only in " << (v.witness_side == 0 ? a.omega : a.other) << ')';
  os << "\ntypes " << v.types_first << ' ' << v.types_second << '\n';
  emit(a, os.str());
  return kOk;
}

int contraction(const Args& a) {
  const auto rep = contraction_experiment(a.samples, a.max_len, a.seed);
  std::ostringstream os;
  os << "samples " << rep.samples << "\nrestrictions " << rep.restrictions_checked << "\nfailures " << rep.failures
     << "\nhalving_violations " << rep.halving_violations << '\n';
  for (const auto& s : rep.failing_words) os << "failing " << s << '\n';
  os << (rep.passed() ? "PASS" : "FAIL") << '\n';
  emit(a, os.str());
  return rep.passed() ? kOk : kFailed;
}

int verify_all(const Args& a) {
  VerifyOptions o;
  o.seed = a.seed;
  o.golden_dir = a.golden_dir;
  o.quick = a.quick;
  const auto results = run_all_checks(o);
  emit(a, report_json(results, o));
  bool ok = true;
  for (const auto& r : results) {
    if (!r.passed) {
      ok = false;
      std::fprintf(stderr, "FAIL %d %s: %s\n", r.id, r.name.c_str(), r.detail.c_str());
    }
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graphs of the group <a, b>, a = (e, a)σ, b = (b, a), and the graphs X_ω"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--threads", a.threads, "worker thread cap (0: no cap)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", a.out, "write to this file instead of stdout");

  auto graph_opts = [&](CLI::App* c) { c->add_option("--format", a.format, "dot | csv | json (default dot)"); };
  auto table_opts = [&](CLI::App* c) { c->add_option("--format", a.format, "csv"); };
  auto omega_opt = [&](CLI::App* c) { c->add_option("--omega", a.omega, "infinite word PRE(PERIOD)"); };
  auto range_opts = [&](CLI::App* c) {
    c->add_option("--lo", a.lo, "window start");
    c->add_option("--hi", a.hi, "window end");
    c->add_option("--window", a.window, "2^m for [-2^m, 2^m]");
  };

  auto* xn = app.add_subcommand("build-xn", "finite model X_n");
  xn->add_option("--n", a.n, "level")->required()->check(CLI::Range(1, 24));
  graph_opts(xn);
  auto* gamma = app.add_subcommand("build-gamma", "Schreier graph Γ_n");
  gamma->add_option("--n", a.n, "level")->required()->check(CLI::Range(1, 24));
  graph_opts(gamma);
  auto* win = app.add_subcommand("build-window", "X_ω (or X_ω^k with --level) on an interval");
  omega_opt(win);
  range_opts(win);
  win->add_option("--level", a.level, "keep only levels <= k")->check(CLI::NonNegativeNumber);
  graph_opts(win);
  auto* quo = app.add_subcommand("quotient", "X_ω mod 2^n");
  omega_opt(quo);
  quo->add_option("--n", a.n, "exponent")->required()->check(CLI::Range(1, 24));
  graph_opts(quo);
  auto* gro = app.add_subcommand("growth", "|B(0, r)| in X_ω");
  omega_opt(gro);
  gro->add_option("--r", a.r, "largest radius")->required()->check(CLI::NonNegativeNumber);
  gro->add_flag("--check", a.check, "also check the growth bounds");
  table_opts(gro);
  auto* dia = app.add_subcommand("diam", "diameters of Γ_n");
  dia->add_option("--n", a.n, "largest level")->required()->check(CLI::Range(1, 28));
  dia->add_option("--from", a.from, "smallest level")->check(CLI::Range(1, 28));
  dia->add_flag("--interval", a.interval, "only the bracket [d, 2d]");
  dia->add_flag("--big-memory", a.big_memory, "allow levels above 24 in interval mode");
  table_opts(dia);
  auto* bh = app.add_subcommand("corner-distance", "d(0^m, 0^(m-1)1) at m = (n^2 + 3n + 2)/2; expects n 2^n + 1");
  bh->alias("bh05");
  bh->add_option("--n", a.n, "n")->required()->check(CLI::PositiveNumber);
  bh->add_flag("--big-memory", a.big_memory, "allow level 28");
  auto* cen = app.add_subcommand("census", "r-types of a window");
  omega_opt(cen);
  range_opts(cen);
  cen->add_option("--r", a.r, "radius")->required()->check(CLI::NonNegativeNumber);
  table_opts(cen);
  auto* hol = app.add_subcommand("holonomy", "R with every R-ball containing all r-types");
  omega_opt(hol);
  hol->add_option("--r", a.r, "radius")->required()->check(CLI::NonNegativeNumber);
  auto* loc = app.add_subcommand("localiso", "compare r-type sets of two graphs");
  omega_opt(loc);
  loc->add_option("--other", a.other, "second word");
  loc->add_option("--r", a.r, "radius")->required()->check(CLI::NonNegativeNumber);
  loc->add_option("--m", a.m, "windows [-2^m, 2^m]")->check(CLI::Range(1, 20));
  auto* con = app.add_subcommand("contraction", "random words restricted to the nucleus");
  con->add_option("--samples", a.samples, "number of words");
  con->add_option("--max-len", a.max_len, "largest word length")->check(CLI::PositiveNumber);
  con->add_option("--seed", a.seed, "random seed");
  auto* ver = app.add_subcommand("verify-all", "run all twelve checks, JSON report");
  ver->add_option("--seed", a.seed, "random seed");
  ver->add_option("--golden-dir", a.golden_dir, "directory of golden edge lists");
  ver->add_flag("--quick", a.quick, "smaller parameters (smoke test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::pair<CLI::App*, int (*)(const Args&)> commands[] = {
      {xn, build_xn},   {gamma, build_gamma}, {win, build_window}, {quo, quotient},
      {gro, growth},    {dia, diam},          {bh, corner},         {cen, census},
      {hol, holonomy},  {loc, localiso},      {con, contraction},  {ver, verify_all},
  };
  try {
    set_thread_cap(a.threads);
    for (const auto& [cmd, run] : commands) {
      if (*cmd) return run(a);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n%s", e.what(), app.help().c_str());
    return kUsage;
  } catch (const NotDenseHolonomy& e) {
    std::fprintf(stderr, "FAIL: %s\n", e.what());
    return kFailed;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailed;
  }
  return kUsage;
}

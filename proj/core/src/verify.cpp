#include "xomega/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "xomega/analysis.hpp"
#include "xomega/automaton.hpp"
#include "xomega/errors.hpp"
#include "xomega/figures.hpp"
#include "xomega/omega_graph.hpp"
#include "xomega/schreier.hpp"

namespace xomega {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    if (!passed) detail << "; ";
    passed = false;
    detail << why;
  }
};

OmegaWord random_omega(std::mt19937_64& rng) {
  auto bits = [&](std::size_t n) {
    std::vector<Bit> v(n);
    for (auto& b : v) b = static_cast<Bit>(rng() & 1u);
    return FiniteWord(v);
  };
  return OmegaWord(bits(rng() % 9), bits(1 + rng() % 6));
}

// Closed forms of a_n for the three reference words, in 128-bit arithmetic.
__int128 closed_form(int which, int n) {
  const __int128 p = static_cast<__int128>(1) << (n - 1);
  if (which == 0) return -p;
  if (which == 1) return p - 1;
  const __int128 q = (n - 1) % 2 == 0 ? p : -p;  // (-2)^(n-1)
  return (q - 1) / 3;
}

void check_coefficients(const VerifyOptions&, Outcome& out) {
  const char* words[] = {"(0)", "(1)", "(10)"};
  for (int which = 0; which < 3; ++which) {
    const auto w = OmegaWord::parse(words[which]);
    for (int n = 1; n <= 62; ++n) {
      if (static_cast<__int128>(coefficient_a(w, static_cast<std::size_t>(n))) != closed_form(which, n)) {
        out.fail(std::string(words[which]) + " differs at n = " + std::to_string(n));
        return;
      }
    }
  }
  out.detail << "a_n matches the closed forms for (0), (1), (10) at n = 1..62";
}

void check_quotients(const VerifyOptions& o, Outcome& out) {
  std::mt19937_64 rng(o.seed);
  const int words = o.quick ? 10 : 50, top = o.quick ? 8 : 12;
  for (int i = 0; i < words; ++i) {
    const auto w = random_omega(rng);
    for (int n = 1; n <= top; ++n) {
      const auto shift = quotient_model_shift(w, n);
      if (!validate_iso(shift, quotient_mod(w, n), model_graph(n), false)) {
        out.fail("quotient of " + w.str() + " mod 2^" + std::to_string(n) + " is not carried onto X_n");
        return;
      }
    }
  }
  out.detail << words << " random words, n = 1.." << top << ": z -> z + x_1 + ... + 2^(n-1) x_n is label-exact";
}

void check_level_graphs(const VerifyOptions& o, Outcome& out) {
  const int top = o.quick ? 10 : 14, radius = o.quick ? 24 : 64;
  for (int n = 1; n <= top; ++n) {
    if (!validate_iso(level_model_map(n), gamma_n(n), model_graph(n))) {
      out.fail("Gamma_" + std::to_string(n) + " is not isomorphic to X_" + std::to_string(n));
      return;
    }
  }
  for (const char* w : {"(0)", "(10)", "(110)", "1(10)"}) {
    const auto omega = OmegaWord::parse(w);
    const auto orbital = growth_orbital(omega, radius);
    const auto integer = growth_x_omega(omega, radius);
    if (orbital.counts != integer.counts) {
      out.fail(std::string("orbital and integer balls differ for ") + w);
      return;
    }
  }
  out.detail << "Gamma_n = X_n for n = 1.." << top << "; |B| agree for r <= " << radius
             << " on (0), (10), (110), 1(10)";
}

void check_distance_identity(const VerifyOptions&, Outcome& out) {
  for (int n = 1; n <= 4; ++n) {
    const auto d = corner_distance(n);
    const std::int64_t expected = n * (std::int64_t{1} << n) + 1;
    if (d != expected) {
      out.fail("n = " + std::to_string(n) + ": distance " + std::to_string(d) + ", expected " +
               std::to_string(expected));
      return;
    }
    out.detail << (n > 1 ? ", " : "d = ") << d;
  }
  out.detail << " at levels 3, 6, 10, 15";
}

void check_diameters(const VerifyOptions& o, Outcome& out) {
  // Pinned band tolerance: the largest ratio may exceed the smallest by at
  // most this factor.
  constexpr double kBandSpread = 2.0;
  const int top = o.quick ? 14 : 18;
  double lo = 1e300, hi = 0;
  for (int m = 2; m <= top; ++m) {
    const auto d = diameter_gamma(m);
    if (d.diameter < d.lower || d.diameter > d.upper) {
      out.fail("sandwich fails at m = " + std::to_string(m));
      return;
    }
    lo = std::min(lo, d.ratio());
    hi = std::max(hi, d.ratio());
  }
  if (!(lo > 0) || hi > kBandSpread * lo) {
    out.fail("ratio band too wide");
    return;
  }
  out.detail.precision(4);
  out.detail << "m = 2.." << top << ": lower <= Diam <= upper; Diam/(sqrt(m) 2^sqrt(2m)) in [" << lo << ", " << hi
             << "]";
}

void check_growth_upper(const VerifyOptions& o, Outcome& out) {
  const int target = o.quick ? 128 : 512;
  std::ostringstream reached;
  for (const char* w : {"(10)", "(110)"}) {
    const auto table = growth_x_omega_within(OmegaWord::parse(w), target, o.growth_budget_bytes);
    const auto report = growth_bounds_check(table, 0);
    if (!report.upper_ok) {
      out.fail(std::string(w) + ": bound fails at r = " + std::to_string(*report.first_violation));
      return;
    }
    reached << (reached.str().empty() ? "" : ", ") << w << " r <= " << table.radius() << " (|B| = "
            << table.counts.back() << ")";
    if (table.radius() < target) {
      out.fail(std::string(w) + ": exact counts stop at r = " + std::to_string(table.radius()) + " of " +
               std::to_string(target) + " (memory budget)");
    }
  }
  for (const char* w : {"(10)", "(110)"}) {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 1; k <= 3; ++k) {
        if (!restriction_bound_check(OmegaWord::parse(w), n, k).holds) {
          out.fail(std::string("restriction bound fails for ") + w + " n = " + std::to_string(n) +
                   " k = " + std::to_string(k));
        }
      }
    }
  }
  if (out.passed) {
    out.detail << "bound holds for r = 2.." << target << "; restriction bound holds for n <= 6, k <= 3";
  } else {
    out.detail << "; verified: " << reached.str();
  }
}

void check_growth_lower(const VerifyOptions&, Outcome& out) {
  const auto omega = OmegaWord::parse("(10)");
  const int radius = 2 * diameter_gamma(6).diameter;
  const auto table = growth_x_omega(omega, radius);
  for (int n = 1; n <= 6; ++n) {
    const int r = 2 * diameter_gamma(n).diameter;
    const auto count = table.counts[static_cast<std::size_t>(r)];
    if (count < (std::uint64_t{1} << n)) {
      out.fail("|B(0, " + std::to_string(r) + ")| = " + std::to_string(count) + " < 2^" + std::to_string(n));
      return;
    }
    out.detail << (n > 1 ? ", " : "|B(0, 2 Diam(Gamma_n))| = ") << count;
  }
  out.detail << " for n = 1..6";
}

void check_contraction(const VerifyOptions& o, Outcome& out) {
  const auto report = contraction_experiment(o.quick ? 20 : 100, 64, o.seed);
  if (!report.passed()) {
    out.fail(std::to_string(report.failures) + " restrictions outside the nucleus, e.g. " +
             report.failing_words.front());
    return;
  }
  out.detail << report.samples << " words, " << report.restrictions_checked
             << " restrictions, all in the nucleus; halving slack exceeded " << report.halving_violations << " times";
}

void check_local_structure(const VerifyOptions& o, Outcome& out) {
  const auto ten = OmegaWord::parse("(10)"), eleven = OmegaWord::parse("(110)"), zero = OmegaWord::parse("(0)");
  const int top = o.quick ? 2 : 4;
  for (int r = 0; r <= top; ++r) {
    if (!local_iso_check(ten, eleven, r, 10).locally_iso()) {
      out.fail("(10) and (110) are distinguished at r = " + std::to_string(r));
      return;
    }
  }
  const auto loop = local_iso_check(zero, ten, 0, 6);
  if (loop.locally_iso() ||
      *loop.witness != canonical_certificate(oracle_ball(OmegaGraph(zero), 0, 0), 0)) {
    out.fail("(0) vs (10) not distinguished by the loop type");
    return;
  }
  std::ostringstream radii;
  for (int r = 0; r <= top; ++r) {
    const auto h = dense_holonomy_R(ten, r);
    if (!h.verified) {
      out.fail("dense holonomy not verified at r = " + std::to_string(r));
      return;
    }
    radii << (r ? ", " : "") << h.R;
  }
  try {
    dense_holonomy_R(zero, 1);
    out.fail("(0) reported dense holonomy");
    return;
  } catch (const NotDenseHolonomy&) {
  }
  out.detail << "(10) ~ (110) for r <= " << top << "; (0) vs (10) split by the loop; R = " << radii.str()
             << " for r = 0.." << top << "; (0) rejected";
}

void check_symmetry(const VerifyOptions& o, Outcome& out) {
  const std::int64_t w = std::int64_t{1} << (o.quick ? 9 : 12);
  const OmegaGraph zero(OmegaWord::parse("(0)")), ten(OmegaWord::parse("(10)"));
  const VertexMap flip = [](std::int64_t z) { return -z; };
  if (!preserves_adjacency(flip, zero, zero, -w, w)) {
    out.fail("z -> -z does not preserve X_(0)");
    return;
  }
  const int reach = o.quick ? 16 : 64;
  for (std::int64_t z = -reach; z <= reach; ++z) {
    if (z == 0) continue;
    if (!genericity_radius(ten.omega(), 0, z, 10)) {
      const auto later = genericity_radius(ten.omega(), 0, z, 40);
      out.fail("0 and " + std::to_string(z) + " share every r-type up to 10 (first split at r = " +
               (later ? std::to_string(*later) : std::string("> 40")) + ")");
    }
  }
  for (int sign : {1, -1}) {
    for (std::int64_t t = -64; t <= 64; ++t) {
      if (t == 0 && sign == 1) continue;
      const VertexMap map = [=](std::int64_t z) { return sign * z + t; };
      if (preserves_adjacency(map, ten, ten, -w, w)) {
        out.fail("z -> " + std::string(sign < 0 ? "-" : "") + "z + " + std::to_string(t) + " preserves X_(10)");
        return;
      }
    }
  }
  if (out.passed) {
    out.detail << "z -> -z preserves X_(0) on [-" << w << ", " << w << "]; 0 separated from every 0 < |z| <= "
               << reach << "; no z -> +-z + t (|t| <= 64) preserves X_(10)";
  } else {
    out.detail << "; z -> -z preserves X_(0) and no z -> +-z + t (|t| <= 64) preserves X_(10)";
  }
}

void check_automata(const VerifyOptions&, Outcome& out) {
  if (!verify_automata_equivalence(12)) {
    out.fail("automata differ on level 12");
    return;
  }
  if (verify_automata_equivalence_perturbed(12)) {
    out.fail("perturbed automaton not detected");
    return;
  }
  out.detail << "equal on {0,1}^12; perturbed control rejected";
}

void check_golden(const VerifyOptions& o, Outcome& out) {
  if (o.golden_dir.empty()) {
    out.fail("no golden directory given");
    return;
  }
  const auto mismatches = compare_golden(o.golden_dir);
  for (const auto& m : mismatches) out.fail(m.id + " " + m.reason);
  if (out.passed) out.detail << reference_graphs().size() << " exports byte-match " << o.golden_dir;
}

struct CheckDef {
  const char* name;
  void (*run)(const VerifyOptions&, Outcome&);
};

const CheckDef kChecks[kCheckCount] = {
    {"coefficient closed forms", check_coefficients},
    {"quotients onto finite models", check_quotients},
    {"level Schreier graphs and orbital balls", check_level_graphs},
    {"distance identity n 2^n + 1", check_distance_identity},
    {"diameter sandwich and ratio band", check_diameters},
    {"growth upper bound", check_growth_upper},
    {"growth lower mechanism", check_growth_lower},
    {"contraction onto the nucleus", check_contraction},
    {"local isomorphism and dense holonomy", check_local_structure},
    {"symmetries and genericity", check_symmetry},
    {"automata equivalence", check_automata},
    {"golden exports", check_golden},
};

}  // namespace

CheckResult run_check(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCheckCount) throw Error("no check with id " + std::to_string(id));
  const auto& def = kChecks[id - 1];
  CheckResult result;
  result.id = id;
  result.name = def.name;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    def.run(options, out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = out.passed;
  result.detail = out.detail.str();
  return result;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (int id = 1; id <= kCheckCount; ++id) results.push_back(run_check(id, options));
  return results;
}

std::string report_json(const std::vector<CheckResult>& results, const VerifyOptions& options) {
  nlohmann::ordered_json doc;
  doc["seed"] = options.seed;
  doc["quick"] = options.quick;
  doc["passed"] = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  auto checks = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"detail", r.detail}});
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace xomega

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charp/certificate.hpp"
#include "charp/cli.hpp"
#include "charp/rootmorph.hpp"

using namespace charp;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

const std::vector<Int> kPrimes = {5, 7, 11, 13};

IntVector pl(int N, Int p, int i, int j) {
  IntVector v(N, 0);
  v[i] += p;
  v[j] -= p;
  return v;
}

Outcome four_case_pattern() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int certificates = 0;
  for (Int p : kPrimes)
    for (int N = 4; N <= 10; ++N)
      for (int d = 2; d <= N - 2; ++d) {
        std::ostringstream out, err;
        const int code = cli::run({"--json", "grassmann-check", "--d", std::to_string(d), "--N", std::to_string(N),
                                   "--p", std::to_string(p)},
                                  out, err);
        const std::string tag = "(" + std::to_string(d) + "," + std::to_string(N) + "," + std::to_string(p) + ")";
        if (code != 0 || out.str().find("\"verdict\":\"no_lift_where_p_nonzero\"") == std::string::npos)
          o.fail("cli verdict at " + tag);
        const Certificate c = check_equivariant_smoothness(d, N, p);
        if (c.verdict != FinalVerdict::NoLiftWherePNonzero) o.fail("verdict at " + tag);
        if (c.rows.size() != std::size_t(d * d)) o.fail("row count at " + tag);
        for (const auto& row : c.rows) {
          switch (row.tag) {
            case CaseTag::Diagonal:
            case CaseTag::UpperFar:
            case CaseTag::LowerFar:
              if (!row.h1.is_zero()) o.fail("nonzero h1 off the adjacent case at " + tag);
              break;
            case CaseTag::Adjacent:
              if (!row.h1.is_trivial_module()) o.fail("adjacent row not trivial at " + tag);
              break;
            case CaseTag::Other: o.fail("unclassified row at " + tag); break;
          }
        }
        ++certificates;
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.note = std::to_string(certificates) + " certificates in " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome exact_arithmetic() {
  Outcome o;
  int rows = 0;
  for (Int p : kPrimes) {
    for (int N = 4; N <= 10; ++N) {
      auto gl = make_datum(DynkinType::GL, N);
      for (int i = 0; i < N - 2; ++i)
        for (int j = 0; j < N - 2; ++j) {
          if (i == j) continue;
          const CaseRow row = classify_weight(Weight(gl, pl(N, p, i, j)), p);
          const Int want = (i == j + 1) ? 2 * p - 2 : p - 2;
          if (row.pairing != want) o.fail("pairing at i=" + std::to_string(i) + " j=" + std::to_string(j));
          ++rows;
        }
    }
    if (base_p_digits(2 * p - 2, p).digits != IntVector{p - 2, 1}) o.fail("digits of 2p-2");
  }
  if (o.pass) o.note = std::to_string(rows) + " rows";
  return o;
}

Outcome involutions() {
  Outcome o;
  std::mt19937_64 rng(7001);
  const std::vector<DynkinType> types = {DynkinType::GL, DynkinType::SL, DynkinType::SOOdd, DynkinType::Sp,
                                         DynkinType::SOEven};
  std::uniform_int_distribution<Int> dist(-30, 30);
  int failures = 0;
  for (int it = 0; it < 10'000; ++it) {
    auto d = make_datum(types[rng() % types.size()], 2 + static_cast<int>(rng() % 7));
    IntVector v(d->lattice_rank());
    for (auto& x : v) x = dist(rng);
    const Weight lambda(d, v);
    const Root simple = d->simple_root(rng() % d->semisimple_rank());
    const Root any = d->root(rng() % d->root_count());
    if (dot_reflect(dot_reflect(lambda, simple), simple) != lambda) ++failures;
    if (reflect(reflect(lambda, any), any) != lambda) ++failures;
  }
  for (auto type : types)
    for (int n = 2; n <= 8; ++n) {
      auto d = make_datum(type, n);
      std::set<IntVector> roots;
      for (const auto& r : d->roots()) roots.insert(r.vector.coords());
      for (const auto& a : d->simple_roots()) {
        std::set<IntVector> image;
        for (const auto& r : d->roots()) image.insert(reflect(r.vector, a).coords());
        if (image != roots) ++failures;
      }
    }
  if (failures) o.fail(std::to_string(failures) + " failures");
  else o.note = "10000 random weights, ranks 2-8";
  return o;
}

Outcome char0_coherence() {
  Outcome o;
  std::mt19937_64 rng(7002);
  int checked = 0, mismatches = 0;
  while (checked < 500) {
    const int N = 2 + static_cast<int>(rng() % 5);
    const Int p = kPrimes[rng() % kPrimes.size()];
    auto d = make_datum(DynkinType::GL, N);
    std::uniform_int_distribution<Int> dist(-2 * p, 2 * p);
    IntVector v(N);
    for (auto& x : v) x = dist(rng);
    const Weight mu(d, v);
    if (is_dominant(mu)) continue;
    const auto c0 = bwb_char0(mu);
    if (c0.all_zero) continue;  // singular
    const auto report = andersen_h1_report(mu, p);
    const bool case_a0 = std::any_of(report.steps.begin(), report.steps.end(), [](const AndersenStep& s) {
      return s.rule == AndersenRule::CaseA && s.exponent == std::size_t{0} && s.status.is_nonzero();
    });
    if (!case_a0) continue;
    ++checked;
    if (c0.degree != 1 || !report.status.is_nonzero() || *report.status.highest_weight() != *c0.highest_weight)
      ++mismatches;
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  else o.note = "500 weights";
  return o;
}

Outcome weyl_machinery() {
  Outcome o;
  std::size_t fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    if (weyl_group(make_datum(DynkinType::GL, n)).size() != fact) o.fail("|W(GL(" + std::to_string(n) + "))|");
  }
  auto gl2 = make_datum(DynkinType::GL, 2);
  if (weyl_dim(Weight(gl2, {1, 0})) != 2) o.fail("standard");
  for (Int n = 0; n <= 20; ++n)
    if (weyl_dim(Weight(gl2, {n, 0})) != n + 1) o.fail("Sym^" + std::to_string(n));
  if (weyl_dim(Weight(make_datum(DynkinType::GL, 3), {1, 1, 0})) != 3) o.fail("exterior square");
  if (o.pass) o.note = "GL(1..6), standard, Sym^0..20, exterior square";
  return o;
}

Outcome rigidity() {
  Outcome o;
  const std::vector<DynkinType> types = {DynkinType::GL, DynkinType::SL, DynkinType::Sp, DynkinType::SOOdd,
                                         DynkinType::SOEven};
  int data = 0;
  for (auto type : types)
    for (int n = 2; n <= 5; ++n)
      for (Int p : kPrimes) {
        auto d = make_datum(type, n);
        const std::string tag = d->name() + " p=" + std::to_string(p);
        if (!validate_p_morphism(frobenius_data(d, p, RingChar::prime(p))).valid()) o.fail("invalid over F_p: " + tag);
        for (const auto& ring : {RingChar::zero(), RingChar::prime_power(p, 2)}) {
          const auto v = validate_p_morphism(frobenius_data(d, p, ring));
          const bool admissibility_only =
              !v.valid() && std::all_of(v.failures.begin(), v.failures.end(),
                                        [](const MorphismFailure& f) { return f.relation == "admissibility"; });
          if (!admissibility_only) o.fail("expected admissibility failure over " + ring.to_string() + ": " + tag);
          if (frobenius_rigidity_verdict(d, p, ring).lift_possible) o.fail("lift over " + ring.to_string() + ": " + tag);
        }
        ++data;
      }
  for (int r = 1; r <= 5; ++r)
    for (const auto& ring : {RingChar::zero(), RingChar::prime(5), RingChar::prime_power(5, 2)})
      if (!frobenius_rigidity_verdict(make_torus(r), 5, ring).lift_possible) o.fail("torus");
  if (o.pass) o.note = std::to_string(data) + " data";
  return o;
}

Outcome soundness_guard() {
  Outcome o;
  std::mt19937_64 rng(7003);
  int injected = 0;
  for (int it = 0; it < 400; ++it) {
    const int N = 4 + static_cast<int>(rng() % 7);
    const int d = 2 + static_cast<int>(rng() % (N - 3));
    const Int p = kPrimes[rng() % kPrimes.size()];
    // Fuzz weights outside the p(l_i - l_j) shape until Andersen is silent.
    IntVector w;
    std::uniform_int_distribution<Int> dist(-2, 2);
    for (int tries = 0; tries < 1000 && w.empty(); ++tries) {
      IntVector v(N);
      for (auto& x : v) x = dist(rng);
      if (andersen_h1(Weight(make_datum(DynkinType::GL, N), v), p).is_undetermined()) w = v;
    }
    if (w.empty()) continue;
    std::string text;
    for (Int x : w) text += (text.empty() ? "" : ",") + std::to_string(x);
    std::ostringstream out, err;
    const int code = cli::run({"--json", "grassmann-check", "--d", std::to_string(d), "--N", std::to_string(N),
                               "--p", std::to_string(p), "--inject-weight=" + text},
                              out, err);
    if (code != cli::kInconclusive) o.fail("exit " + std::to_string(code) + " for " + text);
    if (out.str().find("no_lift_where_p_nonzero") != std::string::npos) o.fail("no-lift verdict for " + text);
    ++injected;
  }
  if (injected < 300) o.fail("only " + std::to_string(injected) + " fuzzed weights");
  if (o.pass) o.note = std::to_string(injected) + " injected rows";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 grassmann-check four-case pattern", four_case_pattern},
      {"2 exact pairings and digits", exact_arithmetic},
      {"3 reflection and dot-action involutions", involutions},
      {"4 characteristic-zero coherence", char0_coherence},
      {"5 Weyl group orders and dimensions", weyl_machinery},
      {"6 Frobenius rigidity verdicts", rigidity},
      {"7 undetermined rows block the verdict", soundness_guard},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  %s  (%s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.note.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crosscap/cf_core.hpp"
#include "crosscap/cli.hpp"
#include "crosscap/torus_knots.hpp"
#include "crosscap/verify_harness.hpp"

using namespace crosscap;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<std::int64_t> coeffs(const ContinuedFraction& cf) {
  std::vector<std::int64_t> out;
  for (auto c : cf.coefficients()) out.push_back(to_int64(c));
  return out;
}

std::string knot_text(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "crosscap");
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

Outcome worked_examples() {
  Outcome o;
  o.require(bredon_wood_N(8, 3) == HalfInteger{4}, "N(8,3) != 2");
  o.require(bredon_wood_N(34, 49) == HalfInteger{6}, "N(34,49) != 3");
  o.require(coeffs(cf_expand(make_rational(8, 3))) == std::vector<std::int64_t>{2, 1, 2}, "8/3 != [2,1,2]");
  o.require(coeffs(cf_expand(make_rational(34, 49))) == std::vector<std::int64_t>{0, 1, 2, 3, 1, 3},
            "34/49 != [0,1,2,3,1,3]");
  return o;
}

Outcome odd_knot_table() {
  struct Row {
    std::int64_t p, q, crossing, crosscap, genus;
  };
  const Row rows[] = {
      {17, 9, 136, 5, 72}, {13, 9, 104, 4, 48}, {11, 9, 88, 5, 40}, {13, 7, 78, 4, 36}, {11, 7, 66, 3, 30},
      {9, 7, 54, 4, 24},   {13, 5, 52, 3, 24},  {11, 5, 44, 3, 20}, {9, 5, 36, 3, 16},  {7, 5, 28, 3, 12},
  };
  Outcome o;
  for (const auto& r : rows) {
    const auto rec = invariants(normalize(r.p, r.q));
    const auto where = knot_text(r.p, r.q);
    auto expect = [&](const char* what, std::int64_t got, std::int64_t want) {
      o.require(got == want, std::string(what) + " of " + where + " is " + std::to_string(got) + ", expected " +
                                 std::to_string(want));
    };
    expect("crossing number", rec.crossing, r.crossing);
    expect("crosscap number", rec.crosscap, r.crosscap);
    expect("genus", rec.genus, r.genus);
  }
  return o;
}

Outcome sweep_300() {
  Outcome o;
  std::string out;
  const auto t0 = Clock::now();
  const int code = run_cli({"verify", "--max-p", "300", "--workers", "1"}, &out);
  const std::chrono::duration<double> dt = Clock::now() - t0;
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out.find("\n0 violations\n") != std::string::npos, "summary lacks '0 violations'");
  o.require(out.find("checked 27098 ") != std::string::npos, "knot count differs from 27098");
  o.require(dt.count() < 10.0, "took " + std::to_string(dt.count()) + " s");
  o.detail = o.pass ? std::to_string(dt.count()) + " s" : o.detail;
  return o;
}

Outcome sharpness() {
  Outcome o;
  for (std::int64_t n = 1; n <= 100; ++n) {
    const auto rec = invariants(TorusKnot(6 * n - 2, 3));
    o.require(rec.genus == 6 * n - 3 && rec.crossing == 12 * n - 4, "genus/crossing at n=" + std::to_string(n));
    o.require(rec.crosscap == n + 1 && rec.bounds.thm1 == n + 1 && rec.bounds.thm2 == n + 1,
              "equality fails at n=" + std::to_string(n));
  }
  return o;
}

Outcome unbounded_gap() {
  Outcome o;
  for (std::int64_t n = 1; n <= 100; ++n) {
    const auto rec = invariants(TorusKnot(2 * n + 1, 2));
    o.require(rec.crosscap == 1 && rec.genus == n && rec.gap == n - 1, "mismatch at n=" + std::to_string(n));
  }
  return o;
}

Outcome lemma9() {
  Outcome o;
  bool saw_odd_n = false, saw_even_n = false, saw_a1_one = false;
  for (std::int64_t p = 3; p <= 200; ++p) {
    for (std::int64_t q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto cf = cf_expand(make_rational(q, p));
      (cf.last_index() % 2 ? saw_odd_n : saw_even_n) = true;
      if (cf[1] == 1) saw_a1_one = true;
      const auto [minus, plus] = lemma9_expansions(cf);
      o.require(is_canonical(minus.coefficients()) && is_canonical(plus.coefficients()),
                "non-canonical at " + knot_text(p, q));
      o.require(cf_value(minus) == make_rational(p * q - 1, p * p), "(pq-1)/p^2 at " + knot_text(p, q));
      o.require(cf_value(plus) == make_rational(p * q + 1, p * p), "(pq+1)/p^2 at " + knot_text(p, q));
    }
  }
  o.require(saw_odd_n && saw_even_n && saw_a1_one, "coverage of n parity / a1 = 1 incomplete");
  return o;
}

Outcome lemma2() {
  Outcome o;
  for (std::int64_t p = 2; p <= 500; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1)
        o.require(coefficient_sum(cf_expand(make_rational(p, q))) <= p, "sum > p at " + knot_text(p, q));
  return o;
}

Outcome roundtrip() {
  Outcome o;
  std::mt19937_64 rng(20041);
  std::uniform_int_distribution<std::int64_t> num(0, 1'000'000'000), den(1, 1'000'000'000);
  int done = 0;
  while (done < 10'000) {
    const auto a = num(rng), b = den(rng);
    if (std::gcd(a, b) != 1) continue;
    const auto r = make_rational(a, b);
    const auto cf = cf_expand(r);
    o.require(cf.size() == 1 || cf[cf.last_index()] > 1, "trailing 1 for " + to_string(r));
    o.require(cf_value(cf) == r, "roundtrip fails for " + to_string(r));
    ++done;
  }
  return o;
}

Outcome q3_coherence() {
  Outcome o;
  for (std::int64_t p = 5; p <= 1000; p += 2) {
    if (p % 3 == 0) continue;
    const TorusKnot k(p, 3);
    o.require(q3_closed_form(p).crosscap == crosscap_number(Knot{k}), "closed form differs at p=" + std::to_string(p));
    const auto br = odd_branches(k);
    const auto chosen = q3_congruence_selector(p) < 0 ? br.minus : br.plus;
    o.require(chosen == std::min(br.minus, br.plus), "selected branch not minimal at p=" + std::to_string(p));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string ref;
  for (const char* w : {"1", "2", "8"}) {
    std::string out;
    const int code = run_cli({"verify", "--max-p", "100", "--workers", w, "--json"}, &out);
    o.require(code == 0, std::string("exit code with workers=") + w);
    if (ref.empty()) ref = out;
    o.require(!out.empty() && out == ref, std::string("report differs with workers=") + w);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  worked examples N(8,3), N(34,49) and their expansions", worked_examples},
      {"2  ten odd-knot data points (genus, crossing, crosscap)", odd_knot_table},
      {"3  verify --max-p 300: 0 violations, exit 0, < 10 s", sweep_300},
      {"4  (6n-2,3), n = 1..100: c = thm1 = thm2 = n+1", sharpness},
      {"5  (2n+1,2), n = 1..100: c = 1, g = n, gap n-1", unbounded_gap},
      {"6  expansions of (pq -+ 1)/p^2 for p <= 200", lemma9},
      {"7  coefficient sum of p/q <= p for p <= 500", lemma2},
      {"8  cf roundtrip on 10000 random rationals <= 1e9", roundtrip},
      {"9  q = 3 closed form and selector for p <= 1000", q3_coherence},
      {"10 verify --max-p 100 JSON identical for workers 1,2,8", determinism},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

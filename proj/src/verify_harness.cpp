#include "crosscap/verify_harness.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <queue>
#include <thread>
#include <tuple>

#include "crosscap/cf_core.hpp"

namespace crosscap {

std::string_view check_name(Check c) {
  switch (c) {
    case Check::Thm1: return "thm1";
    case Check::Thm2: return "thm2";
    case Check::Clark: return "clark";
    case Check::MY: return "my";
    case Check::Lemma2: return "lemma2";
    case Check::Lemma9: return "lemma9";
    case Check::Q3: return "q3";
    case Check::Gap: return "gap";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks)
    if (check_name(c) == name) return c;
  return std::nullopt;
}

std::vector<Check> CheckSet::to_vector() const {
  std::vector<Check> out;
  for (Check c : kAllChecks)
    if (contains(c)) out.push_back(c);
  return out;
}

void validate(const SweepConfig& config) {
  if (config.max_p < 3 || config.max_p > kMaxParameter)
    throw InvalidArgument("max_p must lie in [3, " + std::to_string(kMaxParameter) +
                          "], got " + std::to_string(config.max_p));
  if (config.workers < 1) throw InvalidArgument("workers must be >= 1");
}

namespace {

template <class F>
void for_each_q(std::int64_t p, F&& f) {
  for (std::int64_t q = 2; q < p; ++q)
    if (std::gcd(p, q) == 1) f(TorusKnot(p, q));
}

bool lemma2_holds(const TorusKnot& k) {
  const auto cf = cf_expand(make_rational(k.p(), k.q()));
  return coefficient_sum(cf) <= k.p();
}

bool lemma9_holds(const TorusKnot& k) {
  const Int p = k.p();
  const Int q = k.q();
  const Int pq = checked_mul(p, q);
  const Int p2 = checked_mul(p, p);
  const auto [minus, plus] = lemma9_expansions(cf_expand(make_rational(q, p)));
  return is_canonical(minus.coefficients()) && is_canonical(plus.coefficients()) &&
         cf_value(minus) == make_rational(pq - 1, p2) && cf_value(plus) == make_rational(pq + 1, p2);
}

bool q3_holds(const TorusKnot& k, std::int64_t crosscap_value) {
  if (k.q() != 3 || k.p() % 2 == 0) return true;  // closed forms cover odd p only
  if (q3_closed_form(k.p()).crosscap != crosscap_value) return false;
  const auto br = odd_branches(k);
  const auto selected = q3_congruence_selector(k.p()) < 0 ? br.minus : br.plus;
  return selected == std::min(br.minus, br.plus);
}

struct Partial {
  std::int64_t count = 0;
  std::vector<BoundCheckRecord> violations;
  std::vector<TorusKnot> sharpness_hits;
  std::vector<LemmaFailure> lemma_failures;
  std::vector<BoundCheckRecord> records;
  std::optional<GapWitness> best;
  std::exception_ptr error;
  std::int64_t error_p = 0;
};

void sweep_partition(const SweepConfig& config, int worker, Partial& out) {
  std::int64_t p = 3 + worker;
  try {
    for (; p <= config.max_p; p += config.workers) {
      for_each_q(p, [&](const TorusKnot& k) {
        auto r = check_knot(k, config.checks);
        ++out.count;
        if (!out.best || r.record.gap > out.best->gap) out.best = GapWitness{k, r.record.gap};
        if (r.equality_hits.contains(Check::Thm1) || r.equality_hits.contains(Check::Thm2))
          out.sharpness_hits.push_back(k);
        for (Check c : {Check::Lemma2, Check::Lemma9})
          if (r.violated.contains(c)) out.lemma_failures.push_back({k, c});
        if (!r.violated.empty()) out.violations.push_back(r);
        if (config.collect_records) out.records.push_back(std::move(r));
      });
    }
  } catch (...) {
    out.error = std::current_exception();
    out.error_p = p;
  }
}

TorusKnot key_of(const BoundCheckRecord& r) { return std::get<TorusKnot>(r.record.knot); }
TorusKnot key_of(const TorusKnot& k) { return k; }
std::tuple<TorusKnot, Check> key_of(const LemmaFailure& f) { return {f.knot, f.check}; }

// k-way merge of per-worker lists that are each sorted by key_of.
template <class T>
std::vector<T> merge_sorted(std::vector<Partial>& parts, std::vector<T> Partial::*member) {
  using Cursor = std::pair<std::size_t, std::size_t>;  // (partial, position)
  auto greater = [&](const Cursor& a, const Cursor& b) {
    return key_of((parts[a.first].*member)[a.second]) > key_of((parts[b.first].*member)[b.second]);
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(greater)> heap(greater);
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += (parts[i].*member).size();
    if (!(parts[i].*member).empty()) heap.push({i, 0});
  }
  std::vector<T> out;
  out.reserve(total);
  while (!heap.empty()) {
    auto [i, pos] = heap.top();
    heap.pop();
    out.push_back(std::move((parts[i].*member)[pos]));
    if (pos + 1 < (parts[i].*member).size()) heap.push({i, pos + 1});
  }
  return out;
}

}  // namespace

std::vector<TorusKnot> enumerate_coprime(std::int64_t max_p) {
  if (max_p < 3 || max_p > kMaxParameter)
    throw InvalidArgument("max_p must lie in [3, " + std::to_string(kMaxParameter) + "]");
  std::vector<TorusKnot> out;
  for (std::int64_t p = 3; p <= max_p; ++p) for_each_q(p, [&](const TorusKnot& k) { out.push_back(k); });
  return out;
}

BoundCheckRecord check_knot(const TorusKnot& k, const CheckSet& checks) {
  BoundCheckRecord out{.record = invariants(k)};
  const auto& rec = out.record;
  const auto c = rec.crosscap;

  const std::pair<Check, std::int64_t> bound_checks[] = {
      {Check::Clark, rec.bounds.clark},
      {Check::MY, rec.bounds.murakami_yasuhara},
      {Check::Thm1, rec.bounds.thm1},
      {Check::Thm2, rec.bounds.thm2},
  };
  for (auto [check, bound] : bound_checks) {
    if (!checks.contains(check)) continue;
    if (c > bound) out.violated.insert(check);
    if (c == bound) out.equality_hits.insert(check);
  }
  if (checks.contains(Check::Lemma2) && !lemma2_holds(k)) out.violated.insert(Check::Lemma2);
  if (checks.contains(Check::Lemma9) && !lemma9_holds(k)) out.violated.insert(Check::Lemma9);
  if (checks.contains(Check::Q3) && !q3_holds(k, c)) out.violated.insert(Check::Q3);
  if (checks.contains(Check::Gap) && rec.gap < 0) out.violated.insert(Check::Gap);
  return out;
}

VerificationReport run_verification(const SweepConfig& config) {
  validate(config);
  const auto span_p = config.max_p - 2;
  SweepConfig effective = config;
  effective.workers = static_cast<int>(std::min<std::int64_t>(config.workers, span_p));

  std::vector<Partial> parts(static_cast<std::size_t>(effective.workers));
  {
    std::vector<std::jthread> threads;
    for (int w = 1; w < effective.workers; ++w)
      threads.emplace_back([&, w] { sweep_partition(effective, w, parts[static_cast<std::size_t>(w)]); });
    sweep_partition(effective, 0, parts[0]);
  }

  const Partial* failed = nullptr;
  for (const auto& part : parts)
    if (part.error && (!failed || part.error_p < failed->error_p)) failed = &part;
  if (failed) std::rethrow_exception(failed->error);

  VerificationReport report{.config = config};
  for (const auto& part : parts) {
    report.knots_checked += part.count;
    if (!part.best) continue;
    const auto& b = *part.best;
    const auto& cur = report.max_gap_witness;
    if (!cur || b.gap > cur->gap || (b.gap == cur->gap && b.knot < cur->knot)) report.max_gap_witness = b;
  }
  report.violations = merge_sorted(parts, &Partial::violations);
  report.sharpness_hits = merge_sorted(parts, &Partial::sharpness_hits);
  report.lemma_failures = merge_sorted(parts, &Partial::lemma_failures);
  report.records = merge_sorted(parts, &Partial::records);
  return report;
}

}  // namespace crosscap

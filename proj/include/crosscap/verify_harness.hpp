#pragma once

/**
 * @file verify_harness.hpp
 * @brief Exhaustive sweep over all torus knots (p, q) with 2 <= q < p <= max_p.
 *
 * Each knot is run through the enabled checks: the four crosscap bounds, the
 * coefficient-sum bound for p/q, the (pq -+ 1)/p^2 expansion identity, the
 * q = 3 closed form and selector, and non-negativity of genus - crosscap.
 *
 * A failed check is data: the sweep finishes and reports it. An odd skipped
 * total at a crosscap classification site is a bug and propagates as
 * IntegralityError.
 *
 * Work is partitioned by p across workers. Each worker keeps its partial
 * results sorted by (p, q) and the partials are combined with a k-way merge,
 * so the report is independent of the worker count.
 */

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/torus_knots.hpp"

namespace crosscap {

enum class Check : unsigned { Thm1, Thm2, Clark, MY, Lemma2, Lemma9, Q3, Gap };

inline constexpr Check kAllChecks[] = {Check::Thm1,   Check::Thm2,   Check::Clark, Check::MY,
                                       Check::Lemma2, Check::Lemma9, Check::Q3,    Check::Gap};

std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);

// Small ordered set of checks, iterated in declaration order.
class CheckSet {
 public:
  CheckSet() = default;
  CheckSet(std::initializer_list<Check> checks) {
    for (Check c : checks) insert(c);
  }
  static CheckSet all() { return CheckSet(0xFFu); }

  void insert(Check c) { bits_ |= bit(c); }
  bool contains(Check c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<Check> to_vector() const;

  friend bool operator==(const CheckSet&, const CheckSet&) = default;

 private:
  explicit CheckSet(unsigned bits) : bits_(bits) {}
  static unsigned bit(Check c) { return 1u << static_cast<unsigned>(c); }
  unsigned bits_ = 0;
};

struct SweepConfig {
  std::int64_t max_p = 3;
  int workers = 1;
  CheckSet checks = CheckSet::all();
  // Keep one BoundCheckRecord per knot in the report (for CSV output).
  bool collect_records = false;
};

// Throws InvalidArgument on max_p outside [3, kMaxParameter] or workers < 1.
void validate(const SweepConfig& config);

struct BoundCheckRecord {
  InvariantRecord record;
  CheckSet violated;
  CheckSet equality_hits;  // subset of {Clark, MY, Thm1, Thm2}
};

struct LemmaFailure {
  TorusKnot knot;
  Check check;
};

struct GapWitness {
  TorusKnot knot;
  std::int64_t gap;
};

struct VerificationReport {
  SweepConfig config;
  std::int64_t knots_checked = 0;
  std::vector<BoundCheckRecord> violations;
  std::vector<TorusKnot> sharpness_hits;
  std::optional<GapWitness> max_gap_witness;
  std::vector<LemmaFailure> lemma_failures;
  std::vector<BoundCheckRecord> records;  // only with config.collect_records

  bool clean() const { return violations.empty() && lemma_failures.empty(); }
};

// All coprime pairs 2 <= q < p <= max_p, ascending by (p, q).
std::vector<TorusKnot> enumerate_coprime(std::int64_t max_p);

BoundCheckRecord check_knot(const TorusKnot& k, const CheckSet& checks);

VerificationReport run_verification(const SweepConfig& config);

}  // namespace crosscap

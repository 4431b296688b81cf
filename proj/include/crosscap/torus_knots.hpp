#pragma once

// Torus-knot invariants: genus, crossing number and crosscap number, the
// four upper bounds on the crosscap number, the closed forms for q = 3 and
// the two witness families.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "crosscap/checked_int.hpp"

namespace crosscap {

// Coprime parameters with p > q >= 2.
class TorusKnot {
 public:
  // Throws InvalidArgument unless p > q >= 2, gcd(p, q) = 1 and p <= kMaxParameter.
  TorusKnot(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// A (p, 1) torus knot. Kept apart from TorusKnot; every invariant is 0.
struct Unknot {
  std::int64_t p = 1;
  std::int64_t q = 1;

  friend auto operator<=>(const Unknot&, const Unknot&) = default;
};

using Knot = std::variant<Unknot, TorusKnot>;

enum class Parity { Even, Odd };

Parity parity(const TorusKnot& k);
std::string parity_name(const Knot& k);  // "even", "odd" or "unknot"

std::int64_t knot_p(const Knot& k);
std::int64_t knot_q(const Knot& k);

struct Bounds {
  std::int64_t clark = 0;              // 2g + 1
  std::int64_t murakami_yasuhara = 0;  // floor(n / 2)
  std::int64_t thm1 = 0;               // floor((g + 9) / 6)
  std::int64_t thm2 = 0;               // floor((n + 16) / 12)

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct InvariantRecord {
  Knot knot;
  std::optional<Parity> parity;  // empty for the unknot
  std::int64_t genus = 0;
  std::int64_t crossing = 0;
  std::int64_t crosscap = 0;
  Bounds bounds;
  std::int64_t gap = 0;  // genus - crosscap

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

// Orders the pair and splits off the unknot. Rejects non-positive or
// non-coprime input and parameters above kMaxParameter.
Knot normalize(std::int64_t a, std::int64_t b);

std::int64_t genus(const TorusKnot& k);
std::int64_t crossing_number(const TorusKnot& k);

// Teragaito's classification. Even knots use N(even, odd); odd knots use
// min{N(pq - 1, p^2), N(pq + 1, p^2)}. Throws IntegralityError, naming the
// knot, if any consumed skipped total is odd.
std::int64_t crosscap_number(const Knot& k);

// The two Bredon-Wood values compared for an odd knot, in (minus, plus) order.
struct OddBranches {
  std::int64_t minus;  // N(pq - 1, p^2)
  std::int64_t plus;   // N(pq + 1, p^2)
};
OddBranches odd_branches(const TorusKnot& k);

Bounds bounds_for(std::int64_t genus, std::int64_t crossing);

InvariantRecord invariants(const Knot& k);

// p = 6m + sign with sign in {+1, -1}.
struct Q3Form {
  std::int64_t m = 0;
  int sign = 0;

  friend bool operator==(const Q3Form&, const Q3Form&) = default;
};

struct Q3ClosedForm {
  Q3Form form;
  std::int64_t crosscap = 0;  // m + 1
};

// Crosscap number of the (p, 3) torus knot from p = 6m +- 1. Requires p > 3,
// p odd and prime to 3.
Q3ClosedForm q3_closed_form(std::int64_t p);

// Solves 3x = -1 (mod p) for x in [1, p - 1]. Returns -1 when x is even
// (N(3p - 1, p^2) attains the minimum) and +1 when x is odd.
int q3_congruence_selector(std::int64_t p);

struct FamilyMember {
  std::int64_t n = 0;
  TorusKnot knot;
  InvariantRecord expected;
};

// (2n + 1, 2): genus n, crosscap 1, gap n - 1.
FamilyMember mobius_family(std::int64_t n);

// (6n - 2, 3): genus 6n - 3, crossing 12n - 4, crosscap n + 1 = thm1 = thm2.
FamilyMember sharp_family(std::int64_t n);

}  // namespace crosscap

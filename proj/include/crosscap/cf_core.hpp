#pragma once

/**
 * @file cf_core.hpp
 * @brief Exact rationals, simple continued fractions and the Bredon-Wood sum.
 *
 * A positive rational r has a unique simple continued fraction
 *
 *     r = a0 + 1/(a1 + 1/(... + 1/an))
 *
 * with a0 >= 0, ai >= 1 for i >= 1 and an > 1 whenever n > 0. The value 1 is
 * the only rational whose expansion ends in 1, namely [1].
 *
 * Everything here is exact; any intermediate that leaves the range of Int
 * raises OverflowError.
 */

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "crosscap/checked_int.hpp"

namespace crosscap {

// Non-negative fraction in lowest terms.
class Rational {
 public:
  Rational() = default;

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  friend Rational make_rational(Int numerator, Int denominator);
  Rational(Int n, Int d) : num_(n), den_(d) {}

  Int num_ = 0;
  Int den_ = 1;
};

// Throws InvalidArgument on a negative numerator or a denominator below 1.
Rational make_rational(Int numerator, Int denominator);

std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// Canonical coefficient sequence [a0, ..., an].
class ContinuedFraction {
 public:
  // Validates canonical form; throws InvalidArgument otherwise.
  static ContinuedFraction from_canonical(std::vector<Int> coefficients);

  std::span<const Int> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Int operator[](std::size_t i) const { return coeffs_[i]; }

  // Index of the last coefficient (the n in [a0, ..., an]).
  std::size_t last_index() const { return coeffs_.size() - 1; }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  explicit ContinuedFraction(std::vector<Int> c) : coeffs_(std::move(c)) {}
  std::vector<Int> coeffs_;
};

std::string to_string(const ContinuedFraction& cf);
std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

bool is_canonical(std::span<const Int> coefficients);

// A value known only to be a multiple of 1/2.
struct HalfInteger {
  Int doubled = 0;

  bool is_integral() const { return doubled % 2 == 0; }
  // Throws IntegralityError if the value is not a whole number.
  Int to_integer() const;

  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

// "k" for whole values, "d/2" (d = doubled) otherwise.
std::string to_string(const HalfInteger& h);

ContinuedFraction cf_expand(const Rational& r);

// Value of the nested fraction. Accepts non-canonical sequences as long as
// a0 >= 0 and every later coefficient is positive.
Rational cf_value(std::span<const Int> coefficients);
Rational cf_value(std::initializer_list<Int> coefficients);
inline Rational cf_value(const ContinuedFraction& cf) { return cf_value(cf.coefficients()); }

// Merges a trailing 1 into its predecessor: [..., ak, 1] -> [..., ak + 1].
// Does nothing else; the input must otherwise already be canonical.
ContinuedFraction cf_canonicalize(std::vector<Int> coefficients);

Int coefficient_sum(const ContinuedFraction& cf);

// Sum of the coefficients in order, skipping the next coefficient whenever
// the running total is even. The total is returned un-halved.
Int skipped_sum(const ContinuedFraction& cf);

// N(x, y) = skipped_sum(cf_expand(x/y)) / 2. Requires x, y >= 1 coprime.
HalfInteger bredon_wood_N(Int x, Int y);

struct Lemma9Expansions {
  ContinuedFraction minus;  // (pq - 1) / p^2
  ContinuedFraction plus;   // (pq + 1) / p^2
};

// Builds the expansions of (pq -+ 1)/p^2 from the expansion of q/p, where
// p > q > 1 are coprime. With q/p = [0, a1, ..., an] the tail is
// an+1, an-1 or an-1, an+1 depending on the sign and the parity of n,
// followed by a(n-1), ..., a1; a trailing a1 = 1 is merged.
Lemma9Expansions lemma9_expansions(const ContinuedFraction& cf_q_over_p);

}  // namespace crosscap

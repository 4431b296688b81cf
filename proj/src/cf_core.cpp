#include "crosscap/cf_core.hpp"

#include <algorithm>
#include <sstream>

namespace crosscap {

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in the unsigned domain so that INT128_MIN is representable.
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational make_rational(Int numerator, Int denominator) {
  if (denominator < 1) throw InvalidArgument("denominator must be positive");
  if (numerator < 0) throw InvalidArgument("numerator must be non-negative");
  const Int g = gcd(numerator, denominator);
  return Rational(numerator / g, denominator / g);
}

std::string to_string(const Rational& r) {
  return to_string(r.numerator()) + "/" + to_string(r.denominator());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

namespace {

void require_positive_tail(std::span<const Int> c) {
  if (c.empty()) throw InvalidArgument("continued fraction must have at least one coefficient");
  if (c[0] < 0) throw InvalidArgument("leading coefficient must be non-negative");
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < 1) {
      throw InvalidArgument("coefficient " + std::to_string(i) + " must be positive, got " +
                            to_string(c[i]));
    }
  }
}

}  // namespace

bool is_canonical(std::span<const Int> c) {
  if (c.empty() || c[0] < 0) return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] < 1) return false;
  return c.size() == 1 || c.back() > 1;
}

ContinuedFraction ContinuedFraction::from_canonical(std::vector<Int> coefficients) {
  require_positive_tail(coefficients);
  if (!is_canonical(coefficients))
    throw InvalidArgument("continued fraction is not canonical (trailing coefficient 1)");
  return ContinuedFraction(std::move(coefficients));
}

std::string to_string(const ContinuedFraction& cf) {
  std::string s = "[";
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i) s += ", ";
    s += to_string(cf[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
  return os << to_string(cf);
}

Int HalfInteger::to_integer() const {
  if (!is_integral())
    throw IntegralityError("half-integer " + to_string(*this) + " is not a whole number");
  return doubled / 2;
}

std::string to_string(const HalfInteger& h) {
  if (h.is_integral()) return to_string(h.doubled / 2);
  return to_string(h.doubled) + "/2";
}

ContinuedFraction cf_expand(const Rational& r) {
  // Euclid on (num, den); the last quotient is > 1 unless the value is 1.
  std::vector<Int> coeffs;
  Int a = r.numerator();
  Int b = r.denominator();
  while (b != 0) {
    coeffs.push_back(a / b);
    const Int rem = a % b;
    a = b;
    b = rem;
  }
  return ContinuedFraction::from_canonical(std::move(coeffs));
}

Rational cf_value(std::span<const Int> coefficients) {
  require_positive_tail(coefficients);
  // Evaluate from the innermost term outwards: value = num / den.
  Int num = coefficients.back();
  Int den = 1;
  for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it) {
    const Int next = checked_add(checked_mul(*it, num), den);
    den = num;
    num = next;
  }
  return make_rational(num, den);
}

Rational cf_value(std::initializer_list<Int> coefficients) {
  return cf_value(std::span<const Int>(coefficients.begin(), coefficients.size()));
}

ContinuedFraction cf_canonicalize(std::vector<Int> coefficients) {
  require_positive_tail(coefficients);
  if (coefficients.size() > 1 && coefficients.back() == 1) {
    coefficients.pop_back();
    coefficients.back() = checked_add(coefficients.back(), 1);
  }
  return ContinuedFraction::from_canonical(std::move(coefficients));
}

Int coefficient_sum(const ContinuedFraction& cf) {
  Int total = 0;
  for (Int a : cf.coefficients()) total = checked_add(total, a);
  return total;
}

Int skipped_sum(const ContinuedFraction& cf) {
  Int total = 0;
  std::size_t i = 0;
  while (i < cf.size()) {
    total = checked_add(total, cf[i]);
    i += (total % 2 == 0) ? 2 : 1;
  }
  return total;
}

HalfInteger bredon_wood_N(Int x, Int y) {
  if (x < 1 || y < 1) throw InvalidArgument("N(x, y) requires x, y >= 1");
  if (gcd(x, y) != 1)
    throw InvalidArgument("N(" + to_string(x) + ", " + to_string(y) + "): arguments not coprime");
  return HalfInteger{skipped_sum(cf_expand(make_rational(x, y)))};
}

Lemma9Expansions lemma9_expansions(const ContinuedFraction& cf_q_over_p) {
  const auto a = cf_q_over_p.coefficients();
  // q/p < 1 forces a0 = 0; q > 1 forces n >= 2.
  if (a[0] != 0) throw InvalidArgument("expansion of q/p must start with 0 (requires p > q)");
  if (a.size() < 3) throw InvalidArgument("expansion of q/p must have n >= 2 (requires q > 1)");

  const std::size_t n = cf_q_over_p.last_index();
  const Int an = a[n];
  const Int up = checked_add(an, 1);
  const Int down = an - 1;

  auto build = [&](Int first, Int second) {
    std::vector<Int> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
    out.push_back(first);
    out.push_back(second);
    for (std::size_t i = n - 1; i >= 1; --i) out.push_back(a[i]);
    return cf_canonicalize(std::move(out));
  };

  const bool n_odd = (n % 2) == 1;
  return n_odd ? Lemma9Expansions{build(up, down), build(down, up)}
               : Lemma9Expansions{build(down, up), build(up, down)};
}

}  // namespace crosscap

#include "crosscap/torus_knots.hpp"

#include <algorithm>
#include <numeric>

#include "crosscap/cf_core.hpp"

namespace crosscap {

namespace {

std::string pair_text(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::int64_t consume(HalfInteger n, const TorusKnot& k) {
  if (!n.is_integral()) {
    throw IntegralityError("odd skipped total " + to_string(n.doubled) +
                           " at crosscap classification of torus knot " + pair_text(k.p(), k.q()));
  }
  return to_int64(n.doubled / 2);
}

}  // namespace

TorusKnot::TorusKnot(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 2 || p <= q) throw InvalidArgument("torus knot requires p > q >= 2, got " + pair_text(p, q));
  if (p > kMaxParameter)
    throw InvalidArgument("torus knot parameter " + std::to_string(p) + " exceeds cap " +
                          std::to_string(kMaxParameter));
  if (std::gcd(p, q) != 1) throw InvalidArgument("parameters " + pair_text(p, q) + " not coprime");
}

Parity parity(const TorusKnot& k) {
  return (k.p() % 2 == 0 || k.q() % 2 == 0) ? Parity::Even : Parity::Odd;
}

std::string parity_name(const Knot& k) {
  if (std::holds_alternative<Unknot>(k)) return "unknot";
  return parity(std::get<TorusKnot>(k)) == Parity::Even ? "even" : "odd";
}

std::int64_t knot_p(const Knot& k) {
  return std::visit([](const auto& v) -> std::int64_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Unknot>) return v.p;
    else return v.p();
  }, k);
}

std::int64_t knot_q(const Knot& k) {
  return std::visit([](const auto& v) -> std::int64_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Unknot>) return v.q;
    else return v.q();
  }, k);
}

Knot normalize(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidArgument("torus knot parameters must be positive, got " + pair_text(a, b));
  if (std::max(a, b) > kMaxParameter)
    throw InvalidArgument("torus knot parameter exceeds cap " + std::to_string(kMaxParameter));
  if (std::gcd(a, b) != 1)
    throw InvalidArgument("parameters " + pair_text(a, b) + " not coprime; this is a link, not a knot");
  const auto p = std::max(a, b);
  const auto q = std::min(a, b);
  if (q == 1) return Unknot{p, q};
  return TorusKnot(p, q);
}

std::int64_t genus(const TorusKnot& k) { return (k.p() - 1) * (k.q() - 1) / 2; }

std::int64_t crossing_number(const TorusKnot& k) { return k.p() * (k.q() - 1); }

OddBranches odd_branches(const TorusKnot& k) {
  const Int p = k.p();
  const Int q = k.q();
  const Int pq = checked_mul(p, q);
  const Int p2 = checked_mul(p, p);
  return {consume(bredon_wood_N(pq - 1, p2), k), consume(bredon_wood_N(pq + 1, p2), k)};
}

std::int64_t crosscap_number(const Knot& knot) {
  if (std::holds_alternative<Unknot>(knot)) return 0;
  const auto& k = std::get<TorusKnot>(knot);
  if (parity(k) == Parity::Even) {
    const bool p_even = k.p() % 2 == 0;
    const Int even = p_even ? k.p() : k.q();
    const Int odd = p_even ? k.q() : k.p();
    return consume(bredon_wood_N(even, odd), k);
  }
  const auto [minus, plus] = odd_branches(k);
  return std::min(minus, plus);
}

Bounds bounds_for(std::int64_t g, std::int64_t n) {
  if (g < 0 || n < 0) throw InvalidArgument("genus and crossing number must be non-negative");
  return Bounds{
      .clark = 2 * g + 1,
      .murakami_yasuhara = n / 2,
      .thm1 = (g + 9) / 6,
      .thm2 = (n + 16) / 12,
  };
}

InvariantRecord invariants(const Knot& knot) {
  InvariantRecord rec{.knot = knot};
  if (const auto* k = std::get_if<TorusKnot>(&knot)) {
    rec.parity = parity(*k);
    rec.genus = genus(*k);
    rec.crossing = crossing_number(*k);
    rec.crosscap = crosscap_number(knot);
  }
  rec.bounds = bounds_for(rec.genus, rec.crossing);
  rec.gap = rec.genus - rec.crosscap;
  return rec;
}

Q3ClosedForm q3_closed_form(std::int64_t p) {
  if (p <= 3 || p % 2 == 0 || p % 3 == 0)
    throw InvalidArgument("q = 3 closed form requires p > 3, p odd and prime to 3, got " +
                          std::to_string(p));
  // An odd p prime to 3 is 1 or 5 mod 6.
  const Q3Form form = (p % 6 == 1) ? Q3Form{(p - 1) / 6, +1} : Q3Form{(p + 1) / 6, -1};
  return {form, form.m + 1};
}

int q3_congruence_selector(std::int64_t p) {
  if (p <= 3 || p % 2 == 0 || p % 3 == 0)
    throw InvalidArgument("congruence selector requires p > 3, p odd and prime to 3, got " +
                          std::to_string(p));
  // 3^{-1} mod p: p = 6m + 1 gives 3 * (4m + 1) = 2p + 1, p = 6m - 1 gives 3 * 2m = p + 1.
  const std::int64_t inv3 = (p % 6 == 1) ? (2 * p + 1) / 3 : (p + 1) / 3;
  const std::int64_t x = static_cast<std::int64_t>((static_cast<Int>(p - 1) * inv3) % p);
  if (x == 0 || (3 * static_cast<Int>(x) + 1) % p != 0)
    throw std::logic_error("no solution to 3x = -1 mod " + std::to_string(p));
  return x % 2 == 0 ? -1 : +1;
}

FamilyMember mobius_family(std::int64_t n) {
  if (n < 1) throw InvalidArgument("family index must be >= 1");
  if (n > (kMaxParameter - 1) / 2) throw InvalidArgument("family index too large");
  TorusKnot k(2 * n + 1, 2);
  InvariantRecord e{.knot = k, .parity = Parity::Even};
  e.genus = n;
  e.crossing = 2 * n + 1;
  e.crosscap = 1;
  e.bounds = bounds_for(e.genus, e.crossing);
  e.gap = n - 1;
  return {n, k, e};
}

FamilyMember sharp_family(std::int64_t n) {
  if (n < 1) throw InvalidArgument("family index must be >= 1");
  if (n > (kMaxParameter + 2) / 6) throw InvalidArgument("family index too large");
  TorusKnot k(6 * n - 2, 3);
  InvariantRecord e{.knot = k, .parity = Parity::Even};
  e.genus = 6 * n - 3;
  e.crossing = 12 * n - 4;
  e.crosscap = n + 1;
  e.bounds = Bounds{
      .clark = 2 * e.genus + 1,
      .murakami_yasuhara = e.crossing / 2,
      .thm1 = n + 1,
      .thm2 = n + 1,
  };
  e.gap = e.genus - e.crosscap;
  return {n, k, e};
}

}  // namespace crosscap

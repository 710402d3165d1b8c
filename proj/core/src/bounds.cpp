#include "amdkit/bounds.hpp"

#include <cmath>

namespace amdkit {

Rational weak_lower_bound(std::uint64_t m, std::uint64_t n, std::uint64_t a) {
  require(m >= 2, Errc::DegenerateParameters, "need at least two sources");
  require(n > 1, Errc::DegenerateParameters, "group order must exceed 1");
  require(a >= m, Errc::DegenerateParameters, "fewer valid encodings than sources");
  return Rational(BigInt(a) * (m - 1), BigInt(m) * (n - 1));
}

Rational regular_lower_bound(std::uint64_t t, std::uint64_t m, std::uint64_t n) {
  require(t >= 1, Errc::DegenerateParameters, "regularity must be >= 1");
  require(m >= 2, Errc::DegenerateParameters, "need at least two sources");
  require(n > 1, Errc::DegenerateParameters, "group order must exceed 1");
  BigInt numer = BigInt(t) * t * m * (m - 1);
  BigInt ceiled = ceil_div(numer, BigInt(n - 1));
  return Rational(ceiled, BigInt(t) * m);
}

std::vector<Rational> g_lower_bound(const AmdCode& code) {
  return std::vector<Rational>(std::size_t(code.m), Rational(1, code.t));
}

TagWindowReport effective_tag_window(std::uint32_t k, std::uint32_t u, bool strong_model,
                                     std::optional<std::pair<std::uint64_t, std::uint64_t>>
                                         witness_nm) {
  require(k >= 1 && u >= 1, Errc::DegenerateParameters, "k and u must be >= 1");
  TagWindowReport rep;
  // k - 2^(1-u) = (k * 2^(u-1) - 1) / 2^(u-1)
  BigInt half_pow = BigInt(1) << (u - 1);
  std::uint64_t base = strong_model ? 2 * std::uint64_t(k) : k;
  rep.lower_bits = Rational(BigInt(base) * half_pow - 1, half_pow);
  rep.coarse_lower_bits = std::int64_t(base) - 1;
  if (witness_nm) {
    auto [n, m] = *witness_nm;
    require(m >= 1 && n >= m, Errc::DegenerateParameters, "witness needs n >= m >= 1");
    rep.achieved_ratio = Rational(n, m);
    rep.achieved_bits = std::log2(double(n) / double(m));
    // the window is nonempty when the coarse floor does not exceed the
    // achieved tag size: 2^(floor) * m <= n compares exactly
    if (rep.coarse_lower_bits <= 0) {
      rep.window_nonempty = true;
    } else {
      rep.window_nonempty = (BigInt(1) << std::uint32_t(rep.coarse_lower_bits)) * m <= BigInt(n);
    }
  }
  return rep;
}

MMWitnessParams mm_tag_witness(std::uint32_t k, std::uint32_t u) {
  require(k >= 1 && u >= 1, Errc::DegenerateParameters, "k and u must be >= 1");
  require(k < 32, Errc::SizeCapExceeded, "witness field order 2^k too large");
  MMWitnessParams w;
  w.q = std::uint64_t{1} << k;
  w.r = 1;
  while (std::uint64_t(k) * (2 * std::uint64_t(w.r) - 1) < u) ++w.r;
  return w;
}

std::uint32_t floor_log2(const Rational& x) {
  require(x >= Rational(1, 1), Errc::DegenerateParameters, "log of value below 1");
  std::uint32_t k = 0;
  Rational two(2, 1);
  Rational acc = two;
  while (acc <= x) {
    acc = acc * two;
    ++k;
  }
  return k;
}

TraceWindowParams trace_tag_window(std::uint64_t q, std::uint32_t r, std::uint64_t m2) {
  require(r >= 1, Errc::DegenerateParameters, "r must be >= 1");
  std::uint64_t qr = 1, qr1 = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    qr *= q;
    if (i + 1 < r) qr1 *= q;
  }
  require(qr >= 3, Errc::DegenerateField, "unit group is trivial");
  require((qr - 1) % m2 == 0, Errc::BadFactorization, "m2 must divide q^r - 1");
  std::uint64_t m1 = (qr - 1) / m2;
  require(std::gcd(m1, m2) == 1, Errc::NotCoprime, "m1 and m2 must be coprime");

  TraceWindowParams w;
  w.k = floor_log2(Rational(qr - 1, qr1));
  w.u = floor_log2(Rational(m1, 1));
  w.upper_log_arg = Rational(BigInt(m2) * qr, BigInt(qr - 1));
  w.upper_bits = double(w.k) + 1.0 + std::log2(w.upper_log_arg.to_double());
  return w;
}

BoundReport optimality_verdict(const AmdCode& code, const SuccessProfile& profile) {
  require(profile.weak_computed && profile.strong_computed, Errc::ProfileIncomplete,
          "verdicts need the weak and strong models evaluated");
  BoundReport rep;
  rep.weak_lower.value = profile.weak_rho;
  rep.weak_lower.bound = weak_lower_bound(code.m, code.n, code.m * code.t);
  rep.weak_lower.met = rep.weak_lower.value >= rep.weak_lower.bound;

  rep.regular_lower.value = profile.weak_rho;
  rep.regular_lower.bound = regular_lower_bound(code.t, code.m, code.n);
  rep.regular_lower.met = rep.regular_lower.value >= rep.regular_lower.bound;
  rep.r_optimal = profile.weak_rho == rep.regular_lower.bound;

  auto floors = g_lower_bound(code);
  rep.g_optimal = true;
  for (std::size_t s = 0; s < floors.size(); ++s) {
    BoundCheck chk;
    chk.value = profile.strong_rho_per_source[s];
    chk.bound = floors[s];
    chk.met = chk.value >= chk.bound;
    rep.g_optimal = rep.g_optimal && chk.value == chk.bound;
    rep.g_lower_per_source.push_back(std::move(chk));
  }

  if (!profile.weak_rho.is_zero()) {
    std::uint32_t k = floor_log2(Rational(1, 1) / profile.weak_rho);
    std::uint32_t u = floor_log2(Rational(code.m, 1));
    if (k >= 1 && u >= 1) {
      rep.window_k = k;
      rep.window_u = u;
      rep.tag_window = effective_tag_window(k, u, false, std::pair{code.n, code.m});
    }
  }
  return rep;
}

}  // namespace amdkit

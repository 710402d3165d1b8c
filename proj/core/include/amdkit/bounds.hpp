#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amdkit/amd.hpp"
#include "amdkit/rational.hpp"

namespace amdkit {

// Floor of the weak success probability for any code: a(m-1) / (m(n-1)),
// where a is the total number of valid encodings.
Rational weak_lower_bound(std::uint64_t m, std::uint64_t n, std::uint64_t a);

// Floor for t-regular weak codes: ceil(t^2 m(m-1) / (n-1)) / (tm).
Rational regular_lower_bound(std::uint64_t t, std::uint64_t m, std::uint64_t n);

// Per-source guessing floor 1/|G_s| = 1/t for systematic regular codes.
std::vector<Rational> g_lower_bound(const AmdCode& code);

// Effective-tag-size window in bits. The lower bound is k - 2^(1-u) for the
// weak model and 2k - 2^(1-u) for the strong model, exact as a rational.
// A witness (n, m) supplies the achieved upper end; its tag ratio n/m is the
// authoritative exact value and bits are rendering only.
struct TagWindowReport {
  Rational lower_bits;
  std::int64_t coarse_lower_bits = 0;  // k-1, resp. 2k-1
  std::optional<Rational> achieved_ratio;
  std::optional<double> achieved_bits;
  bool window_nonempty = true;
};
TagWindowReport effective_tag_window(std::uint32_t k, std::uint32_t u, bool strong_model,
                                     std::optional<std::pair<std::uint64_t, std::uint64_t>>
                                         witness_nm = std::nullopt);

// Parameters of the weak MM witness achieving tag size 2k for security 2^-k
// and source size 2^u: q = 2^k and the least r with u <= k(2r-1).
struct MMWitnessParams {
  std::uint64_t q;
  std::uint32_t r;
};
MMWitnessParams mm_tag_witness(std::uint32_t k, std::uint32_t u);

// Window data for the generator-power construction on Z_{q^r-1} with factor
// m2: k = floor(log2((q^r-1)/q^(r-1))), u = floor(log2(m1)), and the upper
// end k + 1 + log2(m2 q^r / (q^r - 1)).
struct TraceWindowParams {
  std::uint32_t k;
  std::uint32_t u;
  Rational upper_log_arg;  // m2 q^r / (q^r - 1)
  double upper_bits;       // k + 1 + log2(upper_log_arg)
};
TraceWindowParams trace_tag_window(std::uint64_t q, std::uint32_t r, std::uint64_t m2);

struct BoundCheck {
  Rational value;
  Rational bound;
  bool met = false;  // value >= bound for floors; the verdicts test equality
};

struct BoundReport {
  BoundCheck weak_lower;
  BoundCheck regular_lower;
  std::vector<BoundCheck> g_lower_per_source;
  // the window implied by the code's own security level k = floor(log2(1/rho))
  // and source size u = floor(log2 m); absent when k would be 0
  std::optional<TagWindowReport> tag_window;
  std::uint32_t window_k = 0;
  std::uint32_t window_u = 0;
  bool r_optimal = false;  // weak rho equals the regular floor exactly
  bool g_optimal = false;  // every per-source rho equals 1/t exactly
};

BoundReport optimality_verdict(const AmdCode& code, const SuccessProfile& profile);

// largest k with 2^k <= x; requires x >= 1
std::uint32_t floor_log2(const Rational& x);

}  // namespace amdkit

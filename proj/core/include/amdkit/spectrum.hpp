#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "amdkit/func.hpp"
#include "amdkit/rational.hpp"

namespace amdkit {

// Materialization threshold: full (delta, b) tables above this many cells are
// refused; the streaming max path has no such limit.
inline constexpr std::uint64_t kMaterializeCells = std::uint64_t{1} << 20;

// Exact derivative counts: counts(deltaA, b) = #{x in A : f(x+delta) - f(x) = b},
// deltaA indexed over A = A1 x A2 with the A1 component fastest. In restricted
// mode only offsets with nonzero A1 component are tabulated; their rows are
// left zero.
class DifferentialSpectrum {
 public:
  DifferentialSpectrum(std::uint64_t domain, std::uint64_t codomain, bool restricted)
      : domain_(domain), codomain_(codomain), restricted_(restricted),
        counts_(std::size_t(domain * codomain), 0) {}

  std::uint64_t domain_order() const { return domain_; }
  std::uint64_t codomain_order() const { return codomain_; }
  bool restricted() const { return restricted_; }
  std::uint64_t count(Idx delta_a, Idx b) const {
    return counts_[std::size_t(delta_a * codomain_ + b)];
  }
  std::vector<std::uint64_t>& raw() { return counts_; }
  const std::vector<std::uint64_t>& raw() const { return counts_; }

  // "deltaIndex,bIndex,count" rows sorted by (deltaIndex, bIndex)
  void write_csv(std::ostream& os) const;

 private:
  std::uint64_t domain_;
  std::uint64_t codomain_;
  bool restricted_;
  std::vector<std::uint64_t> counts_;
};

DifferentialSpectrum differential_spectrum(const Func& f, bool restricted,
                                           unsigned workers = 1,
                                           std::uint64_t max_cells = kDefaultMaxCells);

// Streaming maximum over derivative counts. Ties resolve to the smallest
// delta index, then the smallest b index, independent of the worker count.
struct SpectrumMax {
  std::uint64_t count = 0;
  Idx delta_a = 0;  // index over A1 x A2, A1 fastest
  Idx b = 0;
};
SpectrumMax spectrum_max(const Func& f, bool restricted, unsigned workers = 1);

// max over all nonzero offsets (and every b) of count / |A|
Rational nonlinearity_of(const Func& f, unsigned workers = 1);

// same maximum restricted to offsets with nonzero A1 component
Rational partial_nonlinearity_of(const Func& f, unsigned workers = 1);

// every preimage class has size |A| / |B|
bool is_balanced(std::span<const std::uint32_t> table, std::uint64_t codomain_order);

// nonlinearity equals 1/|B| exactly
bool is_perfect_nonlinear(const Func& f, unsigned workers = 1);

// equivalent characterization: every nonzero-offset derivative is balanced
bool all_derivatives_balanced(const Func& f);

}  // namespace amdkit

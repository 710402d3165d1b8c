#pragma once

#include <span>
#include <vector>

#include "amdkit/amd.hpp"
#include "amdkit/spectrum.hpp"

namespace amdkit {

// f_E(s1, s2) = the unique valid tag at (s1, s2), recovered through the
// decoder. Fails with NotSystematic when a cell has zero or multiple tags.
Func extract_function(const AmdCode& code);

// Same, from a loose list of valid codewords (duplicates and gaps rejected).
Func extract_function(const GroupPtr& a1, const GroupPtr& a2, const GroupPtr& b,
                      std::span<const Codeword> words);

// Function-table file read for imported codes: entries may arrive in any
// order, and cells with zero or conflicting tags reject as NotSystematic.
Func import_code_table(std::istream& is, std::uint64_t max_cells = kDefaultMaxCells);

// Nonlinearity of the single-source slice x -> f_E(s', x) over A2 -> B.
Rational restricted_nonlinearity(const Func& fe, Idx source, unsigned workers = 1);

struct DerivedFunction {
  Func fe;
  Rational full_nonlinearity;
  std::vector<Rational> restricted;  // per source
};
DerivedFunction derive_function(const AmdCode& code, unsigned workers = 1);

// P(f_E) <= max({weak rho} U {restricted nonlinearities}); both sides exact.
struct DerivedBoundCheck {
  Rational lhs;  // nonlinearity of f_E
  Rational rhs;
  bool holds = false;
  std::vector<Rational> per_source;
};
DerivedBoundCheck derived_nonlinearity_bound(const AmdCode& code, unsigned workers = 1,
                                             std::uint64_t max_cells = kDefaultMaxCells);

// P(f_E) <= rho of the any-valid-decode model; both sides exact.
struct StrongerBoundCheck {
  Rational stronger_rho;
  Rational fe_nonlinearity;
  bool holds = false;
};
StrongerBoundCheck stronger_rho_bound(const AmdCode& code, unsigned workers = 1,
                                      std::uint64_t max_cells = kDefaultMaxCells);

}  // namespace amdkit

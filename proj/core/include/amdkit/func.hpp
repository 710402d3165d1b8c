#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "amdkit/group.hpp"

namespace amdkit {

enum class Origin { MM, Dillon, DillonDual, TraceMult, CDFPW, Table };
enum class Split { Weak, Strong };

const char* origin_name(Origin o);

// A total map A1 x A2 -> B carrying its designated source/randomness split.
// The value table is materialized at construction (the size cap bounds it),
// stored row-major with a1 as the row index.
class Func {
 public:
  Func(GroupPtr a1, GroupPtr a2, GroupPtr b, std::vector<std::uint32_t> table, Origin origin);

  const GroupPtr& a1() const { return a1_; }
  const GroupPtr& a2() const { return a2_; }
  const GroupPtr& b() const { return b_; }
  Origin origin() const { return origin_; }
  std::uint64_t domain_order() const { return a1_->order() * a2_->order(); }

  Idx eval(Idx s1, Idx s2) const { return table_[std::size_t(s1 * a2_->order() + s2)]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  // the same map with A1 collapsed to the slice at s1 (a function of A2 only)
  Func slice(Idx s1) const;

 private:
  GroupPtr a1_, a2_, b_;
  std::vector<std::uint32_t> table_;
  Origin origin_;
};

// f(x_1..x_2r) = sum x_i x_{i+r} over GF(q)^2r. Weak split keeps the last
// coordinate as randomness; strong split halves the coordinates.
Func mm_func(std::uint64_t q, std::uint32_t r, Split split,
             std::uint64_t max_cells = kDefaultMaxCells);

// f(x, y) = g(x * y^(q^r - 2)) over GF(q^r)^2 for a balanced g to GF(q);
// g defaults to the relative trace.
Func dillon_func(std::uint64_t q, std::uint32_t r,
                 std::optional<std::vector<std::uint32_t>> g, Split split,
                 std::uint64_t max_cells = kDefaultMaxCells);

// f(x, y) = tr(x̂^(q^r-2) ŷ) with coordinates taken in a basis and its dual.
// Strong split by construction. The basis lists field-element indices of
// GF(q^r); it defaults to the power basis {1, x, ..., x^(r-1)}.
Func dillon_dual_func(std::uint64_t q, std::uint32_t r,
                      std::optional<std::vector<Idx>> basis = std::nullopt,
                      std::uint64_t max_cells = kDefaultMaxCells);

// Z_m1 x Z_m2 -> GF(q) through the CRT recombination, the generator-power
// isomorphism onto the unit group, and a nonzero additive map L (table over
// all field indices; defaults to the relative trace).
Func trace_mult_func(std::uint64_t q, std::uint32_t r,
                     std::optional<std::vector<std::uint32_t>> L,
                     std::uint64_t m1, std::uint64_t m2,
                     std::uint64_t max_cells = kDefaultMaxCells);

// h(S, x) = x^(t+2) + sum_{1<=i<=t} s_i x^i over GF(q), requiring that the
// characteristic does not divide t + 2.
Func cdfpw_func(std::uint64_t q, std::uint32_t t,
                std::uint64_t max_cells = kDefaultMaxCells);

Func func_from_table(GroupPtr a1, GroupPtr a2, GroupPtr b, std::vector<std::uint32_t> table);

// Text table format: line 1 "A1=<spec> A2=<spec> B=<spec>", then one
// "a1Index a2Index bIndex" line per cell in row-major order.
void write_table(const Func& f, std::ostream& os);
Func read_table(std::istream& is, std::uint64_t max_cells = kDefaultMaxCells);
std::array<GroupPtr, 3> parse_table_header(const std::string& line);

// q = p^d for prime p; fails with NonPrime otherwise.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q);

}  // namespace amdkit

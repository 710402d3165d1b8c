#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amdkit/error.hpp"

namespace amdkit {

using Idx = std::uint64_t;

// Refusal threshold for exhaustive structures (tables, enumerations).
inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 24;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^r) in polynomial basis over GF(p), immutable after construction and
// safe to share across threads. Element indices pack coefficients
// little-endian: idx = sum c_i * p^i, so index 0 is the zero element and
// index 1 is the multiplicative identity.
//
// A field may carry a designated base subfield GF(q0) with q0 = p^d, d | r.
// Traces, balanced maps and coordinate packings are then taken relative to
// that subfield; d = 1 gives the prime-subfield (absolute) versions.
class Field : public std::enable_shared_from_this<Field> {
 public:
  // modulus, when given, lists c0..cr low-degree-first with cr = 1. Without
  // one, the lexicographically smallest monic irreducible is selected.
  static FieldPtr make(std::uint32_t p, std::uint32_t r,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                       std::uint32_t base_degree = 1,
                       std::uint64_t max_cells = kDefaultMaxCells);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return r_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  Idx generator() const { return gen_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  Idx add(Idx a, Idx b) const;
  Idx neg(Idx a) const;
  Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }
  Idx mul(Idx a, Idx b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[mod_order(std::uint64_t(log_[a]) + log_[b])];
  }
  Idx inv(Idx a) const;
  Idx pow(Idx a, std::uint64_t e) const;  // 0^0 = 1, 0^e = 0 for e >= 1
  std::uint64_t dlog(Idx a) const;        // discrete log base generator, a != 0

  std::vector<std::uint32_t> coeffs(Idx a) const;
  Idx from_coeffs(const std::vector<std::uint32_t>& c) const;

  // Designated base subfield GF(q0), q0 = p^d.
  std::uint32_t base_degree() const { return d_; }
  std::uint64_t base_order() const { return q0_; }
  std::uint32_t ext_degree() const { return e_; }  // r / d
  FieldPtr base_field() const;                     // GF(p^d) with its canonical modulus
  Idx trace(Idx a) const;              // relative trace; result lies in the base subfield
  bool in_base_subfield(Idx a) const;
  Idx embed_base(Idx k) const;         // base-subfield index -> field index
  Idx extract_base(Idx a) const;       // field index -> base-subfield index; a must lie there
  // Coordinates of the field over GF(q0) w.r.t. the power basis {1, x, ..., x^{e-1}},
  // packed little-endian: tuple = sum k_i * q0^i.
  Idx pack_base_tuple(Idx tuple) const;
  Idx unpack_base_tuple(Idx a) const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && r_ == other.r_ && mod_ == other.mod_ && d_ == other.d_;
  }

  std::string text() const;  // "GF(p^r|modulus=c0,c1,...,cr)"

 private:
  Field() = default;
  std::uint64_t mod_order(std::uint64_t v) const { return v % (q_ - 1); }

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  std::uint64_t q_ = 0;
  std::uint32_t d_ = 1;
  std::uint32_t e_ = 0;
  std::uint64_t q0_ = 0;
  std::vector<std::uint32_t> mod_;
  Idx gen_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = generator^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0; log_[0] unused
  FieldPtr base_;                   // null when the base subfield is the field itself
  std::vector<std::uint32_t> embed_;    // base index -> field index (d > 1 reps)
  std::vector<std::uint32_t> extract_;  // field index -> base index or kNotInBase
  std::vector<std::uint32_t> pack_;     // base-coordinate tuple -> field index
  std::vector<std::uint32_t> unpack_;   // field index -> base-coordinate tuple

  static constexpr std::uint32_t kNotInBase = ~std::uint32_t{0};
};

// Convenience view for formula-style code and tests; kernels use raw indices.
struct FieldElem {
  FieldPtr field;
  Idx idx = 0;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  FieldElem inverse() const { return {field, field->inv(idx)}; }
  FieldElem pow(std::uint64_t e) const { return {field, field->pow(idx, e)}; }
  FieldElem trace() const { return {field, field->trace(idx)}; }
};

// {beta_j} with trace(alpha_i * beta_j) = delta_ij relative to F's base
// subfield, computed by inverting the trace Gram matrix. Inputs and outputs
// are element indices of F.
std::vector<Idx> dual_basis(const FieldPtr& f, const std::vector<Idx>& basis);

bool is_prime(std::uint64_t n);

}  // namespace amdkit

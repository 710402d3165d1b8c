#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "amdkit/field.hpp"

namespace amdkit {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite abelian group with canonical element indices in [0, order).
// Identity is index 0 in every kind. Product indices are mixed-radix with
// the first component fastest. The multiplicative group of a field is
// indexed by shifting nonzero field indices down by one, which keeps the
// identity at index 0.
class Group {
 public:
  enum class Kind { Cyclic, Product, FieldAdditive, FieldMultCyclic };

  static GroupPtr cyclic(std::uint64_t n);
  static GroupPtr product(std::vector<GroupPtr> parts);
  // n copies of the same part; collapses to the part itself when n == 1
  static GroupPtr power(const GroupPtr& part, std::uint32_t n);
  static GroupPtr field_additive(FieldPtr f);
  static GroupPtr field_mult_cyclic(FieldPtr f);  // requires |F| >= 3

  Kind kind() const { return kind_; }
  std::uint64_t order() const { return order_; }
  const std::vector<GroupPtr>& parts() const { return parts_; }
  const FieldPtr& field() const { return field_; }

  Idx add(Idx a, Idx b) const;
  Idx neg(Idx a) const;
  Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }
  Idx zero() const { return 0; }

  std::vector<Idx> decompose(Idx a) const;        // product coordinates
  Idx compose(const std::vector<Idx>& cs) const;  // inverse of decompose

  bool same_as(const Group& other) const;

  // Canonical textual form: Z(n), GF(p^r|modulus=c0,..,cr), Prod(a;b;...).
  // The multiplicative-as-cyclic kind serializes as its cyclic shadow Z(n).
  std::string text() const;
  static GroupPtr parse(const std::string& s);

 private:
  Group() = default;
  Kind kind_ = Kind::Cyclic;
  std::uint64_t order_ = 1;
  std::vector<GroupPtr> parts_;
  FieldPtr field_;
};

// Bijective homomorphism given by total index maps.
struct Iso {
  GroupPtr from;
  GroupPtr to;
  std::vector<Idx> forward;
  std::vector<Idx> backward;

  Idx fwd(Idx a) const { return forward[std::size_t(a)]; }
  Idx bwd(Idx a) const { return backward[std::size_t(a)]; }
};

// Z(q-1) -> (F*, x): forward(i) = generator^i, backward by discrete log.
Iso cyclic_iso(const FieldPtr& f, std::uint64_t max_cells = kDefaultMaxCells);

// Z(n) -> Z(m1) x Z(m2) for coprime m1*m2 = n, by residues; backward by CRT.
Iso crt_split(std::uint64_t n, std::uint64_t m1, std::uint64_t m2,
              std::uint64_t max_cells = kDefaultMaxCells);

}  // namespace amdkit

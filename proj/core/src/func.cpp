#include "amdkit/func.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "amdkit/spectrum.hpp"

namespace amdkit {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t max_cells,
                          const char* what) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    require(v <= max_cells / base, Errc::SizeCapExceeded,
            std::string(what) + " exceeds the size cap " + std::to_string(max_cells));
    v *= base;
  }
  return v;
}

}  // namespace

const char* origin_name(Origin o) {
  switch (o) {
    case Origin::MM: return "MM";
    case Origin::Dillon: return "Dillon";
    case Origin::DillonDual: return "DillonDual";
    case Origin::TraceMult: return "TraceMult";
    case Origin::CDFPW: return "CDFPW";
    case Origin::Table: return "Table";
  }
  return "?";
}

Func::Func(GroupPtr a1, GroupPtr a2, GroupPtr b, std::vector<std::uint32_t> table, Origin origin)
    : a1_(std::move(a1)), a2_(std::move(a2)), b_(std::move(b)),
      table_(std::move(table)), origin_(origin) {
  require(table_.size() == a1_->order() * a2_->order(), Errc::BadTableLength,
          "table has " + std::to_string(table_.size()) + " entries, domain needs " +
              std::to_string(a1_->order() * a2_->order()));
  for (auto v : table_)
    require(v < b_->order(), Errc::IndexOutOfRange, "table value outside the codomain");
}

Func Func::slice(Idx s1) const {
  require(s1 < a1_->order(), Errc::BadSource, "source index out of range");
  std::uint64_t n2 = a2_->order();
  std::vector<std::uint32_t> row(table_.begin() + std::ptrdiff_t(s1 * n2),
                                 table_.begin() + std::ptrdiff_t((s1 + 1) * n2));
  return Func(Group::cyclic(1), a2_, b_, std::move(row), Origin::Table);
}

Func mm_func(std::uint64_t q, std::uint32_t r, Split split, std::uint64_t max_cells) {
  require(r >= 1, Errc::DegenerateParameters, "r must be >= 1");
  auto [p, d] = factor_prime_power(q);
  checked_pow(q, 2 * r, max_cells, "domain q^(2r)");
  FieldPtr K = Field::make(p, d, std::nullopt, 1, max_cells);
  GroupPtr Kadd = Group::field_additive(K);

  GroupPtr a1 = split == Split::Weak ? Group::power(Kadd, 2 * r - 1) : Group::power(Kadd, r);
  GroupPtr a2 = split == Split::Weak ? Kadd : Group::power(Kadd, r);

  std::uint64_t n1 = a1->order(), n2 = a2->order();
  std::vector<std::uint32_t> table(std::size_t(n1 * n2));
  std::vector<Idx> x(std::size_t(2) * r);
  for (Idx s1 = 0; s1 < n1; ++s1) {
    Idx v = s1;
    std::uint32_t ncoord1 = split == Split::Weak ? 2 * r - 1 : r;
    for (std::uint32_t i = 0; i < ncoord1; ++i) {
      x[i] = v % q;
      v /= q;
    }
    for (Idx s2 = 0; s2 < n2; ++s2) {
      v = s2;
      for (std::uint32_t i = ncoord1; i < 2 * r; ++i) {
        x[i] = v % q;
        v /= q;
      }
      Idx acc = 0;
      for (std::uint32_t i = 0; i < r; ++i) acc = K->add(acc, K->mul(x[i], x[i + r]));
      table[std::size_t(s1 * n2 + s2)] = std::uint32_t(acc);
    }
  }
  return Func(std::move(a1), std::move(a2), Group::field_additive(K), std::move(table),
              Origin::MM);
}

Func dillon_func(std::uint64_t q, std::uint32_t r, std::optional<std::vector<std::uint32_t>> g,
                 Split split, std::uint64_t max_cells) {
  require(r >= 1, Errc::DegenerateParameters, "r must be >= 1");
  auto [p, d] = factor_prime_power(q);
  FieldPtr F = Field::make(p, d * r, std::nullopt, d, max_cells);
  std::uint64_t qr = F->order();
  require(qr >= 3, Errc::DegenerateField, "q^r must be >= 3");
  checked_pow(qr, 2, max_cells, "domain q^(2r)");

  std::vector<std::uint32_t> gt;
  if (g) {
    gt = std::move(*g);
    require(gt.size() == qr, Errc::BadTableLength, "g table must cover GF(q^r)");
    for (auto v : gt)
      require(v < q, Errc::IndexOutOfRange, "g value outside GF(q)");
    require(is_balanced(gt, q), Errc::NotBalanced, "g is not balanced");
  } else {
    gt.resize(std::size_t(qr));
    for (Idx a = 0; a < qr; ++a)
      gt[std::size_t(a)] = std::uint32_t(F->extract_base(F->trace(a)));
  }

  GroupPtr Kadd = Group::field_additive(F->base_field());
  GroupPtr a1 = split == Split::Weak ? Group::power(Kadd, 2 * r - 1) : Group::power(Kadd, r);
  GroupPtr a2 = split == Split::Weak ? Kadd : Group::power(Kadd, r);

  const std::uint64_t expo = qr - 2;
  std::uint64_t n1 = a1->order(), n2 = a2->order();
  std::uint64_t qpow_r1 = 1;  // q^(r-1)
  for (std::uint32_t i = 1; i < r; ++i) qpow_r1 *= q;
  std::vector<std::uint32_t> table(std::size_t(n1 * n2));
  for (Idx s1 = 0; s1 < n1; ++s1) {
    for (Idx s2 = 0; s2 < n2; ++s2) {
      Idx xt, yt;  // coordinate tuples of X and Y, little-endian base q
      if (split == Split::Weak) {
        xt = s1 % (qpow_r1 * q);
        yt = s1 / (qpow_r1 * q) + s2 * qpow_r1;
      } else {
        xt = s1;
        yt = s2;
      }
      Idx X = F->pack_base_tuple(xt);
      Idx Y = F->pack_base_tuple(yt);
      table[std::size_t(s1 * n2 + s2)] =
          std::uint32_t(gt[std::size_t(F->mul(X, F->pow(Y, expo)))]);
    }
  }
  return Func(std::move(a1), std::move(a2), std::move(Kadd), std::move(table), Origin::Dillon);
}

Func dillon_dual_func(std::uint64_t q, std::uint32_t r, std::optional<std::vector<Idx>> basis,
                      std::uint64_t max_cells) {
  require(r >= 1, Errc::DegenerateParameters, "r must be >= 1");
  auto [p, d] = factor_prime_power(q);
  FieldPtr F = Field::make(p, d * r, std::nullopt, d, max_cells);
  std::uint64_t qr = F->order();
  // q^r = 2 degenerates: x^(q^r - 2) is no longer the inversion permutation
  require(qr >= 3, Errc::DegenerateField, "q^r must be >= 3");
  checked_pow(qr, 2, max_cells, "domain q^(2r)");

  std::vector<Idx> alpha;
  if (basis) {
    alpha = std::move(*basis);
  } else {
    alpha.resize(r);
    std::uint64_t t = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      alpha[i] = F->pack_base_tuple(t);  // the power basis {1, x, ..., x^(r-1)}
      t *= q;
    }
  }
  std::vector<Idx> beta = dual_basis(F, alpha);

  GroupPtr Kadd = Group::field_additive(F->base_field());
  GroupPtr a1 = Group::power(Kadd, r);
  GroupPtr a2 = Group::power(Kadd, r);

  const std::uint64_t expo = qr - 2;
  std::uint64_t n1 = a1->order(), n2 = a2->order();
  std::vector<std::uint32_t> table(std::size_t(n1 * n2));
  std::vector<Idx> xhat(static_cast<std::size_t>(n1)), yhat(static_cast<std::size_t>(n2));
  for (Idx s = 0; s < n1; ++s) {
    Idx v = s, acc = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
      acc = F->add(acc, F->mul(F->embed_base(v % q), alpha[i]));
      v /= q;
    }
    xhat[std::size_t(s)] = acc;
  }
  for (Idx s = 0; s < n2; ++s) {
    Idx v = s, acc = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
      acc = F->add(acc, F->mul(F->embed_base(v % q), beta[i]));
      v /= q;
    }
    yhat[std::size_t(s)] = acc;
  }
  for (Idx s1 = 0; s1 < n1; ++s1) {
    Idx xe = F->pow(xhat[std::size_t(s1)], expo);
    for (Idx s2 = 0; s2 < n2; ++s2)
      table[std::size_t(s1 * n2 + s2)] =
          std::uint32_t(F->extract_base(F->trace(F->mul(xe, yhat[std::size_t(s2)]))));
  }
  return Func(std::move(a1), std::move(a2), std::move(Kadd), std::move(table),
              Origin::DillonDual);
}

Func trace_mult_func(std::uint64_t q, std::uint32_t r, std::optional<std::vector<std::uint32_t>> L,
                     std::uint64_t m1, std::uint64_t m2, std::uint64_t max_cells) {
  require(r >= 1, Errc::DegenerateParameters, "r must be >= 1");
  auto [p, d] = factor_prime_power(q);
  FieldPtr F = Field::make(p, d * r, std::nullopt, d, max_cells);
  std::uint64_t qr = F->order();

  std::vector<std::uint32_t> lt;
  if (L) {
    lt = std::move(*L);
    require(lt.size() == qr, Errc::BadTableLength, "L table must cover GF(q^r)");
    bool nonzero = false;
    for (auto v : lt) {
      require(v < q, Errc::IndexOutOfRange, "L value outside GF(q)");
      nonzero = nonzero || v != 0;
    }
    require(nonzero, Errc::ZeroMap, "L is the zero map");
    // Additivity against unit increments extends to the whole additive group
    // by chaining, so this check is complete. x^j has element index p^j.
    FieldPtr K = F->base_field();
    for (std::uint32_t j = 0; j < F->degree(); ++j) {
      Idx unit = 1;
      for (std::uint32_t i = 0; i < j; ++i) unit *= p;
      for (Idx a = 0; a < qr; ++a) {
        Idx s = F->add(a, unit);
        require(lt[std::size_t(s)] == K->add(lt[std::size_t(a)], lt[std::size_t(unit)]),
                Errc::NotAdditive, "L is not additive");
      }
    }
  } else {
    lt.resize(std::size_t(qr));
    for (Idx a = 0; a < qr; ++a)
      lt[std::size_t(a)] = std::uint32_t(F->extract_base(F->trace(a)));
  }

  Iso crt = crt_split(qr - 1, m1, m2, max_cells);
  Iso phi = cyclic_iso(F, max_cells);

  GroupPtr a1 = Group::cyclic(m1);
  GroupPtr a2 = Group::cyclic(m2);
  std::vector<std::uint32_t> table(std::size_t(m1 * m2));
  for (Idx i = 0; i < m1; ++i) {
    for (Idx j = 0; j < m2; ++j) {
      Idx z = crt.bwd(i + m1 * j);
      Idx unit_index = phi.fwd(z);
      table[std::size_t(i * m2 + j)] = lt[std::size_t(unit_index + 1)];
    }
  }
  return Func(std::move(a1), std::move(a2), Group::field_additive(F->base_field()),
              std::move(table), Origin::TraceMult);
}

Func cdfpw_func(std::uint64_t q, std::uint32_t t, std::uint64_t max_cells) {
  require(t >= 1, Errc::DegenerateParameters, "t must be >= 1");
  auto [p, d] = factor_prime_power(q);
  require((t + 2) % p != 0, Errc::CharacteristicDividesDegree,
          "characteristic " + std::to_string(p) + " divides t+2 = " + std::to_string(t + 2));
  checked_pow(q, t + 1, max_cells, "domain q^(t+1)");
  FieldPtr K = Field::make(p, d, std::nullopt, 1, max_cells);
  GroupPtr Kadd = Group::field_additive(K);
  GroupPtr a1 = Group::power(Kadd, t);

  std::uint64_t n1 = a1->order();
  std::vector<std::uint32_t> table(std::size_t(n1 * q));
  for (Idx s = 0; s < n1; ++s) {
    for (Idx x = 0; x < q; ++x) {
      Idx acc = K->pow(x, t + 2);
      Idx v = s;
      Idx xp = x;
      for (std::uint32_t i = 1; i <= t; ++i) {
        acc = K->add(acc, K->mul(v % q, xp));
        v /= q;
        xp = K->mul(xp, x);
      }
      table[std::size_t(s * q + x)] = std::uint32_t(acc);
    }
  }
  return Func(std::move(a1), Kadd, Kadd, std::move(table), Origin::CDFPW);
}

Func func_from_table(GroupPtr a1, GroupPtr a2, GroupPtr b, std::vector<std::uint32_t> table) {
  return Func(std::move(a1), std::move(a2), std::move(b), std::move(table), Origin::Table);
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
  require(q >= 2, Errc::NonPrime, "q must be >= 2");
  std::uint64_t p = q;
  for (std::uint64_t c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  std::uint32_t d = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++d;
  }
  require(v == 1, Errc::NonPrime, std::to_string(q) + " is not a prime power");
  return {std::uint32_t(p), d};
}

}  // namespace amdkit

#include "amdkit/field.hpp"

#include <algorithm>
#include <sstream>

namespace amdkit {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low-degree-first over GF(p)

int poly_deg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[std::size_t(i)] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = std::uint32_t((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  return out;
}

// a mod m, m monic.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  int dm = poly_deg(m);
  for (int i = poly_deg(a); i >= dm; --i) {
    std::uint32_t c = a[std::size_t(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      std::uint64_t sub = std::uint64_t(c) * m[std::size_t(j)] % p;
      std::uint32_t& dst = a[std::size_t(i - dm + j)];
      dst = std::uint32_t((dst + p - sub) % p);
    }
  }
  a.resize(std::size_t(dm));
  a.resize(std::size_t(std::max(dm, 1)), 0);
  return a;
}

// Does the monic divisor d divide a exactly?
bool poly_divides(const Poly& d, Poly a, std::uint32_t p) {
  return poly_deg(poly_mod(std::move(a), d, p)) < 0;
}

std::uint32_t poly_eval(const Poly& a, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (int i = poly_deg(a); i >= 0; --i) acc = (acc * x + a[std::size_t(i)]) % p;
  return std::uint32_t(acc);
}

// Exhaustive irreducibility check: roots rule out linear factors; for degree
// >= 4, trial division by every monic polynomial of degree 2..deg/2 rules out
// the rest.
bool poly_irreducible(const Poly& m, std::uint32_t p) {
  int deg = poly_deg(m);
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (std::uint32_t x = 0; x < p; ++x)
    if (poly_eval(m, x, p) == 0) return false;
  if (deg <= 3) return true;
  for (int k = 2; k <= deg / 2; ++k) {
    Poly div(std::size_t(k) + 1, 0);
    div[std::size_t(k)] = 1;
    // odometer over the k free coefficients
    while (true) {
      if (poly_divides(div, m, p)) return false;
      int pos = 0;
      while (pos < k && ++div[std::size_t(pos)] == p) div[std::size_t(pos++)] = 0;
      if (pos == k) break;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Element index <-> lex rank. Lex order compares coefficient vectors
// (c0, c1, ..., c_{r-1}) entrywise from c0, so the lex rank reads the digits
// of the index in reverse.
Idx lex_rank_to_idx(Idx rank, std::uint32_t p, std::uint32_t r) {
  Idx idx = 0;
  Idx stride = 1;
  for (std::uint32_t i = 1; i < r; ++i) stride *= p;
  for (std::uint32_t i = 0; i < r; ++i) {
    idx += (rank % p) * stride;
    rank /= p;
    stride /= p;
  }
  return idx;
}

struct RawField {
  std::uint32_t p;
  std::uint32_t r;
  Poly mod;

  Poly to_poly(Idx a) const {
    Poly c(std::size_t(std::max<std::uint32_t>(r, 1)), 0);
    for (std::uint32_t i = 0; i < r; ++i) {
      c[i] = std::uint32_t(a % p);
      a /= p;
    }
    return c;
  }
  Idx to_idx(const Poly& c) const {
    Idx a = 0;
    for (std::uint32_t i = r; i-- > 0;) a = a * p + (i < c.size() ? c[i] : 0);
    return a;
  }
  Idx mul(Idx a, Idx b) const {
    return to_idx(poly_mod(poly_mul(to_poly(a), to_poly(b), p), mod, p));
  }
  Idx pow(Idx a, std::uint64_t e) const {
    Idx acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t r,
                     std::optional<std::vector<std::uint32_t>> modulus,
                     std::uint32_t base_degree, std::uint64_t max_cells) {
  require(is_prime(p), Errc::NonPrime, "characteristic " + std::to_string(p) + " is not prime");
  require(r >= 1, Errc::DegenerateParameters, "extension degree must be >= 1");
  require(base_degree >= 1 && r % base_degree == 0, Errc::DegenerateParameters,
          "base subfield degree must divide the extension degree");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    require(q <= max_cells / p, Errc::SizeCapExceeded,
            "field order " + std::to_string(p) + "^" + std::to_string(r) +
                " exceeds the size cap " + std::to_string(max_cells));
    q *= p;
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->r_ = r;
  f->q_ = q;
  f->d_ = base_degree;
  f->e_ = r / base_degree;
  f->q0_ = 1;
  for (std::uint32_t i = 0; i < base_degree; ++i) f->q0_ *= p;

  if (modulus) {
    Poly m = *modulus;
    require(m.size() == std::size_t(r) + 1 && m[r] == 1, Errc::Reducible,
            "modulus must be monic of degree r");
    for (auto c : m)
      require(c < p, Errc::Reducible, "modulus coefficient out of range");
    require(poly_irreducible(m, p), Errc::Reducible, "modulus is reducible over GF(p)");
    f->mod_ = std::move(m);
  } else {
    // lexicographically smallest monic irreducible, low-degree-first order
    Poly m(std::size_t(r) + 1, 0);
    m[r] = 1;
    while (true) {
      if (poly_irreducible(m, p)) break;
      std::uint32_t pos = 0;
      while (pos < r && ++m[pos] == p) m[pos++] = 0;
      require(pos < r, Errc::Reducible, "no irreducible polynomial found");  // unreachable
    }
    f->mod_ = std::move(m);
  }

  RawField raw{p, r, f->mod_};

  // Generator: smallest element in coefficient-lex order whose multiplicative
  // order is exactly q - 1.
  auto factors = prime_factors(q - 1);
  for (Idx rank = 0; rank < q; ++rank) {
    Idx cand = lex_rank_to_idx(rank, p, r);
    if (cand == 0) continue;
    bool full = true;
    for (auto ell : factors) {
      if (raw.pow(cand, (q - 1) / ell) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      f->gen_ = cand;
      break;
    }
  }

  f->exp_.resize(std::size_t(q - 1));
  f->log_.assign(std::size_t(q), 0);
  Idx cur = 1;
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    f->exp_[i] = std::uint32_t(cur);
    f->log_[cur] = std::uint32_t(i);
    cur = raw.mul(cur, f->gen_);
  }

  // Base-subfield representation: embed GF(p^d) by a root of its canonical
  // modulus, and tabulate coordinates w.r.t. the power basis {1, x, ..., x^{e-1}}.
  if (base_degree > 1 && base_degree < r) {
    f->base_ = Field::make(p, base_degree, std::nullopt, 1, max_cells);
  } else if (base_degree == r && r > 1) {
    FieldPtr canon = Field::make(p, r, std::nullopt, 1, max_cells);
    f->base_ = canon->modulus() == f->mod_ ? nullptr : canon;
  }
  if (f->d_ > 1 && !(f->d_ == f->r_ && !f->base_)) {
    const Field& K = *f->base_;
    // root of K's modulus in this field, smallest index; Horner with raw ops
    // (constants < p are constant-polynomial indices)
    Poly km(K.modulus().begin(), K.modulus().end());
    Idx theta = 0;
    bool found = false;
    for (Idx a = 0; a < q; ++a) {
      Idx h = 0;
      for (int i = poly_deg(km); i >= 0; --i) {
        h = raw.mul(h, a);
        Poly sum = raw.to_poly(h);
        sum[0] = std::uint32_t((sum[0] + km[std::size_t(i)]) % p);
        h = raw.to_idx(sum);
      }
      if (h == 0) {
        theta = a;
        found = true;
        break;
      }
    }
    require(found, Errc::Reducible, "base-subfield modulus has no root in the field");

    f->embed_.assign(std::size_t(f->q0_), 0);
    f->extract_.assign(std::size_t(q), kNotInBase);
    for (Idx k = 0; k < f->q0_; ++k) {
      // evaluate the base element's polynomial coefficients at theta
      Idx val = 0;
      Idx kk = k;
      Idx tp = 1;
      for (std::uint32_t i = 0; i < f->d_; ++i) {
        std::uint32_t c = std::uint32_t(kk % p);
        kk /= p;
        if (c) {
          // val += c * theta^i
          Idx term = tp;
          Poly acc = raw.to_poly(val);
          Poly tpoly = raw.to_poly(term);
          for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] = std::uint32_t((acc[j] + std::uint64_t(c) * tpoly[j]) % p);
          val = raw.to_idx(acc);
        }
        tp = raw.mul(tp, theta);
      }
      f->embed_[std::size_t(k)] = std::uint32_t(val);
      f->extract_[std::size_t(val)] = std::uint32_t(k);
    }

    // pack/unpack: tuple (k_0..k_{e-1}) base indices, little-endian radix q0
    f->pack_.assign(std::size_t(q), 0);
    f->unpack_.assign(std::size_t(q), 0);
    std::vector<Idx> xpow(f->e_);
    xpow[0] = 1;
    Idx x = (r >= 2) ? Idx(p) : 1;  // the element "x" has index p when r >= 2
    for (std::uint32_t i = 1; i < f->e_; ++i) xpow[i] = raw.mul(xpow[i - 1], x);
    for (Idx t = 0; t < q; ++t) {
      Idx tt = t;
      Idx val = 0;
      for (std::uint32_t i = 0; i < f->e_; ++i) {
        Idx ki = tt % f->q0_;
        tt /= f->q0_;
        Idx term = raw.mul(f->embed_[std::size_t(ki)], xpow[i]);
        Poly acc = raw.to_poly(val), tp2 = raw.to_poly(term);
        for (std::size_t j = 0; j < acc.size(); ++j)
          acc[j] = std::uint32_t((acc[j] + tp2[j]) % p);
        val = raw.to_idx(acc);
      }
      f->pack_[std::size_t(t)] = std::uint32_t(val);
      f->unpack_[std::size_t(val)] = std::uint32_t(t);
    }
  }

  return f;
}

Idx Field::add(Idx a, Idx b) const {
  if (p_ == 2) return a ^ b;
  Idx out = 0;
  Idx stride = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += (a % p_ + b % p_) % p_ * stride;
    a /= p_;
    b /= p_;
    stride *= p_;
  }
  return out;
}

Idx Field::neg(Idx a) const {
  if (p_ == 2) return a;
  Idx out = 0;
  Idx stride = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    Idx c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * stride;
    a /= p_;
    stride *= p_;
  }
  return out;
}

Idx Field::inv(Idx a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  require(a < q_, Errc::IndexOutOfRange, "element index out of range");
  return exp_[std::size_t(mod_order(q_ - 1 - log_[a]))];
}

Idx Field::pow(Idx a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  require(a < q_, Errc::IndexOutOfRange, "element index out of range");
  std::uint64_t le = (std::uint64_t(log_[a]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[std::size_t(le)];
}

std::uint64_t Field::dlog(Idx a) const {
  require(a != 0, Errc::DivisionByZero, "discrete log of zero");
  require(a < q_, Errc::IndexOutOfRange, "element index out of range");
  return log_[a];
}

std::vector<std::uint32_t> Field::coeffs(Idx a) const {
  std::vector<std::uint32_t> c(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    c[i] = std::uint32_t(a % p_);
    a /= p_;
  }
  return c;
}

Idx Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  require(c.size() <= r_, Errc::IndexOutOfRange, "too many coefficients");
  Idx a = 0;
  for (std::uint32_t i = std::uint32_t(c.size()); i-- > 0;) {
    require(c[i] < p_, Errc::IndexOutOfRange, "coefficient out of range");
    a = a * p_ + c[i];
  }
  return a;
}

FieldPtr Field::base_field() const {
  if (base_) return base_;
  if (d_ == r_) return shared_from_this();
  return Field::make(p_, d_);  // d_ == 1 and r_ > 1: the prime field GF(p)
}

Idx Field::trace(Idx a) const {
  Idx acc = 0;
  Idx cur = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    acc = add(acc, cur);
    cur = pow(cur, q0_);
  }
  return acc;
}

bool Field::in_base_subfield(Idx a) const {
  if (d_ == r_) return true;
  if (d_ == 1) return a < p_;
  return extract_[std::size_t(a)] != kNotInBase;
}

Idx Field::embed_base(Idx k) const {
  require(k < q0_, Errc::IndexOutOfRange, "base-subfield index out of range");
  if (d_ == r_) return base_ ? embed_[std::size_t(k)] : k;
  if (d_ == 1) return k;
  return embed_[std::size_t(k)];
}

Idx Field::extract_base(Idx a) const {
  require(a < q_, Errc::IndexOutOfRange, "element index out of range");
  if (d_ == r_ && !base_) return a;
  require(in_base_subfield(a), Errc::FieldMismatch, "element does not lie in the base subfield");
  if (d_ == 1) return a;
  return extract_[std::size_t(a)];
}

Idx Field::pack_base_tuple(Idx tuple) const {
  require(tuple < q_, Errc::IndexOutOfRange, "coordinate tuple out of range");
  if (d_ == 1 || (d_ == r_ && !base_)) return tuple;
  return pack_[std::size_t(tuple)];
}

Idx Field::unpack_base_tuple(Idx a) const {
  require(a < q_, Errc::IndexOutOfRange, "element index out of range");
  if (d_ == 1 || (d_ == r_ && !base_)) return a;
  return unpack_[std::size_t(a)];
}

std::string Field::text() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << r_ << "|modulus=";
  for (std::size_t i = 0; i < mod_.size(); ++i) {
    if (i) os << ",";
    os << mod_[i];
  }
  os << ")";
  return os.str();
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require(a.field && b.field && a.field->same_as(*b.field), Errc::FieldMismatch,
          "elements of different fields");
  return {a.field, a.field->add(a.idx, b.idx)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require(a.field && b.field && a.field->same_as(*b.field), Errc::FieldMismatch,
          "elements of different fields");
  return {a.field, a.field->sub(a.idx, b.idx)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require(a.field && b.field && a.field->same_as(*b.field), Errc::FieldMismatch,
          "elements of different fields");
  return {a.field, a.field->mul(a.idx, b.idx)};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field && b.field && a.field->same_as(*b.field) && a.idx == b.idx;
}

std::vector<Idx> dual_basis(const FieldPtr& f, const std::vector<Idx>& basis) {
  const std::uint32_t e = f->ext_degree();
  require(basis.size() == e, Errc::NotABasis,
          "basis must have " + std::to_string(e) + " elements");
  for (Idx a : basis)
    require(a < f->order(), Errc::IndexOutOfRange, "basis element out of range");

  // Gram matrix G_ij = tr(a_i a_j); entries lie in the base subfield, so
  // Gauss-Jordan over the field itself inverts it. Singular <=> not a basis.
  std::vector<Idx> g(std::size_t(e) * e), id(std::size_t(e) * e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    id[std::size_t(i) * e + i] = 1;
    for (std::uint32_t j = 0; j < e; ++j)
      g[std::size_t(i) * e + j] = f->trace(f->mul(basis[i], basis[j]));
  }
  for (std::uint32_t col = 0; col < e; ++col) {
    std::uint32_t piv = col;
    while (piv < e && g[std::size_t(piv) * e + col] == 0) ++piv;
    require(piv < e, Errc::NotABasis, "trace Gram matrix is singular");
    if (piv != col) {
      for (std::uint32_t j = 0; j < e; ++j) {
        std::swap(g[std::size_t(piv) * e + j], g[std::size_t(col) * e + j]);
        std::swap(id[std::size_t(piv) * e + j], id[std::size_t(col) * e + j]);
      }
    }
    Idx s = f->inv(g[std::size_t(col) * e + col]);
    for (std::uint32_t j = 0; j < e; ++j) {
      g[std::size_t(col) * e + j] = f->mul(g[std::size_t(col) * e + j], s);
      id[std::size_t(col) * e + j] = f->mul(id[std::size_t(col) * e + j], s);
    }
    for (std::uint32_t row = 0; row < e; ++row) {
      if (row == col) continue;
      Idx c = g[std::size_t(row) * e + col];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < e; ++j) {
        g[std::size_t(row) * e + j] =
            f->sub(g[std::size_t(row) * e + j], f->mul(c, g[std::size_t(col) * e + j]));
        id[std::size_t(row) * e + j] =
            f->sub(id[std::size_t(row) * e + j], f->mul(c, id[std::size_t(col) * e + j]));
      }
    }
  }

  // beta_j = sum_k Ginv[k][j] * a_k
  std::vector<Idx> dual(e, 0);
  for (std::uint32_t j = 0; j < e; ++j) {
    Idx acc = 0;
    for (std::uint32_t k = 0; k < e; ++k)
      acc = f->add(acc, f->mul(id[std::size_t(k) * e + j], basis[k]));
    dual[j] = acc;
  }
  return dual;
}

}  // namespace amdkit

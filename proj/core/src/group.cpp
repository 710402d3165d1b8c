#include "amdkit/group.hpp"

#include <numeric>
#include <sstream>

namespace amdkit {

GroupPtr Group::cyclic(std::uint64_t n) {
  require(n >= 1, Errc::DegenerateParameters, "cyclic group order must be >= 1");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Cyclic;
  g->order_ = n;
  return g;
}

GroupPtr Group::product(std::vector<GroupPtr> parts) {
  require(!parts.empty(), Errc::DegenerateParameters, "empty product group");
  if (parts.size() == 1) return parts[0];
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Product;
  g->order_ = 1;
  for (const auto& part : parts) {
    require(part != nullptr, Errc::DegenerateParameters, "null product component");
    require(g->order_ <= ~std::uint64_t{0} / part->order(), Errc::SizeCapExceeded,
            "product group order overflows");
    g->order_ *= part->order();
  }
  g->parts_ = std::move(parts);
  return g;
}

GroupPtr Group::power(const GroupPtr& part, std::uint32_t n) {
  require(n >= 1, Errc::DegenerateParameters, "group power must be >= 1");
  if (n == 1) return part;
  return product(std::vector<GroupPtr>(n, part));
}

GroupPtr Group::field_additive(FieldPtr f) {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::FieldAdditive;
  g->order_ = f->order();
  g->field_ = std::move(f);
  return g;
}

GroupPtr Group::field_mult_cyclic(FieldPtr f) {
  require(f->order() >= 3, Errc::DegenerateField,
          "multiplicative group of " + f->text() + " is trivial");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::FieldMultCyclic;
  g->order_ = f->order() - 1;
  g->field_ = std::move(f);
  return g;
}

Idx Group::add(Idx a, Idx b) const {
  switch (kind_) {
    case Kind::Cyclic: {
      Idx s = a + b;
      return s >= order_ ? s - order_ : s;
    }
    case Kind::FieldAdditive:
      return field_->add(a, b);
    case Kind::FieldMultCyclic:
      return field_->mul(a + 1, b + 1) - 1;
    case Kind::Product: {
      Idx out = 0;
      Idx stride = 1;
      for (const auto& part : parts_) {
        Idx n = part->order();
        out += part->add(a % n, b % n) * stride;
        a /= n;
        b /= n;
        stride *= n;
      }
      return out;
    }
  }
  return 0;
}

Idx Group::neg(Idx a) const {
  switch (kind_) {
    case Kind::Cyclic:
      return a == 0 ? 0 : order_ - a;
    case Kind::FieldAdditive:
      return field_->neg(a);
    case Kind::FieldMultCyclic:
      return field_->inv(a + 1) - 1;
    case Kind::Product: {
      Idx out = 0;
      Idx stride = 1;
      for (const auto& part : parts_) {
        Idx n = part->order();
        out += part->neg(a % n) * stride;
        a /= n;
        stride *= n;
      }
      return out;
    }
  }
  return 0;
}

std::vector<Idx> Group::decompose(Idx a) const {
  if (kind_ != Kind::Product) return {a};
  std::vector<Idx> cs(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    cs[i] = a % parts_[i]->order();
    a /= parts_[i]->order();
  }
  return cs;
}

Idx Group::compose(const std::vector<Idx>& cs) const {
  if (kind_ != Kind::Product) {
    require(cs.size() == 1, Errc::IndexOutOfRange, "coordinate count mismatch");
    return cs[0];
  }
  require(cs.size() == parts_.size(), Errc::IndexOutOfRange, "coordinate count mismatch");
  Idx out = 0;
  for (std::size_t i = parts_.size(); i-- > 0;) {
    require(cs[i] < parts_[i]->order(), Errc::IndexOutOfRange, "coordinate out of range");
    out = out * parts_[i]->order() + cs[i];
  }
  return out;
}

bool Group::same_as(const Group& other) const { return text() == other.text(); }

std::string Group::text() const {
  switch (kind_) {
    case Kind::Cyclic:
    case Kind::FieldMultCyclic:
      return "Z(" + std::to_string(order_) + ")";
    case Kind::FieldAdditive:
      return field_->text();
    case Kind::Product: {
      std::string s = "Prod(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ";";
        s += parts_[i]->text();
      }
      return s + ")";
    }
  }
  return "";
}

namespace {

// minimal recursive-descent reader for the canonical group syntax
struct SpecReader {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& what) const {
    fail(Errc::ParseError, what + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }
  bool starts(const char* word) {
    return s.compare(pos, std::char_traits<char>::length(word), word) == 0;
  }
  std::uint64_t number() {
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) err("expected number");
    std::uint64_t v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + std::uint64_t(s[pos] - '0');
      ++pos;
    }
    return v;
  }

  GroupPtr group() {
    if (starts("Z(")) {
      pos += 2;
      std::uint64_t n = number();
      expect(')');
      return Group::cyclic(n);
    }
    if (starts("GF(")) {
      pos += 3;
      std::uint64_t p = number();
      expect('^');
      std::uint64_t r = number();
      if (!starts("|modulus=")) err("expected |modulus=");
      pos += 9;
      std::vector<std::uint32_t> mod;
      mod.push_back(std::uint32_t(number()));
      while (eat(',')) mod.push_back(std::uint32_t(number()));
      expect(')');
      return Group::field_additive(
          Field::make(std::uint32_t(p), std::uint32_t(r), std::move(mod)));
    }
    if (starts("Prod(")) {
      pos += 5;
      std::vector<GroupPtr> parts;
      parts.push_back(group());
      while (eat(';')) parts.push_back(group());
      expect(')');
      return Group::product(std::move(parts));
    }
    err("expected Z(, GF( or Prod(");
  }
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; gcd(a, m) == 1 assumed
  std::int64_t t = 0, nt = 1, r = std::int64_t(m), nr = std::int64_t(a % m);
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  return std::uint64_t(t < 0 ? t + std::int64_t(m) : t);
}

}  // namespace

GroupPtr Group::parse(const std::string& s) {
  SpecReader rd{s};
  GroupPtr g = rd.group();
  if (rd.pos != s.size()) rd.err("trailing characters");
  return g;
}

Iso cyclic_iso(const FieldPtr& f, std::uint64_t max_cells) {
  GroupPtr target = Group::field_mult_cyclic(f);
  std::uint64_t n = target->order();
  require(n <= max_cells, Errc::SizeCapExceeded, "multiplicative group too large to tabulate");
  Iso iso;
  iso.from = Group::cyclic(n);
  iso.to = target;
  iso.forward.resize(std::size_t(n));
  iso.backward.resize(std::size_t(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    Idx elem = f->pow(f->generator(), i) - 1;  // shift to group index
    iso.forward[std::size_t(i)] = elem;
    iso.backward[std::size_t(elem)] = i;
  }
  return iso;
}

Iso crt_split(std::uint64_t n, std::uint64_t m1, std::uint64_t m2, std::uint64_t max_cells) {
  require(m1 >= 1 && m2 >= 1, Errc::DegenerateParameters, "factors must be positive");
  require(m1 * m2 == n, Errc::BadFactorization,
          std::to_string(m1) + "*" + std::to_string(m2) + " != " + std::to_string(n));
  require(std::gcd(m1, m2) == 1, Errc::NotCoprime,
          "gcd(" + std::to_string(m1) + "," + std::to_string(m2) + ") != 1");
  require(n <= max_cells, Errc::SizeCapExceeded, "group too large to tabulate");

  Iso iso;
  iso.from = Group::cyclic(n);
  iso.to = Group::product({Group::cyclic(m1), Group::cyclic(m2)});
  iso.forward.resize(std::size_t(n));
  iso.backward.resize(std::size_t(n));
  for (std::uint64_t x = 0; x < n; ++x)
    iso.forward[std::size_t(x)] = (x % m1) + m1 * (x % m2);
  if (m1 == 1 || m2 == 1) {
    for (std::uint64_t x = 0; x < n; ++x) iso.backward[iso.forward[std::size_t(x)]] = x;
    return iso;
  }
  std::uint64_t c1 = mod_inverse(m2 % m1, m1);  // m2*c1 = 1 mod m1
  std::uint64_t c2 = mod_inverse(m1 % m2, m2);
  for (std::uint64_t a = 0; a < m1; ++a) {
    for (std::uint64_t b = 0; b < m2; ++b) {
      std::uint64_t x = (a * c1 % m1) * m2 + (b * c2 % m2) * m1;
      iso.backward[std::size_t(a + m1 * b)] = x % n;
    }
  }
  return iso;
}

}  // namespace amdkit

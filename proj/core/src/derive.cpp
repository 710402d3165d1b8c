#include "amdkit/derive.hpp"

#include <algorithm>
#include <istream>

namespace amdkit {

Func extract_function(const AmdCode& code) {
  std::vector<std::uint32_t> table(std::size_t(code.m * code.t));
  for (Idx s1 = 0; s1 < code.m; ++s1) {
    for (Idx s2 = 0; s2 < code.t; ++s2) {
      std::uint32_t found = 0;
      Idx tag = 0;
      for (Idx b = 0; b < code.nb; ++b) {
        if (decode(code, Codeword{s1, s2, b}).has_value()) {
          tag = b;
          ++found;
        }
      }
      require(found == 1, Errc::NotSystematic,
              "cell (" + std::to_string(s1) + "," + std::to_string(s2) + ") has " +
                  std::to_string(found) + " valid tags");
      table[std::size_t(s1 * code.t + s2)] = std::uint32_t(tag);
    }
  }
  return func_from_table(code.f.a1(), code.f.a2(), code.f.b(), std::move(table));
}

Func extract_function(const GroupPtr& a1, const GroupPtr& a2, const GroupPtr& b,
                      std::span<const Codeword> words) {
  std::uint64_t n1 = a1->order(), n2 = a2->order();
  std::vector<std::uint32_t> table(std::size_t(n1 * n2), 0);
  std::vector<std::uint8_t> seen(std::size_t(n1 * n2), 0);
  for (const Codeword& w : words) {
    require(w.s1 < n1 && w.s2 < n2 && w.tag < b->order(), Errc::IndexOutOfRange,
            "codeword component out of range");
    std::size_t cell = std::size_t(w.s1 * n2 + w.s2);
    require(!seen[cell] || table[cell] == w.tag, Errc::NotSystematic,
            "two distinct tags for one (s1, s2) cell");
    seen[cell] = 1;
    table[cell] = std::uint32_t(w.tag);
  }
  require(std::all_of(seen.begin(), seen.end(), [](std::uint8_t v) { return v != 0; }),
          Errc::NotSystematic, "some (s1, s2) cell has no valid tag");
  return func_from_table(a1, a2, b, std::move(table));
}

Func import_code_table(std::istream& is, std::uint64_t max_cells) {
  std::string header;
  require(bool(std::getline(is, header)), Errc::ParseError, "missing table header");
  auto [a1, a2, b] = parse_table_header(header);
  require(a1->order() <= max_cells / std::max<std::uint64_t>(a2->order(), 1),
          Errc::SizeCapExceeded, "table exceeds the size cap");
  std::vector<Codeword> words;
  Idx s1, s2, v;
  while (is >> s1 >> s2 >> v) words.push_back(Codeword{s1, s2, v});
  return extract_function(a1, a2, b, words);
}

Rational restricted_nonlinearity(const Func& fe, Idx source, unsigned workers) {
  require(source < fe.a1()->order(), Errc::BadSource, "source index out of range");
  return nonlinearity_of(fe.slice(source), workers);
}

DerivedFunction derive_function(const AmdCode& code, unsigned workers) {
  DerivedFunction d{extract_function(code), Rational(), {}};
  d.full_nonlinearity = nonlinearity_of(d.fe, workers);
  d.restricted.reserve(std::size_t(code.m));
  for (Idx s = 0; s < code.m; ++s)
    d.restricted.push_back(restricted_nonlinearity(d.fe, s, workers));
  return d;
}

DerivedBoundCheck derived_nonlinearity_bound(const AmdCode& code, unsigned workers,
                                             std::uint64_t max_cells) {
  DerivedFunction d = derive_function(code, workers);
  SuccessProfile profile =
      evaluate(code, ModelSet{true, false, false}, workers, max_cells);
  DerivedBoundCheck chk;
  chk.lhs = d.full_nonlinearity;
  chk.rhs = profile.weak_rho;
  for (const Rational& r : d.restricted) chk.rhs = std::max(chk.rhs, r);
  chk.holds = chk.lhs <= chk.rhs;
  chk.per_source = std::move(d.restricted);
  return chk;
}

StrongerBoundCheck stronger_rho_bound(const AmdCode& code, unsigned workers,
                                      std::uint64_t max_cells) {
  SuccessProfile profile =
      evaluate(code, ModelSet{false, false, true}, workers, max_cells);
  StrongerBoundCheck chk;
  chk.stronger_rho = profile.stronger_rho;
  chk.fe_nonlinearity = nonlinearity_of(extract_function(code), workers);
  chk.holds = chk.fe_nonlinearity <= chk.stronger_rho;
  return chk;
}

}  // namespace amdkit

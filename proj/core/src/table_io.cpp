#include <array>
#include <istream>
#include <ostream>
#include <sstream>

#include "amdkit/func.hpp"

namespace amdkit {

void write_table(const Func& f, std::ostream& os) {
  os << "A1=" << f.a1()->text() << " A2=" << f.a2()->text() << " B=" << f.b()->text() << "\n";
  std::uint64_t n2 = f.a2()->order();
  for (Idx s1 = 0; s1 < f.a1()->order(); ++s1)
    for (Idx s2 = 0; s2 < n2; ++s2)
      os << s1 << " " << s2 << " " << f.eval(s1, s2) << "\n";
}

std::array<GroupPtr, 3> parse_table_header(const std::string& line) {
  std::istringstream hs(line);
  std::string f1, f2, f3;
  require(bool(hs >> f1 >> f2 >> f3), Errc::ParseError, "bad table header");
  require(f1.rfind("A1=", 0) == 0 && f2.rfind("A2=", 0) == 0 && f3.rfind("B=", 0) == 0,
          Errc::ParseError, "table header must be A1=<spec> A2=<spec> B=<spec>");
  return {Group::parse(f1.substr(3)), Group::parse(f2.substr(3)), Group::parse(f3.substr(2))};
}

Func read_table(std::istream& is, std::uint64_t max_cells) {
  std::string header;
  require(bool(std::getline(is, header)), Errc::ParseError, "missing table header");
  auto [a1, a2, b] = parse_table_header(header);

  std::uint64_t n1 = a1->order(), n2 = a2->order();
  require(n1 <= max_cells / std::max<std::uint64_t>(n2, 1), Errc::SizeCapExceeded,
          "table exceeds the size cap");
  std::vector<std::uint32_t> table(std::size_t(n1 * n2), 0);
  std::vector<bool> seen(std::size_t(n1 * n2), false);
  std::uint64_t lines = 0;
  Idx s1, s2, v;
  while (is >> s1 >> s2 >> v) {
    require(s1 < n1 && s2 < n2, Errc::IndexOutOfRange, "cell index out of range");
    require(v < b->order(), Errc::IndexOutOfRange, "value outside the codomain");
    std::size_t cell = std::size_t(s1 * n2 + s2);
    require(!seen[cell], Errc::BadTableLength, "duplicate cell in table");
    seen[cell] = true;
    table[cell] = std::uint32_t(v);
    ++lines;
  }
  require(lines == n1 * n2, Errc::BadTableLength,
          "table has " + std::to_string(lines) + " cells, expected " + std::to_string(n1 * n2));
  return func_from_table(std::move(a1), std::move(a2), std::move(b), std::move(table));
}

}  // namespace amdkit

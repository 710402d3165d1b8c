#include <doctest.h>

#include <random>
#include <sstream>

#include "amdkit/derive.hpp"

using namespace amdkit;

TEST_CASE("extraction round-trips the generating function") {
  std::vector<Func> catalog;
  catalog.push_back(mm_func(3, 1, Split::Weak));
  catalog.push_back(mm_func(2, 2, Split::Strong));
  catalog.push_back(dillon_func(2, 2, std::nullopt, Split::Weak));
  catalog.push_back(dillon_dual_func(3, 1));
  catalog.push_back(trace_mult_func(2, 2, std::nullopt, 3, 1));
  catalog.push_back(cdfpw_func(5, 1));
  for (Func& f : catalog) {
    AmdCode code = build_code(std::move(f));
    Func fe = extract_function(code);
    for (Idx s1 = 0; s1 < code.m; ++s1)
      for (Idx s2 = 0; s2 < code.t; ++s2) CHECK(fe.eval(s1, s2) == code.f.eval(s1, s2));
  }
}

TEST_CASE("conflicting and missing tags reject as non-systematic") {
  GroupPtr z2 = Group::cyclic(2);
  std::vector<Codeword> conflicted{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}};
  CHECK_THROWS_AS(extract_function(z2, z2, z2, conflicted), Error);
  std::vector<Codeword> gappy{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}};
  CHECK_THROWS_AS(extract_function(z2, z2, z2, gappy), Error);
  std::vector<Codeword> fine{{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 0}};
  Func fe = extract_function(z2, z2, z2, fine);
  CHECK(fe.eval(1, 0) == 1);
}

TEST_CASE("imported code tables accept any row order and reject conflicts") {
  std::istringstream shuffled("A1=Z(2) A2=Z(2) B=Z(2)\n1 1 0\n0 0 1\n1 0 1\n0 1 1\n");
  Func fe = import_code_table(shuffled);
  CHECK(fe.eval(0, 0) == 1);
  CHECK(fe.eval(1, 1) == 0);
  std::istringstream doubled("A1=Z(2) A2=Z(1) B=Z(2)\n0 0 0\n0 0 1\n1 0 0\n");
  CHECK_THROWS_AS(import_code_table(doubled), Error);
}

TEST_CASE("restricted nonlinearities of the polynomial family") {
  AmdCode code = build_code(cdfpw_func(5, 1));
  // slice s'=0 is x^3 over GF(5): derivative counts stay within 2 of 5
  Rational r0 = restricted_nonlinearity(extract_function(code), 0);
  CHECK(r0 == Rational(2, 5));
  CHECK(r0 <= Rational(2, 5));
}

TEST_CASE("constant and linear slices have nonlinearity 1") {
  AmdCode code = build_code(mm_func(3, 1, Split::Weak));
  Func fe = extract_function(code);
  // slice s'=0 of s*x is the zero map
  CHECK(restricted_nonlinearity(fe, 0) == Rational(1, 1));
  // slice s'=1 is the identity, linear as well
  CHECK(restricted_nonlinearity(fe, 1) == Rational(1, 1));
}

TEST_CASE("derived-function bound on catalog codes") {
  SUBCASE("weak mm q=3: the constant slice forces rhs to 1") {
    AmdCode code = build_code(mm_func(3, 1, Split::Weak));
    DerivedBoundCheck chk = derived_nonlinearity_bound(code);
    CHECK(chk.holds);
    CHECK(chk.lhs == Rational(1, 3));
    CHECK(chk.rhs == Rational(1, 1));
  }
  SUBCASE("cdfpw q=5 t=1 keeps both sides within (t+1)/q") {
    AmdCode code = build_code(cdfpw_func(5, 1));
    DerivedBoundCheck chk = derived_nonlinearity_bound(code);
    CHECK(chk.holds);
    CHECK(chk.lhs <= Rational(2, 5));
  }
  SUBCASE("a linear table forces rhs to 1 through some slice or rho") {
    // f(s, x) = s + x on Z_5
    std::vector<std::uint32_t> table(25);
    for (Idx s = 0; s < 5; ++s)
      for (Idx x = 0; x < 5; ++x) table[std::size_t(s * 5 + x)] = std::uint32_t((s + x) % 5);
    AmdCode code = build_code(
        func_from_table(Group::cyclic(5), Group::cyclic(5), Group::cyclic(5), table));
    DerivedBoundCheck chk = derived_nonlinearity_bound(code);
    CHECK(chk.lhs == Rational(1, 1));
    CHECK(chk.rhs == Rational(1, 1));
    CHECK(chk.holds);
  }
}

TEST_CASE("any-decode bound on catalog codes") {
  std::vector<Func> catalog;
  catalog.push_back(mm_func(2, 1, Split::Strong));
  catalog.push_back(mm_func(3, 1, Split::Weak));
  catalog.push_back(dillon_func(2, 2, std::nullopt, Split::Strong));
  for (Func& f : catalog) {
    AmdCode code = build_code(std::move(f));
    StrongerBoundCheck chk = stronger_rho_bound(code);
    CHECK(chk.holds);
    CHECK(chk.fe_nonlinearity <= chk.stronger_rho);
  }
  AmdCode dillon22 = build_code(dillon_func(2, 2, std::nullopt, Split::Strong));
  StrongerBoundCheck chk = stronger_rho_bound(dillon22);
  CHECK(chk.fe_nonlinearity == Rational(1, 2));
}

TEST_CASE("both bounds hold on 100 seeded random systematic codes") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t n1 = 2 + rng() % 7;  // |A1| <= 8
    std::uint64_t n2 = 1 + rng() % 8;  // |A2| <= 8
    GroupPtr a1 = Group::cyclic(n1);
    GroupPtr a2 = Group::cyclic(n2);
    GroupPtr b;
    if (i % 3 == 0) {
      b = Group::product({Group::cyclic(2), Group::cyclic(2 + rng() % 3)});  // order <= 8
    } else {
      b = Group::cyclic(2 + rng() % 7);
    }
    std::vector<std::uint32_t> table(std::size_t(n1 * n2));
    for (auto& v : table) v = std::uint32_t(rng() % b->order());
    AmdCode code = build_code(func_from_table(a1, a2, b, std::move(table)));
    DerivedBoundCheck weak = derived_nonlinearity_bound(code);
    StrongerBoundCheck stronger = stronger_rho_bound(code);
    CHECK(weak.holds);
    CHECK(stronger.holds);
  }
}

TEST_CASE("derived profile carries the per-source values") {
  AmdCode code = build_code(cdfpw_func(5, 1));
  DerivedFunction d = derive_function(code);
  REQUIRE(d.restricted.size() == 5);
  for (const Rational& r : d.restricted) {
    CHECK(r >= Rational(1, 5));
    CHECK(r <= Rational(2, 5));
  }
  CHECK(d.full_nonlinearity <= Rational(2, 5));
}

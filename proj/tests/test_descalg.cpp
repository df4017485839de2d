#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxsolomon/descalg.hpp"

#include <random>

using namespace coxsolomon;

TEST_CASE("x and y basis vectors") {
  auto sys = CoxeterSystem::build("B2");
  auto xS = x_element(sys, GenSet::all(2));
  REQUIRE(xS.coeffs.size() == 1);
  CHECK(xS.at(sys.identity()) == 1);

  auto x0 = x_element(sys, GenSet());
  CHECK(x0.coeffs.size() == sys.order());

  auto y0 = y_element(sys, GenSet());
  REQUIRE(y0.coeffs.size() == 1);
  CHECK(y0.at(sys.longest_element()) == 1);

  // x_J = sum over supersets I of y_I, as group algebra vectors.
  for (std::uint32_t mj = 0; mj < 4; ++mj) {
    GenSet J(mj);
    GroupAlgebraVector acc;
    for (std::uint32_t mi = 0; mi < 4; ++mi)
      if (J.subset_of(GenSet(mi))) acc = ga_add(acc, y_element(sys, GenSet(mi)));
    CHECK(acc == x_element(sys, J));
  }
}

TEST_CASE("structure constants: unit and rank-one") {
  auto a1 = CoxeterSystem::build("A1");
  auto c = structure_constants(a1, GenSet(), GenSet());
  REQUIRE(c.size() == 1);
  CHECK(c[GenSet()] == 2);  // x_0 * x_0 = 2 x_0 in the two-element group

  auto a3 = CoxeterSystem::build("A3");
  for (std::uint32_t mj = 0; mj < 8; ++mj) {
    auto cs = structure_constants(a3, GenSet::all(3), GenSet(mj));
    REQUIRE(cs.size() == 1);
    CHECK(cs[GenSet(mj)] == 1);  // x_S is the unit
  }
}

TEST_CASE("structure constants against the group algebra expansion") {
  for (const char* spec : {"A1", "A2", "A3", "B2", "I2(5)"}) {
    CAPTURE(spec);
    auto sys = CoxeterSystem::build(spec);
    const int rank = sys.rank();
    for (std::uint32_t mi = 0; mi < (1u << rank); ++mi)
      for (std::uint32_t mj = 0; mj < (1u << rank); ++mj) {
        GenSet I(mi), J(mj);
        auto cs = structure_constants(sys, I, J);
        GroupAlgebraVector rhs;
        std::uint64_t total = 0, mass = 0;
        for (const auto& [K, a] : cs) {
          rhs = ga_add(rhs, ga_scale(x_element(sys, K), Rational(a)));
          total += a;
          mass += a * minimal_coset_reps(sys, K).reps.size();
        }
        auto lhs = ga_multiply(sys, x_element(sys, I), x_element(sys, J));
        CHECK(lhs == rhs);
        CHECK(total == double_coset_reps(sys, I, J).reps.size());
        CHECK(mass == std::uint64_t(minimal_coset_reps(sys, I).reps.size()) *
                          minimal_coset_reps(sys, J).reps.size());
      }
  }
}

TEST_CASE("x-basis product matches expansion on H3") {
  auto sys = CoxeterSystem::build("H3");
  GenSet I = GenSet::of({0, 2}), J = GenSet::of({1, 2});
  auto prod = multiply_x_basis(sys, DescentAlgebraElement::x_basis(I),
                               DescentAlgebraElement::x_basis(J));
  CHECK(expand(sys, prod) ==
        ga_multiply(sys, x_element(sys, I), x_element(sys, J)));
  // Unit: x_S * v = v.
  auto v = prod;
  CHECK(multiply_x_basis(sys, DescentAlgebraElement::x_basis(GenSet::all(3)), v) == v);
}

TEST_CASE("basis changes are mutually inverse") {
  const int rank = 3;
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 25; ++trial) {
    std::map<GenSet, Rational> c;
    for (std::uint32_t m = 0; m < (1u << rank); ++m) {
      Rational v(num(rng), den(rng));
      if (v != 0) c[GenSet(m)] = v;
    }
    auto there = basis_change_x_to_y(rank, c);
    auto back = basis_change_y_to_x(rank, there);
    CHECK(back == c);
    auto there2 = basis_change_x_to_y(rank, basis_change_y_to_x(rank, c));
    CHECK(there2 == c);
  }
}

TEST_CASE("basis change pins the expected expansions") {
  // rank 1: x_0 = y_0 + y_S.
  std::map<GenSet, Rational> xs{{GenSet(), Rational(1)}};
  auto ys = basis_change_x_to_y(1, xs);
  REQUIRE(ys.size() == 2);
  CHECK(ys[GenSet()] == 1);
  CHECK(ys[GenSet::all(1)] == 1);
  // Top set: x_S has y_S coefficient 1.
  std::map<GenSet, Rational> xt{{GenSet::all(1), Rational(1)}};
  auto yt = basis_change_x_to_y(1, xt);
  REQUIRE(yt.size() == 1);
  CHECK(yt[GenSet::all(1)] == 1);
}

TEST_CASE("y expansion in x matches the elementwise definition") {
  auto sys = CoxeterSystem::build("A2");
  for (std::uint32_t m = 0; m < 4; ++m) {
    GenSet I(m);
    std::map<GenSet, Rational> y{{I, Rational(1)}};
    auto xc = basis_change_y_to_x(sys.rank(), y);
    GroupAlgebraVector acc;
    for (const auto& [J, c] : xc) acc = ga_add(acc, ga_scale(x_element(sys, J), c));
    CHECK(acc == y_element(sys, I));
  }
}

TEST_CASE("x basis expansions are linearly independent") {
  auto sys = CoxeterSystem::build("B2");
  // The change-of-basis matrix between x and y is triangular with unit
  // diagonal, so both families have full rank 2^rank.
  std::vector<GroupAlgebraVector> xs, ys;
  for (std::uint32_t m = 0; m < 4; ++m) {
    xs.push_back(x_element(sys, GenSet(m)));
    ys.push_back(y_element(sys, GenSet(m)));
  }
  // y vectors have disjoint supports and are nonzero.
  for (std::size_t i = 0; i < ys.size(); ++i) {
    CHECK(!ys[i].coeffs.empty());
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      for (const auto& [w, c] : ys[i].coeffs) CHECK(ys[j].coeffs.find(w) == ys[j].coeffs.end());
  }
  // Each x vector is the sum of the y vectors over supersets (checked above
  // for B2), so independence of {y_I} gives independence of {x_I}.
  CHECK(xs.size() == 4);
}

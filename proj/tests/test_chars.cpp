#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxsolomon/chars.hpp"

#include <algorithm>

using namespace coxsolomon;

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_classes(CoxeterSystem::build("A1")).count() == 2);
  auto a2 = CoxeterSystem::build("A2");
  auto ct2 = conjugacy_classes(a2);
  REQUIRE(ct2.count() == 3);
  std::vector<std::uint64_t> sizes;
  for (const auto& c : ct2.classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{1, 2, 3});
  // A_{n-1} has as many classes as partitions of n.
  CHECK(conjugacy_classes(CoxeterSystem::build("A3")).count() == 5);
  CHECK(conjugacy_classes(CoxeterSystem::build("A4")).count() == 7);
}

TEST_CASE("classes partition the group and reps are minimal") {
  for (const char* spec : {"B3", "H3", "I2(6)"}) {
    CAPTURE(spec);
    auto sys = CoxeterSystem::build(spec);
    auto ct = conjugacy_classes(sys);
    std::uint64_t total = 0;
    for (const auto& c : ct.classes) {
      total += c.size;
      std::uint64_t count = 0;
      for (ElementId w = 0; w < sys.order(); ++w)
        if (c.members[w]) {
          ++count;
          CHECK(ct.class_of[w] == c.id);
          CHECK(sys.length(c.min_rep) <= sys.length(w));
        }
      CHECK(count == c.size);
    }
    CHECK(total == sys.order());
  }
}

TEST_CASE("every element is conjugate to its inverse") {
  for (const char* spec : {"A3", "B3", "H3", "F4", "I2(5)", "I2(8)", "A1xB2"}) {
    CAPTURE(spec);
    auto sys = CoxeterSystem::build(spec);
    auto ct = conjugacy_classes(sys);
    for (ElementId w = 0; w < sys.order(); ++w)
      CHECK(ct.class_of[w] == ct.class_of[sys.inverse(w)]);
  }
}

TEST_CASE("induced trivial character basics") {
  auto sys = CoxeterSystem::build("H3");
  auto ct = conjugacy_classes(sys);

  auto triv = induced_trivial(sys, ct, GenSet::all(3));
  for (const auto& v : triv.values) CHECK(v == 1);

  auto reg = induced_trivial(sys, ct, GenSet());
  for (const auto& cls : ct.classes) {
    if (cls.min_rep == sys.identity()) CHECK(reg.values[cls.id] == Rational(sys.order()));
    else CHECK(reg.values[cls.id] == 0);
  }

  auto ind12 = induced_trivial(sys, ct, GenSet::of({0, 1}));
  CHECK(ind12.values[ct.class_of[sys.identity()]] == 12);
}

TEST_CASE("the two induced-character formulas agree") {
  for (const char* spec : {"A1", "A2", "A3", "B2", "B3", "I2(5)", "I2(7)", "H3", "A1xA2"}) {
    CAPTURE(spec);
    auto sys = CoxeterSystem::build(spec);
    auto ct = conjugacy_classes(sys);
    for (std::uint32_t m = 0; m < (1u << sys.rank()); ++m) {
      GenSet I(m);
      CHECK(induced_trivial(sys, ct, I) == induced_trivial_by_conjugation_count(sys, ct, I));
    }
  }
}

TEST_CASE("scalar products of class functions") {
  auto sys = CoxeterSystem::build("A2");
  auto ct = conjugacy_classes(sys);
  ClassFunction one;
  one.values.assign(ct.count(), Rational(1));

  CHECK(scalar_product_classfn(sys, ct, one, one) == 1);
  // Frobenius reciprocity: <1^W_{W_I}, 1> = 1 for every I.
  for (std::uint32_t m = 0; m < 4; ++m)
    CHECK(scalar_product_classfn(sys, ct, induced_trivial(sys, ct, GenSet(m)), one) == 1);
  auto reg = induced_trivial(sys, ct, GenSet());
  CHECK(scalar_product_classfn(sys, ct, reg, reg) == Rational(sys.order()));
  CHECK(scalar_product_classfn(sys, ct, induced_trivial(sys, ct, GenSet::of({0})),
                               induced_trivial(sys, ct, GenSet::of({1}))) == 2);
}

TEST_CASE("group algebra pairing") {
  auto sys = CoxeterSystem::build("A2");
  GroupAlgebraVector e;
  e.coeffs[sys.identity()] = 1;
  CHECK(pairing_group_algebra(sys, e, e) == 1);

  auto xS = x_element(sys, GenSet::all(2));
  CHECK(pairing_group_algebra(sys, xS, xS) == 1);

  // <x_I, x_J> = |X_IJ| over all pairs of B2.
  auto b2 = CoxeterSystem::build("B2");
  for (std::uint32_t mi = 0; mi < 4; ++mi)
    for (std::uint32_t mj = 0; mj < 4; ++mj) {
      GenSet I(mi), J(mj);
      CHECK(pairing_group_algebra(b2, x_element(b2, I), x_element(b2, J)) ==
            Rational(double_coset_reps(b2, I, J).reps.size()));
    }

  // <y_I, y_J> counts elements with prescribed ascent sets on both sides.
  GenSet I = GenSet::of({0}), J = GenSet::of({1});
  std::uint64_t count = 0;
  for (ElementId w = 0; w < sys.order(); ++w)
    if (sys.ascent_set(w) == I && sys.ascent_set(sys.inverse(w)) == J) ++count;
  CHECK(pairing_group_algebra(sys, y_element(sys, I), y_element(sys, J)) == Rational(count));
}

TEST_CASE("phi maps the basis to induced characters and is multiplicative") {
  auto sys = CoxeterSystem::build("B2");
  auto ct = conjugacy_classes(sys);
  auto bank = induced_bank(sys, ct);

  CHECK(phi(sys, ct, DescentAlgebraElement::x_basis(GenSet::all(2))) ==
        induced_trivial(sys, ct, GenSet::all(2)));
  CHECK(phi(sys, ct, DescentAlgebraElement::x_basis(GenSet())) ==
        induced_trivial(sys, ct, GenSet()));

  for (std::uint32_t mi = 0; mi < 4; ++mi)
    for (std::uint32_t mj = 0; mj < 4; ++mj) {
      auto u = DescentAlgebraElement::x_basis(GenSet(mi));
      auto v = DescentAlgebraElement::x_basis(GenSet(mj));
      auto lhs = phi(sys, ct, multiply_x_basis(sys, u, v), bank);
      auto rhs = cf_pointwise(phi(sys, ct, u, bank), phi(sys, ct, v, bank));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("class function evaluation on group algebra vectors") {
  auto sys = CoxeterSystem::build("B3");
  auto ct = conjugacy_classes(sys);
  GroupAlgebraVector e;
  e.coeffs[sys.identity()] = 1;
  auto f = induced_trivial(sys, ct, GenSet::of({0}));
  CHECK(evaluate_classfn_on_vector(ct, f, e) == f.values[ct.class_of[sys.identity()]]);
  // f_C(x_I) counts |X_I cap C|.
  for (const auto& cls : ct.classes) {
    ClassFunction fc;
    fc.values.assign(ct.count(), Rational(0));
    fc.values[cls.id] = 1;
    GenSet I = GenSet::of({0, 2});
    std::uint64_t count = 0;
    for (ElementId w : minimal_coset_reps(sys, I).reps)
      if (cls.members[w]) ++count;
    CHECK(evaluate_classfn_on_vector(ct, fc, x_element(sys, I)) == Rational(count));
  }
}

TEST_CASE("idempotent characters") {
  auto sys = CoxeterSystem::build("A2");
  auto ct = conjugacy_classes(sys);

  GroupAlgebraVector ident;
  ident.coeffs[sys.identity()] = 1;
  auto chi = idempotent_character(sys, ct, ident);
  CHECK(chi == induced_trivial(sys, ct, GenSet()));  // regular character

  // Direct evaluation of chi_e(w) = sum_x e_{x w^-1 x^-1} as an oracle.
  auto e1 = trivial_idempotent(sys, GenSet::of({0}));
  auto chi1 = idempotent_character(sys, ct, e1);
  for (const auto& cls : ct.classes) {
    Rational direct = 0;
    for (ElementId x = 0; x < sys.order(); ++x)
      direct += e1.at(sys.multiply(sys.multiply(x, sys.inverse(cls.min_rep)), sys.inverse(x)));
    CHECK(chi1.values[cls.id] == direct);
  }

  GroupAlgebraVector bogus;
  bogus.coeffs[sys.generator(0)] = 1;
  CHECK_THROWS_AS((void)idempotent_character(sys, ct, bogus), Error);
}

TEST_CASE("chi of e_I is the induced trivial character") {
  for (const char* spec : {"A2", "B2", "H3"}) {
    CAPTURE(spec);
    auto sys = CoxeterSystem::build(spec);
    auto ct = conjugacy_classes(sys);
    for (std::uint32_t m = 0; m < (1u << sys.rank()); ++m) {
      GenSet I(m);
      CHECK(idempotent_character(sys, ct, trivial_idempotent(sys, I)) ==
            induced_trivial(sys, ct, I));
    }
  }
}

TEST_CASE("scalar products of idempotent characters (chi_{e'} (e) rule)") {
  auto sys = CoxeterSystem::build("B2");
  auto ct = conjugacy_classes(sys);
  for (std::uint32_t mi = 0; mi < 4; ++mi)
    for (std::uint32_t mj = 0; mj < 4; ++mj) {
      GenSet I(mi), J(mj);
      auto ei = trivial_idempotent(sys, I);
      auto ej = trivial_idempotent(sys, J);
      auto chii = idempotent_character(sys, ct, ei);
      auto chij = idempotent_character(sys, ct, ej);
      Rational lhs = scalar_product_classfn(sys, ct, chii, chij);
      Rational rhs = evaluate_classfn_on_vector(ct, chij, ei);
      CHECK(lhs == rhs);
      CHECK(lhs == Rational(double_coset_reps(sys, I, J).reps.size()));
    }
}

TEST_CASE("sign idempotents") {
  auto a1 = CoxeterSystem::build("A1");
  auto et = sign_idempotent(a1, GenSet::all(1));
  CHECK(et.at(a1.identity()) == Rational(1, 2));
  CHECK(et.at(a1.generator(0)) == Rational(-1, 2));
  CHECK(ga_multiply(a1, et, et) == et);

  CHECK(sign_idempotent(a1, GenSet()).at(a1.identity()) == 1);

  auto b2 = CoxeterSystem::build("B2");
  for (std::uint32_t m = 0; m < 4; ++m) {
    auto e = sign_idempotent(b2, GenSet(m));
    CHECK(ga_multiply(b2, e, e) == e);
    auto f = trivial_idempotent(b2, GenSet(m));
    CHECK(ga_multiply(b2, f, f) == f);
  }
}

TEST_CASE("rank of induced characters (A2)") {
  auto sys = CoxeterSystem::build("A2");
  auto ct = conjugacy_classes(sys);
  auto bank = induced_bank(sys, ct);
  CHECK(rank_of_classfns(bank) == 3);  // |Lambda(A2)| = 3
}

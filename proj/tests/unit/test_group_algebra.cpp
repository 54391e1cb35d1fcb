#include <doctest.h>

#include <random>
#include <stdexcept>

#include "capelli/group_algebra.hpp"

using namespace capelli;

namespace {

GroupAlgebraElement tr(int a, int b, int k) { return GroupAlgebraElement::basis(Permutation::transposition(a, b, k)); }

GroupAlgebraElement random_element(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto perms = all_permutations(k);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  GroupAlgebraElement a(k);
  for (int t = 0; t < 4; ++t) a.add_term(perms[pick(rng)], ratio(coeff(rng), 2));
  return a;
}

}  // namespace

TEST_CASE("multiply") {
  const auto e = GroupAlgebraElement::identity(3);
  std::mt19937 rng(7);
  auto a = random_element(3, rng);
  CHECK(e * a == a);
  CHECK(a * e == a);

  auto e2 = GroupAlgebraElement::identity(2);
  CHECK((e2 - tr(1, 2, 2)) * (e2 + tr(1, 2, 2)) == GroupAlgebraElement(2));
  CHECK(jucys_murphy(2, 3) * jucys_murphy(3, 3) == jucys_murphy(3, 3) * jucys_murphy(2, 3));
  CHECK_THROWS_AS(multiply(GroupAlgebraElement::identity(2), GroupAlgebraElement::identity(3)), std::invalid_argument);

  // (12)(23) = [2,3,1] under (st)(i) = s(t(i)).
  CHECK(tr(1, 2, 3) * tr(2, 3, 3) == GroupAlgebraElement::basis(Permutation({2, 3, 1})));
}

TEST_CASE("zero coefficients are never stored") {
  GroupAlgebraElement a = tr(1, 2, 2);
  a.add_term(Permutation::transposition(1, 2, 2), -1);
  CHECK(a.is_zero());
  CHECK(a.terms().empty());
  CHECK(a.to_string() == "0");
  a.add_term(Permutation::identity(2), 0);
  CHECK(a.terms().empty());
}

TEST_CASE("involution") {
  std::mt19937 rng(11);
  for (int k = 1; k <= 5; ++k)
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_element(k, rng);
      auto b = random_element(k, rng);
      CHECK(involution(involution(a)) == a);
      CHECK(involution(a * b) == involution(b) * involution(a));
    }
  for (int k = 1; k <= 5; ++k)
    for (const auto& mu : enumerate_partitions(k)) {
      auto t0 = row_tableau(mu);
      auto p = row_symmetrizer(t0);
      auto q = column_antisymmetrizer(t0);
      CHECK(involution(p) == p);
      CHECK(involution(q) == q);
      CHECK(p * p == Rational(static_cast<long>(mu.factorial_product())) * p);
      CHECK(q * q == Rational(static_cast<long>(mu.conjugate().factorial_product())) * q);
    }
}

TEST_CASE("jucys_murphy") {
  CHECK(jucys_murphy(1, 3).is_zero());
  CHECK(jucys_murphy(2, 3) == tr(1, 2, 3));
  CHECK(jucys_murphy(3, 3) == tr(1, 3, 3) + tr(2, 3, 3));
  CHECK_THROWS_AS(jucys_murphy(4, 3), std::out_of_range);
  CHECK_THROWS_AS(jucys_murphy(0, 3), std::out_of_range);

  for (int k = 1; k <= 6; ++k)
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) CHECK(jucys_murphy(i, k) * jucys_murphy(j, k) == jucys_murphy(j, k) * jucys_murphy(i, k));
      GroupAlgebraElement prev = i > 1 ? sigma_p(i - 1, k) : GroupAlgebraElement(k);
      CHECK(jucys_murphy(i, k) == sigma_p(i, k) - prev);
    }
}

TEST_CASE("sigma_p") {
  CHECK(sigma_p(1, 3).is_zero());
  CHECK(sigma_p(2, 3) == tr(1, 2, 3));
  CHECK(sigma_p(3, 3) == tr(1, 2, 3) + tr(1, 3, 3) + tr(2, 3, 3));
  CHECK_THROWS_AS(sigma_p(4, 3), std::out_of_range);
  for (int p = 1; p <= 5; ++p)
    for (int a = 1; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) CHECK(sigma_p(p, p) * tr(a, b, p) == tr(a, b, p) * sigma_p(p, p));
}

TEST_CASE("symmetrizers of the row tableau") {
  auto e2 = GroupAlgebraElement::identity(2);
  auto t2 = row_tableau(Partition({2}));
  CHECK(row_symmetrizer(t2) == e2 + tr(1, 2, 2));
  CHECK(column_antisymmetrizer(t2) == e2);

  auto t11 = row_tableau(Partition({1, 1}));
  CHECK(row_symmetrizer(t11) == e2);
  CHECK(column_antisymmetrizer(t11) == e2 - tr(1, 2, 2));

  auto e3 = GroupAlgebraElement::identity(3);
  auto t21 = row_tableau(Partition({2, 1}));
  CHECK(row_symmetrizer(t21) == e3 + tr(1, 2, 3));
  CHECK(column_antisymmetrizer(t21) == e3 - tr(1, 3, 3));
}

TEST_CASE("text form") {
  GroupAlgebraElement a(3);
  a.add_term(Permutation::identity(3), 1);
  a.add_term(Permutation({2, 1, 3}), ratio(-1, 2));
  CHECK(a.to_string() == "1*[1,2,3] - 1/2*[2,1,3]");
}

#include <doctest.h>

#include <stdexcept>

#include "capelli/gln.hpp"
#include "capelli/highest_weight.hpp"
#include "capelli/shifted_schur.hpp"

using namespace capelli;

namespace {

MultiPolynomial var(int n, int i) { return MultiPolynomial::variable(n, i); }
MultiPolynomial cst(int n, const Rational& c) { return MultiPolynomial::constant(n, c); }

// Semistandard tableaux count weighted by x^content: the combinatorial Schur polynomial.
void ssyt_rec(const Partition& mu, int n, std::vector<std::vector<int>>& fill, int r, int c, MultiPolynomial& acc) {
  if (r > mu.length()) {
    MultiPolynomial::Exponents e(n, 0);
    for (const auto& row : fill)
      for (int v : row) ++e[v - 1];
    acc.add_term(e, 1);
    return;
  }
  int next_r = c == mu.row_length(r) ? r + 1 : r;
  int next_c = c == mu.row_length(r) ? 1 : c + 1;
  int lo = 1;
  if (c > 1) lo = std::max(lo, fill[r - 1][c - 2]);
  if (r > 1) lo = std::max(lo, fill[r - 2][c - 1] + 1);
  for (int v = lo; v <= n; ++v) {
    fill[r - 1][c - 1] = v;
    ssyt_rec(mu, n, fill, next_r, next_c, acc);
  }
}

MultiPolynomial schur_by_tableaux(const Partition& mu, int n) {
  MultiPolynomial acc(n);
  if (mu.empty()) return cst(n, 1);
  std::vector<std::vector<int>> fill;
  for (int part : mu.parts()) fill.emplace_back(part, 0);
  ssyt_rec(mu, n, fill, 1, 1, acc);
  return acc;
}

}  // namespace

TEST_CASE("falling factorials") {
  CHECK(falling_factorial(Rational(7), 0) == 1);
  CHECK(falling_factorial(Rational(5), 3) == 60);
  CHECK(falling_factorial(Rational(2), 3) == 0);
  CHECK(falling_factorial(var(1, 1), 0) == cst(1, 1));
  CHECK(falling_factorial(var(1, 1), 1) == var(1, 1));
  CHECK(falling_factorial(var(1, 1), 2) == var(1, 1) * var(1, 1) - var(1, 1));
  CHECK_THROWS_AS(falling_factorial(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("rho") {
  CHECK(rho(1) == std::vector<int>{0});
  CHECK(rho(2) == std::vector<int>{1, 0});
  CHECK(rho(3) == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(rho(0), std::invalid_argument);
}

TEST_CASE("polynomial text form") {
  CHECK(MultiPolynomial(2).to_string() == "0");
  CHECK(cst(2, 3).to_string() == "3");
  CHECK((var(2, 1) + var(2, 2)).to_string() == "1 * x1^1 + 1 * x2^1");
  CHECK((ratio(-1, 2) * var(2, 1) * var(2, 1) * var(2, 2) + cst(2, 1)).to_string() == "-1/2 * x1^2 x2^1 + 1");
}

TEST_CASE("linear division") {
  MultiPolynomial p = (var(2, 1) - var(2, 2) + cst(2, 1)) * (var(2, 1) * var(2, 2) + cst(2, 4));
  CHECK(divide_linear(p, 1, 2, 1) == var(2, 1) * var(2, 2) + cst(2, 4));
  CHECK_THROWS_AS(divide_linear(var(2, 1) + cst(2, 1), 1, 2, 0), std::logic_error);
}

TEST_CASE("shifted Schur polynomials") {
  CHECK(shifted_schur(Partition({1}), 2) == var(2, 1) + var(2, 2));
  CHECK(shifted_schur(Partition(), 3) == cst(3, 1));
  CHECK(evaluate_at(shifted_schur(Partition({2, 1}), 3), Partition({2, 1})) == 3);
  CHECK_THROWS_AS(shifted_schur(Partition({1, 1, 1}), 2), std::invalid_argument);
  for (int k = 0; k <= 4; ++k)
    for (const auto& mu : enumerate_partitions(k))
      for (int n = std::max(1, mu.length()); n <= 3; ++n) {
        auto s = shifted_schur(mu, n);
        CHECK(s.degree() <= k);
        CHECK(verify_characterization(mu, n).passed);
      }
}

TEST_CASE("ordinary Schur polynomials") {
  CHECK(ordinary_schur(Partition({1}), 2) == var(2, 1) + var(2, 2));
  CHECK(ordinary_schur(Partition({1, 1}), 2) == var(2, 1) * var(2, 2));
  CHECK(ordinary_schur(Partition({2}), 2) == var(2, 1) * var(2, 1) + var(2, 1) * var(2, 2) + var(2, 2) * var(2, 2));
  for (int k = 0; k <= 4; ++k)
    for (const auto& mu : enumerate_partitions(k))
      for (int n = std::max(1, mu.length()); n <= 3; ++n) {
        auto s = ordinary_schur(mu, n);
        CHECK(s == schur_by_tableaux(mu, n));
        CHECK(s.homogeneous_part(k) == s);
        for (int i = 1; i < n; ++i) CHECK(s.swap_variables(i, i + 1) == s);
      }
}

TEST_CASE("characterization examples") {
  auto s1 = shifted_schur(Partition({1}), 2);
  CHECK(evaluate_at(s1, Partition()) == 0);
  CHECK(evaluate_at(s1, Partition({1})) == 1);

  auto s21 = shifted_schur(Partition({2, 1}), 3);
  for (const auto& lam : partitions_up_to(2, 3)) CHECK(evaluate_at(s21, lam) == 0);
  CHECK(evaluate_at(s21, Partition({3})) == 0);
  CHECK(evaluate_at(s21, Partition({1, 1, 1})) == 0);

  CHECK(shifted_schur(Partition({2}), 2).homogeneous_part(2) == ordinary_schur(Partition({2}), 2));
}

TEST_CASE("highest weight vectors") {
  const Ambient k22{2, 2};
  auto x = [&](int i, int a) { return generator(Generator::Kind::x, {i, a}, k22); };
  CHECK(highest_weight_vector(WeightVector::from_partition(Partition({1}), 2), 2, 2) == x(1, 1));
  CHECK(highest_weight_vector(WeightVector::from_partition(Partition({1, 1}), 2), 2, 2) ==
        x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1));
  auto v21 = highest_weight_vector(WeightVector::from_partition(Partition({2, 1}), 2), 2, 2);
  CHECK(apply(e_matrix(2, 2)(1, 2), v21).is_zero());
  CHECK_THROWS_AS(WeightVector::from_partition(Partition({1, 1, 1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(highest_weight_vector(WeightVector::from_partition(Partition({1, 1}), 2), 2, 1), std::invalid_argument);
  CHECK(low_degree_monomials(2, 2, 2).size() == 5);
}

TEST_CASE("eigenvalues on highest weight vectors") {
  for (const auto& lam : partitions_up_to(4, 2)) {
    auto r = verify_eigenvalue(Partition({1}), lam, 2, 2);
    CHECK(r.outcome.passed);
    CHECK(r.operator_eigenvalue == lam.size());
  }
  auto low = verify_eigenvalue(Partition({2, 1}), Partition({2}), 2, 2);
  CHECK(low.outcome.passed);
  CHECK(low.operator_eigenvalue == 0);
  CHECK(low.annihilates_low_degree);

  auto two = verify_eigenvalue(Partition({2}), Partition({2}), 2, 2);
  CHECK(two.outcome.passed);
  CHECK(two.operator_eigenvalue == 2);

  // A non-central operator is caught.
  auto e = e_matrix(2, 2);
  auto wrong = verify_eigenvalue(e(1, 1) * e(1, 1), Partition({2}), Partition({1, 1}), 2, 2);
  CHECK_FALSE(wrong.outcome.passed);
}

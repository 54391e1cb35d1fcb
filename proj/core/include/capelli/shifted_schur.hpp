#pragma once

// Commutative polynomials in x_1..x_n with rational coefficients, falling
// factorials, and the shifted and ordinary Schur polynomials built as ratios
// of determinants.

#include <map>
#include <string>
#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/outcome.hpp"
#include "capelli/rational.hpp"

namespace capelli {

class MultiPolynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPolynomial(int nvars = 0);
  static MultiPolynomial constant(int nvars, const Rational& c);
  /// x_i, 1-based.
  static MultiPolynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPolynomial& operator+=(const MultiPolynomial& other);
  MultiPolynomial& operator-=(const MultiPolynomial& other);
  MultiPolynomial& operator*=(const Rational& c);

  Rational evaluate(const std::vector<Rational>& point) const;
  /// Terms of total degree exactly d.
  MultiPolynomial homogeneous_part(int d) const;
  /// Substitutes x_i -> x_i + shifts[i-1].
  MultiPolynomial shift_variables(const std::vector<Rational>& shifts) const;
  /// Exchanges x_i and x_j.
  MultiPolynomial swap_variables(int i, int j) const;

  /// "coeff * x1^a1 x2^a2 + ..." sorted by exponent vector descending.
  std::string to_string() const;

  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

 private:
  void check_arity(const MultiPolynomial& other) const;

  int nvars_;
  Terms terms_;
};

MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b);
MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b);
MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
MultiPolynomial operator*(const Rational& c, MultiPolynomial a);

/// Quotient of p by (x_i - x_j + c). Throws std::logic_error on a nonzero remainder.
MultiPolynomial divide_linear(const MultiPolynomial& p, int i, int j, const Rational& c);

/// x (x-1) ... (x-k+1).
Rational falling_factorial(const Rational& x, int k);
MultiPolynomial falling_factorial(const MultiPolynomial& x, int k);

/// (n-1, ..., 1, 0).
std::vector<int> rho(int n);

/// det[(x_i + rho_i falling mu_j + rho_j)] / det[(x_i + rho_i falling rho_j)].
/// Throws std::invalid_argument if mu has more than n rows.
MultiPolynomial shifted_schur(const Partition& mu, int n);
/// det[x_i^{mu_j + rho_j}] / det[x_i^{rho_j}].
MultiPolynomial ordinary_schur(const Partition& mu, int n);

/// Evaluates at lambda padded with zeros to n variables.
Rational evaluate_at(const MultiPolynomial& p, const Partition& lambda);

/// All partitions of size <= max_size with at most n rows.
std::vector<Partition> partitions_up_to(int max_size, int n);

/// Vanishing and normalization at every lambda with |lambda| <= |mu|, top part
/// equal to the ordinary Schur polynomial, and shifted symmetry.
Outcome verify_characterization(const Partition& mu, int n);

}  // namespace capelli

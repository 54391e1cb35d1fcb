#pragma once

// Highest-weight vectors in the polynomial representation of gl(n) on
// functions of an n x m matrix, and the eigenvalues of central elements on them.

#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/outcome.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

/// A partition padded with zeros to length n.
struct WeightVector {
  std::vector<int> lambda;

  /// Throws std::invalid_argument if lambda has more than n rows.
  static WeightVector from_partition(const Partition& lambda, int n);
  int n() const { return static_cast<int>(lambda.size()); }
  int size() const;
};

/// Leading principal t x t minor of the coordinate matrix, as a polynomial.
WeylOperator leading_minor(int t, int n, int m);

/// prod_t Delta_t^{lambda_t - lambda_{t+1}}. Checks E_ii v = lambda_i v and
/// E_ij v = 0 (i < j) before returning. Throws std::invalid_argument if
/// lambda has more than min(n, m) nonzero entries.
WeylOperator highest_weight_vector(const WeightVector& lambda, int n, int m);

Outcome verify_highest_weight(const WeylOperator& v, const WeightVector& lambda, int n, int m);

struct EigenvalueReport {
  Outcome outcome;
  Rational operator_eigenvalue;  ///< from applying the operator to v_lambda
  Rational shifted_value;        ///< s*_mu(lambda) from the determinant formula
  bool annihilates_low_degree = false;
};

/// Applies `op` (central, of order |mu|) to v_lambda and compares the
/// eigenvalue with s*_mu(lambda); also checks that op kills every monomial
/// of degree < |mu|.
EigenvalueReport verify_eigenvalue(const WeylOperator& op, const Partition& mu, const Partition& lambda, int n, int m);
/// Same, with op = the quantum immanant of mu.
EigenvalueReport verify_eigenvalue(const Partition& mu, const Partition& lambda, int n, int m);

/// Every monomial x^a with total degree < max_degree.
std::vector<WeylOperator> low_degree_monomials(int max_degree, int n, int m);

}  // namespace capelli

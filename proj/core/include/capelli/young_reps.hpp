#pragma once

// Young's seminormal representations of S(k) over Q.
//
// Basis vectors v_T are indexed by standard tableaux in content-vector order.
// For s_i = (i i+1) with d = c_T(i+1) - c_T(i):
//   i, i+1 in one row     : s_i v_T = v_T
//   i, i+1 in one column  : s_i v_T = -v_T
//   otherwise, d < 0      : s_i v_T = (1/d) v_T + v_{s_i T}
//   otherwise, d > 0      : s_i v_T = (1/d) v_T + (1 - 1/d^2) v_{s_i T}
// so that v_{s_i T} = (s_i - 1/d) v_T whenever i+1 sits below i in T.
// The vectors are orthogonal but not unit length; every matrix element used
// below is the seminormal coefficient [R(s)]_{T',T}.

#include <map>
#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/group_algebra.hpp"
#include "capelli/matrix.hpp"
#include "capelli/outcome.hpp"

namespace capelli {

class SeminormalRep {
 public:
  SeminormalRep(Partition shape, std::vector<StandardTableau> basis, std::vector<RationalMatrix> generators)
      : shape_(std::move(shape)), basis_(std::move(basis)), generators_(std::move(generators)) {}

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.size(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  /// R(s_i), 1 <= i < k.
  const RationalMatrix& generator(int i) const { return generators_.at(i - 1); }
  /// Position of t in the basis; throws std::invalid_argument if t has another shape.
  std::size_t index_of(const StandardTableau& t) const;

 private:
  Partition shape_;
  std::vector<StandardTableau> basis_;
  std::vector<RationalMatrix> generators_;
};

SeminormalRep build_rep(const Partition& mu);

/// Shared immutable copy, built once per shape. Thread-safe.
const SeminormalRep& cached_rep(const Partition& mu);

/// R(s) as a product of generators along a reduced word. R(st) = R(s) R(t).
RationalMatrix rep_matrix(const SeminormalRep& rep, const Permutation& s);

/// R(s) for every s in S(k), built breadth-first from the generators.
std::map<Permutation, RationalMatrix> all_rep_matrices(const SeminormalRep& rep);

/// Sum of coeff(s) R(s).
RationalMatrix apply_element(const SeminormalRep& rep, const GroupAlgebraElement& a);

Rational character(const Partition& mu, const Permutation& s);
/// chi^mu = sum_s chi^mu(s) s.
GroupAlgebraElement character_element(const Partition& mu);

/// Psi_{TT'} = sum_s [R(s)]_{T',T} s^{-1}. Throws std::invalid_argument on shape mismatch.
GroupAlgebraElement psi_element(const StandardTableau& t, const StandardTableau& tp);

/// P_{TT'} = (dim mu / k!) Psi_{TT'}; acts as the matrix unit v_{T'} -> v_T.
GroupAlgebraElement projector(const StandardTableau& t, const StandardTableau& tp);

/// Checks Psi_{T0 T0} = (1/lambda!) P Q P for the row tableau T0 of mu.
Outcome verify_young_symmetrizer(const Partition& mu);

struct IntertwinerResult {
  std::vector<Rational> vector;
  std::vector<int> eigenvalues;
};

/// v' = (s_p - 1/(a_{p+1} - a_p)) v. Requires v to be a joint eigenvector of
/// X_1..X_k with eigenvalues a and a_{p+1} - a_p not in {-1, 0, 1}; otherwise
/// throws std::invalid_argument. The result has eigenvalues a with entries p, p+1 swapped.
IntertwinerResult intertwiner_step(const SeminormalRep& rep, const std::vector<Rational>& v,
                                   const std::vector<int>& a, int p);

}  // namespace capelli

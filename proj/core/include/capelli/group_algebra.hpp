#pragma once

// The group algebra Q[S(k)] with sparse exact coefficients.

#include <map>
#include <string>

#include "capelli/combinatorics.hpp"
#include "capelli/rational.hpp"

namespace capelli {

class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int k = 0) : k_(k) {}
  static GroupAlgebraElement identity(int k);
  static GroupAlgebraElement basis(const Permutation& s, const Rational& coeff = 1);

  int degree() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& s) const;

  /// Adds coeff * s; drops the entry if it cancels to zero.
  void add_term(const Permutation& s, const Rational& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& c);

  /// Terms sorted by image tuple, e.g. "1*[1,2,3] - 1/2*[2,1,3]"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  void check_degree(int k) const;

  int k_;
  Terms terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a);

/// Convolution product. Throws std::invalid_argument on degree mismatch.
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return multiply(a, b);
}

/// Linear extension of s -> s^{-1}.
GroupAlgebraElement involution(const GroupAlgebraElement& a);

/// X_i = (1 i) + (2 i) + ... + (i-1 i). Throws std::out_of_range unless 1 <= i <= k.
GroupAlgebraElement jucys_murphy(int i, int k);

/// Sum of all transpositions (i j) with i < j <= p. Throws std::out_of_range unless 1 <= p <= k.
GroupAlgebraElement sigma_p(int p, int k);

/// Sum of all permutations preserving every row set of t.
GroupAlgebraElement row_symmetrizer(const StandardTableau& t);

/// Sum of sgn(s) s over permutations preserving every column set of t.
GroupAlgebraElement column_antisymmetrizer(const StandardTableau& t);

}  // namespace capelli

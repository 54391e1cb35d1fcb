#pragma once

// Weyl algebra of polynomial differential operators on n x m matrices.
//
// Operators are stored in normal order (every x to the left of every d), so
// two operators are equal exactly when their term maps are equal. This
// canonical-form comparison is the equality oracle for every identity the
// library checks.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// Upper bound on n * m.
inline constexpr int kMaxVariables = 16;

struct VarIndex {
  int row = 1;  ///< i, 1..n
  int col = 1;  ///< alpha, 1..m
  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

struct Ambient {
  int n = 1;
  int m = 1;

  /// Throws std::invalid_argument unless n, m >= 1 and n * m <= kMaxVariables.
  void validate() const;
  int variables() const { return n * m; }
  /// Throws std::out_of_range if v is outside 1..n x 1..m.
  int slot(VarIndex v) const;
  VarIndex var(int slot) const { return {slot / m + 1, slot % m + 1}; }
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// x^xdeg d^ddeg, with exponents indexed by Ambient::slot.
struct WeylMonomial {
  std::array<std::uint8_t, kMaxVariables> x{};
  std::array<std::uint8_t, kMaxVariables> d{};

  int x_degree() const;
  int d_degree() const;
  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// "x[1,1]^2 d[1,2]^1"; the empty monomial is "1".
std::string monomial_to_string(const WeylMonomial& mono, const Ambient& ambient);

class WeylOperator {
 public:
  using Terms = std::map<WeylMonomial, Rational>;

  explicit WeylOperator(Ambient ambient = {});
  static WeylOperator constant(Ambient ambient, const Rational& c);
  static WeylOperator monomial(Ambient ambient, const WeylMonomial& mono, const Rational& c = 1);

  const Ambient& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no term contains a derivative.
  bool is_polynomial() const;
  /// Maximal derivative degree; -1 for the zero operator.
  int order() const;
  /// Maximal x-degree plus d-degree; -1 for the zero operator.
  int degree() const;
  Rational coefficient(const WeylMonomial& mono) const;

  void add_term(const WeylMonomial& mono, const Rational& coeff);

  WeylOperator& operator+=(const WeylOperator& other);
  WeylOperator& operator-=(const WeylOperator& other);
  WeylOperator& operator*=(const Rational& c);

  /// Terms with exactly the given x-degree and d-degree.
  WeylOperator bidegree_part(int x_degree, int d_degree) const;

  /// "coeff*monomial + ..." in canonical term order; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

 private:
  void check_ambient(const Ambient& other) const;

  Ambient ambient_;
  Terms terms_;
};

WeylOperator operator+(WeylOperator a, const WeylOperator& b);
WeylOperator operator-(WeylOperator a, const WeylOperator& b);
WeylOperator operator*(const Rational& c, WeylOperator a);

/// Normal-ordered product, using d^a x^b = sum_j C(a,j) C(b,j) j! x^(b-j) d^(a-j)
/// in each shared variable. Throws std::invalid_argument on ambient mismatch.
WeylOperator multiply(const WeylOperator& a, const WeylOperator& b);
inline WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return multiply(a, b); }

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);

/// Action on a polynomial p (an operator without derivatives): d acts by
/// partial differentiation, x by multiplication. Throws std::invalid_argument
/// if p contains derivatives or the ambients differ.
WeylOperator apply(const WeylOperator& a, const WeylOperator& p);

struct Generator {
  enum class Kind { x, d };
  Kind kind = Kind::x;
  VarIndex var;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Single-monomial operator x_v or d_v. Throws std::out_of_range if v is outside the ambient.
WeylOperator generator(Generator::Kind kind, VarIndex v, Ambient ambient);
inline WeylOperator to_operator(const Generator& g, Ambient ambient) { return generator(g.kind, g.var, ambient); }

/// AB - :AB: for generators: 1 for (d_v, x_v), 0 otherwise.
Rational pairing(const Generator& a, const Generator& b);
/// Same, for operators that must each be a single generator with coefficient 1.
Rational pairing(const WeylOperator& a, const WeylOperator& b);

/// Chains of positions (1-based, increasing) inside a word of `length` letters;
/// positions not in any chain are left untouched. Wick pairings use chains of
/// length 2; cluster decompositions use chains covering every position.
struct PairingDiagram {
  int length = 0;
  std::vector<std::vector<int>> chains;
};

/// Every partial matching of {1..length} into pairs i < j.
std::vector<PairingDiagram> partial_matchings(int length);

/// Every partition of {1..length} into clusters (chains listed increasingly).
std::vector<PairingDiagram> set_partitions(int length);

/// :A_1 ... A_k: (all x to the left of all d).
WeylOperator normal_ordered(std::span<const Generator> word, Ambient ambient);

/// A_1 A_2 ... A_k by repeated multiply.
WeylOperator fold_multiply(std::span<const Generator> word, Ambient ambient);

/// Sum over all partial matchings of the product of pairings times the
/// normal-ordered remainder.
WeylOperator wick_expand(std::span<const Generator> word, Ambient ambient);

/// One line per term, "<coeff> <monomial>", lines sorted bytewise, each
/// terminated by '\n'. The zero operator dumps to an empty string.
std::string dump_operator(const WeylOperator& op);

/// Inverse of dump_operator. Throws std::invalid_argument on malformed input.
WeylOperator parse_operator(std::string_view text, Ambient ambient);

}  // namespace capelli

#pragma once

// U(gl(n)) inside the Weyl algebra of n x m matrices: E_ij = sum_a x_ia d_ja.
//
// A TensorOperator is an element of W (x) M(rows, cols)^{(x) k}. Its entries are
// keyed by the interleaved multi-index (i_1, j_1, ..., i_k, j_k), 1-based.
// S(k) acts on tensor slots: the permutation s moves slot p to slot s(p), so
//   (A . s)_{(i),(j)} = A_{(i),(j o s^{-1})}  and  (s . A)_{(i),(j)} = A_{(i o s),(j)}.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "capelli/combinatorics.hpp"
#include "capelli/group_algebra.hpp"
#include "capelli/outcome.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

class NCMatrix {
 public:
  NCMatrix(int rows, int cols, Ambient ambient);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ambient& ambient() const { return ambient_; }
  /// 1-based entry access.
  WeylOperator& operator()(int i, int j) { return entries_[(i - 1) * cols_ + (j - 1)]; }
  const WeylOperator& operator()(int i, int j) const { return entries_[(i - 1) * cols_ + (j - 1)]; }

  friend bool operator==(const NCMatrix&, const NCMatrix&) = default;

 private:
  int rows_;
  int cols_;
  Ambient ambient_;
  std::vector<WeylOperator> entries_;
};

/// n x n matrix E with E_ij = sum_a x_ia d_ja.
NCMatrix e_matrix(int n, int m);
/// n x m matrix of coordinates x_ia.
NCMatrix x_matrix(int n, int m);
/// m x n matrix D' with D'_aj = d_ja.
NCMatrix d_transpose(int n, int m);
/// Ordered product sum_l A_il B_lj.
NCMatrix matrix_product(const NCMatrix& a, const NCMatrix& b);
/// A - u on the diagonal.
NCMatrix shift(const NCMatrix& a, const Rational& u);

class TensorOperator {
 public:
  using MultiIndex = std::vector<int>;
  using Entries = std::map<MultiIndex, WeylOperator>;

  TensorOperator(int depth, int rows, int cols, Ambient ambient);
  /// Depth-0 tensor holding a single operator.
  static TensorOperator scalar(const WeylOperator& value, int rows, int cols);
  static TensorOperator from_matrix(const NCMatrix& a);

  int depth() const { return depth_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ambient& ambient() const { return ambient_; }
  const Entries& entries() const { return entries_; }
  /// Zero operator when the entry is absent.
  WeylOperator at(const MultiIndex& index) const;

  void add_entry(const MultiIndex& index, const WeylOperator& value);

  TensorOperator& operator+=(const TensorOperator& other);
  TensorOperator& operator*=(const Rational& c);

  friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

 private:
  void check_compatible(const TensorOperator& other) const;

  int depth_;
  int rows_;
  int cols_;
  Ambient ambient_;
  Entries entries_;
};

/// A (x) B with entries A_{ij} B_{kl}, left factor first.
TensorOperator tensor(const TensorOperator& a, const TensorOperator& b);
/// A^{(x) k}; k = 0 gives the depth-0 unit.
TensorOperator tensor_power(const NCMatrix& a, int k);
/// Slotwise matrix product in M^{(x) k}: sum_(l) A_{(i),(l)} B_{(l),(j)}.
TensorOperator matmul(const TensorOperator& a, const TensorOperator& b);
/// Image of s in M(dim)^{(x) k} as a tensor with constant entries.
TensorOperator perm_matrix(const Permutation& s, int dim, Ambient ambient);
/// A . sum coeff(s) s.
TensorOperator right_mul_group(const TensorOperator& a, const GroupAlgebraElement& g);
/// sum coeff(s) s . A.
TensorOperator left_mul_group(const GroupAlgebraElement& g, const TensorOperator& a);
/// Sum of the entries with i_p = j_p for every slot. Requires rows == cols.
WeylOperator trace(const TensorOperator& a);

/// Entrywise comparison; the witness names the first differing multi-index.
Outcome compare_tensors(const TensorOperator& a, const TensorOperator& b);

using EWord = std::vector<std::pair<int, int>>;

/// E_{i1 j1} E_{i2 j2} ... by repeated multiply.
WeylOperator e_word_product(const EWord& word, int n, int m);
/// sum over a_1..a_k of x_{i1 a1} ... x_{ik ak} d_{j1 a1} ... d_{jk ak}.
WeylOperator special_symmetrization(const EWord& word, int n, int m);
/// Sum over partitions of the letters into clusters; the cluster {a_1 < ... < a_r}
/// contributes delta_{j_{a_1} i_{a_2}} ... delta_{j_{a_{r-1}} i_{a_r}} and the letter E_{i_{a_1} j_{a_r}},
/// and the collapsed word is specially symmetrized.
WeylOperator olshanski_expand(const EWord& word, int n, int m);

/// X^{(x) k} (D')^{(x) k}.
TensorOperator normal_power(int k, int n, int m);

/// (E - c_1) (x) ... (x) (E - c_k) . g.
TensorOperator fusion_from(const std::vector<Rational>& contents, const GroupAlgebraElement& g, int n, int m);
/// (E - c_T(1)) (x) ... (x) (E - c_T(k)) . Psi_{TT'}.
TensorOperator fusion(const StandardTableau& t, const StandardTableau& tp, int n, int m);
/// X^{(x) k} (D')^{(x) k} . Psi_{TT'}.
TensorOperator rhs_main(const StandardTableau& t, const StandardTableau& tp, int n, int m);

/// fusion(T,T') == rhs_main(T,T') entrywise.
Outcome verify_main_theorem(const StandardTableau& t, const StandardTableau& tp, int n, int m);

/// Row-determinant side against the det(x) det(d) side for 1 <= k <= n <= m,
/// plus the trace form with chi^{(1^k)}. Throws std::invalid_argument otherwise.
Outcome classical_capelli(int n, int m, int k);

/// tr E_T independent of T, and equal to (1/dim mu) tr X^k D'^k chi^mu.
Outcome trace_identity(const Partition& mu, int n, int m);

/// [a, E_ij] == 0 for all i, j.
Outcome verify_central(const WeylOperator& a, int n, int m);

/// (dim mu / k!) tr E_T for the first tableau in basis order.
WeylOperator quantum_immanant(const Partition& mu, int n, int m);
/// (1/k!) tr X^k D'^k chi^mu.
WeylOperator immanant_from_character(const Partition& mu, int n, int m);

/// Both index orderings of the ordered-sum formula against quantum_immanant.
Outcome ordered_sum_theorem(const Partition& mu, int n, int m);

/// P_{T1 T2} E_{T3 T4} == delta_{T2 T3} E_{T1 T4}, with P acting on the left.
Outcome projector_fusion(const StandardTableau& t1, const StandardTableau& t2, const StandardTableau& t3,
                         const StandardTableau& t4, int n, int m);

struct IndependenceReport {
  Outcome outcome;
  std::vector<Partition> shapes;         ///< |mu| <= max_k and at most n rows
  std::size_t rank = 0;
  std::vector<Partition> vanishing;      ///< shapes with more than n rows whose immanant is zero
  std::vector<Partition> nonvanishing;   ///< shapes with more than n rows whose immanant is not zero
};

/// Exact linear independence of the immanants with at most n rows, and top
/// term of each equal to (1/k!) tr G^{(x) k} chi^mu on the symbol G of E.
IndependenceReport independence_check(int max_k, int n, int m);

/// (1/k!) sum_s chi^mu(s) sum_(i) prod_p g_{i_p i_{s^{-1}(p)}}, with g_ij = sum_a x_ia d_ja
/// multiplied commutatively. Returned as a normal-ordered operator of bidegree (k, k).
WeylOperator symbol_trace_polynomial(const Partition& mu, int n, int m);

}  // namespace capelli

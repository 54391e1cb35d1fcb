#include "capelli/gln.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "capelli/matrix.hpp"
#include "capelli/shifted_schur.hpp"
#include "capelli/young_reps.hpp"

namespace capelli {

namespace {

Ambient make_ambient(int n, int m) {
  Ambient a{n, m};
  a.validate();
  return a;
}

WeylOperator x_op(int i, int a, const Ambient& amb) { return generator(Generator::Kind::x, {i, a}, amb); }
WeylOperator d_op(int i, int a, const Ambient& amb) { return generator(Generator::Kind::d, {i, a}, amb); }

std::string index_to_string(const TensorOperator::MultiIndex& idx) {
  std::string out = "(";
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (p) out += ',';
    out += std::to_string(idx[p]);
  }
  return out + ")";
}

// Calls f on every tuple in {1..base}^len.
template <typename F>
void for_each_tuple(int len, int base, F&& f) {
  std::vector<int> t(len, 1);
  if (base < 1 && len > 0) return;
  while (true) {
    f(t);
    int p = len - 1;
    while (p >= 0 && t[p] == base) t[p--] = 1;
    if (p < 0) return;
    ++t[p];
  }
}

GroupAlgebraElement sign_element(int k) {
  GroupAlgebraElement chi(k);
  for (const auto& s : all_permutations(k)) chi.add_term(s, s.sign());
  return chi;
}

Outcome compare_operators(const WeylOperator& lhs, const WeylOperator& rhs, const std::string& what) {
  if (lhs == rhs) return Outcome::pass();
  return Outcome::fail(what + ": lhs = " + lhs.to_string() + " ; rhs = " + rhs.to_string());
}

Rational evaluate_symbol(const WeylOperator& op, const std::vector<Rational>& x, const std::vector<Rational>& xi) {
  Rational total = 0;
  const int nv = op.ambient().variables();
  for (const auto& [mono, c] : op.terms()) {
    Rational term = c;
    for (int v = 0; v < nv; ++v) {
      for (int e = 0; e < mono.x[v]; ++e) term *= x[v];
      for (int e = 0; e < mono.d[v]; ++e) term *= xi[v];
    }
    total += term;
  }
  return total;
}

}  // namespace

NCMatrix::NCMatrix(int rows, int cols, Ambient ambient)
    : rows_(rows), cols_(cols), ambient_(ambient), entries_(static_cast<std::size_t>(rows * cols), WeylOperator(ambient)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
}

NCMatrix e_matrix(int n, int m) {
  Ambient amb = make_ambient(n, m);
  NCMatrix e(n, n, amb);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int a = 1; a <= m; ++a) e(i, j) += x_op(i, a, amb) * d_op(j, a, amb);
  return e;
}

NCMatrix x_matrix(int n, int m) {
  Ambient amb = make_ambient(n, m);
  NCMatrix x(n, m, amb);
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= m; ++a) x(i, a) = x_op(i, a, amb);
  return x;
}

NCMatrix d_transpose(int n, int m) {
  Ambient amb = make_ambient(n, m);
  NCMatrix d(m, n, amb);
  for (int a = 1; a <= m; ++a)
    for (int j = 1; j <= n; ++j) d(a, j) = d_op(j, a, amb);
  return d;
}

NCMatrix matrix_product(const NCMatrix& a, const NCMatrix& b) {
  if (a.cols() != b.rows() || !(a.ambient() == b.ambient()))
    throw std::invalid_argument("matrix_product: shape or ambient mismatch");
  NCMatrix out(a.rows(), b.cols(), a.ambient());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j)
      for (int l = 1; l <= a.cols(); ++l) out(i, j) += a(i, l) * b(l, j);
  return out;
}

NCMatrix shift(const NCMatrix& a, const Rational& u) {
  if (a.rows() != a.cols()) throw std::invalid_argument("shift: matrix is not square");
  NCMatrix out = a;
  for (int i = 1; i <= a.rows(); ++i) out(i, i) -= WeylOperator::constant(a.ambient(), u);
  return out;
}

TensorOperator::TensorOperator(int depth, int rows, int cols, Ambient ambient)
    : depth_(depth), rows_(rows), cols_(cols), ambient_(ambient) {
  if (depth < 0 || rows < 1 || cols < 1) throw std::invalid_argument("invalid tensor operator shape");
}

TensorOperator TensorOperator::scalar(const WeylOperator& value, int rows, int cols) {
  TensorOperator t(0, rows, cols, value.ambient());
  t.add_entry({}, value);
  return t;
}

TensorOperator TensorOperator::from_matrix(const NCMatrix& a) {
  TensorOperator t(1, a.rows(), a.cols(), a.ambient());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) t.add_entry({i, j}, a(i, j));
  return t;
}

WeylOperator TensorOperator::at(const MultiIndex& index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? WeylOperator(ambient_) : it->second;
}

void TensorOperator::add_entry(const MultiIndex& index, const WeylOperator& value) {
  if (static_cast<int>(index.size()) != 2 * depth_) throw std::invalid_argument("multi-index length does not match depth");
  for (std::size_t p = 0; p < index.size(); ++p) {
    int bound = p % 2 == 0 ? rows_ : cols_;
    if (index[p] < 1 || index[p] > bound) throw std::out_of_range("multi-index " + index_to_string(index) + " out of range");
  }
  if (!(value.ambient() == ambient_)) throw std::invalid_argument("tensor entry ambient mismatch");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void TensorOperator::check_compatible(const TensorOperator& other) const {
  if (depth_ != other.depth_ || rows_ != other.rows_ || cols_ != other.cols_ || !(ambient_ == other.ambient_))
    throw std::invalid_argument("tensor operator shape mismatch");
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& other) {
  check_compatible(other);
  for (const auto& [idx, op] : other.entries_) add_entry(idx, op);
  return *this;
}

TensorOperator& TensorOperator::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [idx, op] : entries_) op *= c;
  return *this;
}

TensorOperator tensor(const TensorOperator& a, const TensorOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.ambient() == b.ambient()))
    throw std::invalid_argument("tensor: shape or ambient mismatch");
  TensorOperator out(a.depth() + b.depth(), a.rows(), a.cols(), a.ambient());
  for (const auto& [ia, va] : a.entries()) {
    for (const auto& [ib, vb] : b.entries()) {
      TensorOperator::MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_entry(idx, va * vb);
    }
  }
  return out;
}

TensorOperator tensor_power(const NCMatrix& a, int k) {
  if (k < 0) throw std::invalid_argument("negative tensor power");
  TensorOperator out = TensorOperator::scalar(WeylOperator::constant(a.ambient(), 1), a.rows(), a.cols());
  TensorOperator one = TensorOperator::from_matrix(a);
  for (int p = 0; p < k; ++p) out = tensor(out, one);
  return out;
}

TensorOperator matmul(const TensorOperator& a, const TensorOperator& b) {
  if (a.depth() != b.depth() || a.cols() != b.rows() || !(a.ambient() == b.ambient()))
    throw std::invalid_argument("matmul: shape or ambient mismatch");
  const int k = a.depth();
  // Index b's entries by their row tuple.
  std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, const WeylOperator*>>> by_row;
  for (const auto& [idx, op] : b.entries()) {
    std::vector<int> row(k), col(k);
    for (int p = 0; p < k; ++p) {
      row[p] = idx[2 * p];
      col[p] = idx[2 * p + 1];
    }
    by_row[row].emplace_back(col, &op);
  }
  TensorOperator out(k, a.rows(), b.cols(), a.ambient());
  for (const auto& [idx, op] : a.entries()) {
    std::vector<int> mid(k);
    for (int p = 0; p < k; ++p) mid[p] = idx[2 * p + 1];
    auto it = by_row.find(mid);
    if (it == by_row.end()) continue;
    for (const auto& [col, bop] : it->second) {
      TensorOperator::MultiIndex key(2 * k);
      for (int p = 0; p < k; ++p) {
        key[2 * p] = idx[2 * p];
        key[2 * p + 1] = col[p];
      }
      out.add_entry(key, op * *bop);
    }
  }
  return out;
}

TensorOperator perm_matrix(const Permutation& s, int dim, Ambient ambient) {
  const int k = s.degree();
  TensorOperator out(k, dim, dim, ambient);
  WeylOperator one = WeylOperator::constant(ambient, 1);
  for_each_tuple(k, dim, [&](const std::vector<int>& b) {
    TensorOperator::MultiIndex key(2 * k);
    for (int p = 1; p <= k; ++p) {
      key[2 * (s(p) - 1)] = b[p - 1];
      key[2 * (p - 1) + 1] = b[p - 1];
    }
    out.add_entry(key, one);
  });
  return out;
}

TensorOperator right_mul_group(const TensorOperator& a, const GroupAlgebraElement& g) {
  if (g.degree() != a.depth()) throw std::invalid_argument("right_mul_group: degree does not match tensor depth");
  const int k = a.depth();
  TensorOperator out(k, a.rows(), a.cols(), a.ambient());
  for (const auto& [s, c] : g.terms()) {
    for (const auto& [idx, op] : a.entries()) {
      TensorOperator::MultiIndex key = idx;
      for (int p = 1; p <= k; ++p) key[2 * (p - 1) + 1] = idx[2 * (s(p) - 1) + 1];
      out.add_entry(key, c * op);
    }
  }
  return out;
}

TensorOperator left_mul_group(const GroupAlgebraElement& g, const TensorOperator& a) {
  if (g.degree() != a.depth()) throw std::invalid_argument("left_mul_group: degree does not match tensor depth");
  const int k = a.depth();
  TensorOperator out(k, a.rows(), a.cols(), a.ambient());
  for (const auto& [s, c] : g.terms()) {
    for (const auto& [idx, op] : a.entries()) {
      TensorOperator::MultiIndex key = idx;
      for (int p = 1; p <= k; ++p) key[2 * (s(p) - 1)] = idx[2 * (p - 1)];
      out.add_entry(key, c * op);
    }
  }
  return out;
}

WeylOperator trace(const TensorOperator& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace of a rectangular tensor operator");
  WeylOperator out(a.ambient());
  for (const auto& [idx, op] : a.entries()) {
    bool diagonal = true;
    for (int p = 0; p < a.depth() && diagonal; ++p) diagonal = idx[2 * p] == idx[2 * p + 1];
    if (diagonal) out += op;
  }
  return out;
}

Outcome compare_tensors(const TensorOperator& a, const TensorOperator& b) {
  if (a.depth() != b.depth() || a.rows() != b.rows() || a.cols() != b.cols() || !(a.ambient() == b.ambient()))
    return Outcome::fail("tensor shapes differ");
  if (a.entries() == b.entries()) return Outcome::pass();
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  // Walk both sorted maps to the first multi-index where they disagree.
  while (true) {
    const TensorOperator::MultiIndex* key = nullptr;
    if (ia == a.entries().end() && ib == b.entries().end()) break;
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first))
      key = &ia->first;
    else if (ia == a.entries().end() || ib->first < ia->first)
      key = &ib->first;
    else if (!(ia->second == ib->second))
      key = &ia->first;
    if (key) {
      return Outcome::fail("multi-index " + index_to_string(*key) + ": lhs = " + a.at(*key).to_string() +
                           " ; rhs = " + b.at(*key).to_string());
    }
    ++ia;
    ++ib;
  }
  return Outcome::fail("tensor operators differ");
}

WeylOperator e_word_product(const EWord& word, int n, int m) {
  NCMatrix e = e_matrix(n, m);
  WeylOperator acc = WeylOperator::constant(e.ambient(), 1);
  for (const auto& [i, j] : word) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("E index out of range");
    acc = acc * e(i, j);
  }
  return acc;
}

WeylOperator special_symmetrization(const EWord& word, int n, int m) {
  Ambient amb = make_ambient(n, m);
  for (const auto& [i, j] : word)
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("E index out of range");
  const int k = static_cast<int>(word.size());
  WeylOperator out(amb);
  for_each_tuple(k, m, [&](const std::vector<int>& alpha) {
    WeylMonomial mono;
    for (int p = 0; p < k; ++p) {
      ++mono.x[amb.slot({word[p].first, alpha[p]})];
      ++mono.d[amb.slot({word[p].second, alpha[p]})];
    }
    out.add_term(mono, 1);
  });
  return out;
}

WeylOperator olshanski_expand(const EWord& word, int n, int m) {
  Ambient amb = make_ambient(n, m);
  const int k = static_cast<int>(word.size());
  WeylOperator out(amb);
  for (const auto& diagram : set_partitions(k)) {
    EWord collapsed;
    bool alive = true;
    for (const auto& cluster : diagram.chains) {
      for (std::size_t t = 0; t + 1 < cluster.size() && alive; ++t)
        alive = word[cluster[t] - 1].second == word[cluster[t + 1] - 1].first;
      if (!alive) break;
      collapsed.emplace_back(word[cluster.front() - 1].first, word[cluster.back() - 1].second);
    }
    if (alive) out += special_symmetrization(collapsed, n, m);
  }
  return out;
}

TensorOperator normal_power(int k, int n, int m) {
  return matmul(tensor_power(x_matrix(n, m), k), tensor_power(d_transpose(n, m), k));
}

TensorOperator fusion_from(const std::vector<Rational>& contents, const GroupAlgebraElement& g, int n, int m) {
  NCMatrix e = e_matrix(n, m);
  TensorOperator acc = TensorOperator::scalar(WeylOperator::constant(e.ambient(), 1), n, n);
  for (const auto& c : contents) acc = tensor(acc, TensorOperator::from_matrix(shift(e, c)));
  return right_mul_group(acc, g);
}

TensorOperator fusion(const StandardTableau& t, const StandardTableau& tp, int n, int m) {
  std::vector<Rational> contents;
  for (int c : content_vector(t)) contents.emplace_back(c);
  return fusion_from(contents, psi_element(t, tp), n, m);
}

TensorOperator rhs_main(const StandardTableau& t, const StandardTableau& tp, int n, int m) {
  return right_mul_group(normal_power(t.size(), n, m), psi_element(t, tp));
}

Outcome verify_main_theorem(const StandardTableau& t, const StandardTableau& tp, int n, int m) {
  return compare_tensors(fusion(t, tp, n, m), rhs_main(t, tp, n, m));
}

Outcome classical_capelli(int n, int m, int k) {
  if (k < 1 || k > n || m < n)
    throw std::invalid_argument("classical Capelli identity requires 1 <= k <= n <= m (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
  Ambient amb = make_ambient(n, m);
  NCMatrix e = e_matrix(n, m);
  const auto perms = all_permutations(k);

  // Increasing k-subsets of 1..limit.
  auto subsets = [k](int limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    for (int p = 0; p < k; ++p) pick[p] = p + 1;
    if (k > limit) return out;
    while (true) {
      out.push_back(pick);
      int p = k - 1;
      while (p >= 0 && pick[p] == limit - (k - 1 - p)) --p;
      if (p < 0) return out;
      ++pick[p];
      for (int q = p + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
  };

  WeylOperator row_det_side(amb);
  for (const auto& rows : subsets(n)) {
    for (const auto& s : perms) {
      WeylOperator prod = WeylOperator::constant(amb, s.sign());
      for (int a = 1; a <= k; ++a) {
        WeylOperator entry = e(rows[a - 1], rows[s(a) - 1]);
        if (s(a) == a) entry += WeylOperator::constant(amb, a - 1);
        prod = prod * entry;
      }
      row_det_side += prod;
    }
  }

  WeylOperator det_side(amb);
  for (const auto& rows : subsets(n)) {
    for (const auto& cols : subsets(m)) {
      WeylOperator det_x(amb), det_d(amb);
      for (const auto& s : perms) {
        WeylOperator px = WeylOperator::constant(amb, s.sign());
        WeylOperator pd = WeylOperator::constant(amb, s.sign());
        for (int a = 1; a <= k; ++a) {
          px = px * x_op(rows[a - 1], cols[s(a) - 1], amb);
          pd = pd * d_op(rows[s(a) - 1], cols[a - 1], amb);
        }
        det_x += px;
        det_d += pd;
      }
      det_side += det_x * det_d;
    }
  }
  if (Outcome o = compare_operators(row_det_side, det_side, "row-det vs det(x)det(d), k=" + std::to_string(k)); !o)
    return o;

  std::vector<Rational> shifts;
  for (int p = 0; p < k; ++p) shifts.emplace_back(-p);
  GroupAlgebraElement chi = sign_element(k);
  WeylOperator trace_lhs = trace(fusion_from(shifts, chi, n, m));
  WeylOperator trace_rhs = trace(right_mul_group(normal_power(k, n, m), chi));
  if (Outcome o = compare_operators(trace_lhs, trace_rhs, "trace form with chi^(1^k)"); !o) return o;
  return compare_operators(trace_lhs, Rational(static_cast<long>(factorial(k))) * row_det_side,
                           "trace form vs k! row-det");
}

Outcome trace_identity(const Partition& mu, int n, int m) {
  const auto tableaux = standard_tableaux(mu);
  WeylOperator first = trace(fusion(tableaux.front(), tableaux.front(), n, m));
  for (std::size_t a = 1; a < tableaux.size(); ++a) {
    WeylOperator other = trace(fusion(tableaux[a], tableaux[a], n, m));
    if (!(other == first))
      return compare_operators(first, other,
                               "tr E_T differs between " + tableaux.front().to_string() + " and " + tableaux[a].to_string());
  }
  WeylOperator char_form = trace(right_mul_group(normal_power(mu.size(), n, m), character_element(mu)));
  char_form *= ratio(1, static_cast<long>(dimension(mu)));
  return compare_operators(first, char_form, "tr E_T vs (1/dim) tr X^k D'^k chi");
}

Outcome verify_central(const WeylOperator& a, int n, int m) {
  NCMatrix e = e_matrix(n, m);
  if (!(a.ambient() == e.ambient())) throw std::invalid_argument("verify_central: ambient mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      WeylOperator c = commutator(a, e(i, j));
      if (!c.is_zero())
        return Outcome::fail("[a, E_" + std::to_string(i) + std::to_string(j) + "] = " + c.to_string());
    }
  return Outcome::pass();
}

WeylOperator quantum_immanant(const Partition& mu, int n, int m) {
  const auto tableaux = standard_tableaux(mu);
  WeylOperator s = trace(fusion(tableaux.front(), tableaux.front(), n, m));
  Rational scale = ratio(static_cast<long>(dimension(mu)), static_cast<long>(factorial(mu.size())));
  return scale * s;
}

WeylOperator immanant_from_character(const Partition& mu, int n, int m) {
  WeylOperator s = trace(right_mul_group(normal_power(mu.size(), n, m), character_element(mu)));
  return ratio(1, static_cast<long>(factorial(mu.size()))) * s;
}

Outcome ordered_sum_theorem(const Partition& mu, int n, int m) {
  const int k = mu.size();
  NCMatrix e = e_matrix(n, m);
  const Ambient& amb = e.ambient();
  const SeminormalRep& rep = cached_rep(mu);
  const auto table = all_rep_matrices(rep);
  const auto& basis = rep.basis();

  auto ordered_sum = [&](bool decreasing) {
    WeylOperator total(amb);
    for_each_tuple(k, n, [&](const std::vector<int>& idx) {
      for (int p = 1; p < k; ++p) {
        if (decreasing ? idx[p - 1] < idx[p] : idx[p - 1] > idx[p]) return;
      }
      std::map<int, int> multiplicity;
      for (int i : idx) ++multiplicity[i];
      std::uint64_t stabilizer = 1;
      for (const auto& [i, mult] : multiplicity) stabilizer *= factorial(mult);
      WeylOperator inner(amb);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        auto contents = content_vector(basis[b]);
        for (const auto& [s, r] : table) {
          const Rational& psi = r(b, b);
          if (psi == 0) continue;
          WeylOperator prod = WeylOperator::constant(amb, psi);
          for (int p = 1; p <= k; ++p) {
            int i = idx[p - 1];
            int j = idx[s(p) - 1];
            WeylOperator factor = e(i, j);
            if (i == j) factor -= WeylOperator::constant(amb, contents[p - 1]);
            prod = prod * factor;
          }
          inner += prod;
        }
      }
      total += ratio(1, static_cast<long>(stabilizer)) * inner;
    });
    return total;
  };

  WeylOperator target = quantum_immanant(mu, n, m);
  if (Outcome o = compare_operators(ordered_sum(true), target, "decreasing ordered sum vs quantum immanant"); !o) return o;
  return compare_operators(ordered_sum(false), target, "increasing ordered sum vs quantum immanant");
}

Outcome projector_fusion(const StandardTableau& t1, const StandardTableau& t2, const StandardTableau& t3,
                         const StandardTableau& t4, int n, int m) {
  if (t1.shape() != t2.shape() || t2.shape() != t3.shape() || t3.shape() != t4.shape())
    throw std::invalid_argument("projector_fusion: tableaux of different shapes");
  TensorOperator lhs = left_mul_group(projector(t1, t2), fusion(t3, t4, n, m));
  TensorOperator rhs = t2 == t3 ? fusion(t1, t4, n, m) : TensorOperator(t1.size(), n, n, make_ambient(n, m));
  return compare_tensors(lhs, rhs);
}

WeylOperator symbol_trace_polynomial(const Partition& mu, int n, int m) {
  Ambient amb = make_ambient(n, m);
  const int k = mu.size();
  // g_ij as a commutative symbol: sum_a x_ia xi_ja, stored as the monomial x_ia d_ja.
  auto symbol_product = [&](const WeylOperator& a, const WeylOperator& b) {
    WeylOperator out(amb);
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) {
        WeylMonomial mono;
        for (int v = 0; v < amb.variables(); ++v) {
          mono.x[v] = static_cast<std::uint8_t>(ma.x[v] + mb.x[v]);
          mono.d[v] = static_cast<std::uint8_t>(ma.d[v] + mb.d[v]);
        }
        out.add_term(mono, ca * cb);
      }
    return out;
  };
  auto g = [&](int i, int j) {
    WeylOperator out(amb);
    for (int a = 1; a <= m; ++a) {
      WeylMonomial mono;
      mono.x[amb.slot({i, a})] = 1;
      mono.d[amb.slot({j, a})] = 1;
      out.add_term(mono, 1);
    }
    return out;
  };
  WeylOperator total(amb);
  for (const auto& s : all_permutations(k)) {
    Rational chi = character(mu, s);
    if (chi == 0) continue;
    Permutation inv = s.inverse();
    for_each_tuple(k, n, [&](const std::vector<int>& idx) {
      WeylOperator prod = WeylOperator::constant(amb, chi);
      for (int p = 1; p <= k; ++p) prod = symbol_product(prod, g(idx[p - 1], idx[inv(p) - 1]));
      total += prod;
    });
  }
  return ratio(1, static_cast<long>(factorial(k))) * total;
}

IndependenceReport independence_check(int max_k, int n, int m) {
  IndependenceReport report;
  Ambient amb = make_ambient(n, m);
  std::vector<WeylOperator> immanants;
  for (int k = 0; k <= max_k; ++k) {
    for (const auto& mu : enumerate_partitions(k)) {
      WeylOperator s = quantum_immanant(mu, n, m);
      if (mu.length() > n) {
        (s.is_zero() ? report.vanishing : report.nonvanishing).push_back(mu);
        continue;
      }
      report.shapes.push_back(mu);
      immanants.push_back(std::move(s));
    }
  }

  std::map<WeylMonomial, std::size_t> column;
  for (const auto& s : immanants)
    for (const auto& [mono, c] : s.terms()) column.try_emplace(mono, column.size());
  RationalMatrix coeffs(immanants.size(), column.size());
  for (std::size_t r = 0; r < immanants.size(); ++r)
    for (const auto& [mono, c] : immanants[r].terms()) coeffs(r, column.at(mono)) = c;
  report.rank = rank(coeffs);
  if (report.rank != immanants.size()) {
    report.outcome = Outcome::fail("rank " + std::to_string(report.rank) + " < " + std::to_string(immanants.size()) +
                                   " immanants");
    return report;
  }

  // Triangular sample points: x_ia = 0 for a < i and xi_ja = 0 for a > j make
  // G = X Xi^T upper triangular with eigenvalues x_ii xi_ii.
  std::mt19937 rng(20240607u);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (std::size_t r = 0; r < report.shapes.size(); ++r) {
    const Partition& mu = report.shapes[r];
    const int k = mu.size();
    WeylOperator top = immanants[r].bidegree_part(k, k);
    WeylOperator symbol = symbol_trace_polynomial(mu, n, m);
    if (!(top == symbol)) {
      report.outcome = Outcome::fail("top term of S_(" + mu.to_string() + ") differs from tr G^k chi / k!: top = " +
                                     top.to_string() + " ; symbol = " + symbol.to_string());
      return report;
    }
    MultiPolynomial schur = ordinary_schur(mu, n);
    for (int sample = 0; sample < 4; ++sample) {
      std::vector<Rational> x(amb.variables()), xi(amb.variables());
      for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= m; ++a) {
          if (a >= i) x[amb.slot({i, a})] = dist(rng);
          if (a <= i) xi[amb.slot({i, a})] = dist(rng);
        }
      std::vector<Rational> eigen(n);
      for (int i = 1; i <= n; ++i) eigen[i - 1] = i <= m ? x[amb.slot({i, i})] * xi[amb.slot({i, i})] : Rational(0);
      Rational lhs = evaluate_symbol(top, x, xi);
      Rational rhs = schur.evaluate(eigen);
      if (lhs != rhs) {
        report.outcome = Outcome::fail("top term of S_(" + mu.to_string() + ") evaluates to " + to_string(lhs) +
                                       " but s_mu(eigenvalues) = " + to_string(rhs));
        return report;
      }
    }
  }
  report.outcome = Outcome::pass();
  return report;
}

}  // namespace capelli

#include <doctest.h>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "capelli/gln.hpp"
#include "capelli/young_reps.hpp"

using namespace capelli;

namespace {

const Ambient k11{1, 1};
const Ambient k22{2, 2};

WeylOperator x(int i, int a, Ambient amb) { return generator(Generator::Kind::x, {i, a}, amb); }
WeylOperator d(int i, int a, Ambient amb) { return generator(Generator::Kind::d, {i, a}, amb); }
WeylOperator c(Ambient amb, const Rational& v) { return WeylOperator::constant(amb, v); }

GroupAlgebraElement tr(int a, int b, int k) { return GroupAlgebraElement::basis(Permutation::transposition(a, b, k)); }

// Commutative product of normal-ordered monomials (exponents add).
WeylOperator commuting_product(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator out(a.ambient());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      WeylMonomial mono;
      for (int v = 0; v < kMaxVariables; ++v) {
        mono.x[v] = static_cast<std::uint8_t>(ma.x[v] + mb.x[v]);
        mono.d[v] = static_cast<std::uint8_t>(ma.d[v] + mb.d[v]);
      }
      out.add_term(mono, ca * cb);
    }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void each_word(int len, int n, const std::function<void(const EWord&)>& f) {
  std::vector<int> t(2 * len, 1);
  while (true) {
    EWord w;
    for (int p = 0; p < len; ++p) w.emplace_back(t[2 * p], t[2 * p + 1]);
    f(w);
    int p = 2 * len - 1;
    while (p >= 0 && t[p] == n) t[p--] = 1;
    if (p < 0) return;
    ++t[p];
  }
}

}  // namespace

TEST_CASE("e_matrix") {
  NCMatrix e1 = e_matrix(1, 1);
  CHECK(e1(1, 1) == x(1, 1, k11) * d(1, 1, k11));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      NCMatrix e = e_matrix(n, m);
      CHECK(matrix_product(x_matrix(n, m), d_transpose(n, m)) == e);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) {
              WeylOperator expected(e.ambient());
              if (j == p) expected += e(i, q);
              if (q == i) expected -= e(p, j);
              CHECK(commutator(e(i, j), e(p, q)) == expected);
            }
    }
}

TEST_CASE("shift") {
  NCMatrix e = e_matrix(2, 2);
  CHECK(shift(e, 0) == e);
  CHECK(shift(e_matrix(1, 1), 1)(1, 1) == x(1, 1, k11) * d(1, 1, k11) - c(k11, 1));
  CHECK(shift(shift(e, 2), ratio(-1, 3)) == shift(e, ratio(5, 3)));
  CHECK(shift(e, 3)(1, 2) == e(1, 2));
}

TEST_CASE("tensor") {
  WeylOperator a = x(1, 1, k11), b = d(1, 1, k11);
  NCMatrix ma(1, 1, k11), mb(1, 1, k11);
  ma(1, 1) = a;
  mb(1, 1) = b;
  auto t = tensor(TensorOperator::from_matrix(ma), TensorOperator::from_matrix(mb));
  CHECK(t.at({1, 1, 1, 1}) == a * b);

  NCMatrix e = e_matrix(2, 2);
  auto ee = tensor(TensorOperator::from_matrix(e), TensorOperator::from_matrix(e));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) CHECK(ee.at({i, j, k, l}) == e(i, j) * e(k, l));

  auto one = TensorOperator::from_matrix(e);
  auto two = TensorOperator::from_matrix(shift(e, 1));
  CHECK(tensor(tensor(one, two), one) == tensor(one, tensor(two, one)));
  CHECK(tensor_power(e, 2) == ee);
  CHECK_THROWS_AS(one.add_entry({3, 1}, e(1, 1)), std::out_of_range);
}

TEST_CASE("group action on tensor slots") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& s : all_permutations(k))
      for (const auto& t : all_permutations(k))
        CHECK(matmul(perm_matrix(s, 2, k22), perm_matrix(t, 2, k22)) == perm_matrix(s * t, 2, k22));

  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m) {
        auto xk = tensor_power(x_matrix(n, m), k);
        auto dk = tensor_power(d_transpose(n, m), k);
        Ambient amb{n, m};
        for (const auto& s : all_permutations(k)) {
          auto g = GroupAlgebraElement::basis(s);
          CHECK(left_mul_group(g, xk) == right_mul_group(xk, g));
          CHECK(left_mul_group(g, dk) == right_mul_group(dk, g));
          CHECK(right_mul_group(xk, g) == matmul(xk, perm_matrix(s, m, amb)));
          CHECK(left_mul_group(g, xk) == matmul(perm_matrix(s, n, amb), xk));
        }
      }

  auto e2 = tensor_power(e_matrix(2, 2), 2);
  CHECK(right_mul_group(e2, GroupAlgebraElement::identity(2)) == e2);
  auto e1 = tensor_power(e_matrix(1, 1), 2);
  CHECK(right_mul_group(e1, tr(1, 2, 2)) == e1);
}

TEST_CASE("trace") {
  CHECK(trace(TensorOperator::from_matrix(e_matrix(1, 1))) == x(1, 1, k11) * d(1, 1, k11));
  Ambient k21{2, 1};
  CHECK(trace(TensorOperator::from_matrix(e_matrix(2, 1))) == x(1, 1, k21) * d(1, 1, k21) + x(2, 1, k21) * d(2, 1, k21));
  NCMatrix e = e_matrix(2, 2);
  WeylOperator direct(k22);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) direct += e(i, i) * e(j, j);
  CHECK(trace(tensor_power(e, 2)) == direct);
  CHECK_THROWS_AS(trace(TensorOperator::from_matrix(x_matrix(2, 1))), std::invalid_argument);
}

TEST_CASE("special symmetrization") {
  NCMatrix e = e_matrix(2, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(special_symmetrization({{i, j}}, 2, 2) == e(i, j));

  WeylOperator xx = x(1, 1, k11), dd = d(1, 1, k11);
  CHECK(special_symmetrization({{1, 1}, {1, 1}}, 1, 1) == xx * xx * dd * dd);

  EWord w{{1, 2}, {2, 1}, {2, 2}};
  CHECK(special_symmetrization(w, 2, 2) == special_symmetrization({{2, 2}, {1, 2}, {2, 1}}, 2, 2));
  CHECK(special_symmetrization(w, 2, 2) == special_symmetrization({{2, 1}, {2, 2}, {1, 2}}, 2, 2));
}

TEST_CASE("olshanski expansion") {
  NCMatrix e = e_matrix(2, 2);
  CHECK(olshanski_expand({{1, 2}}, 2, 2) == e(1, 2));
  each_word(2, 2, [&](const EWord& w) {
    auto [i, j] = w[0];
    auto [p, q] = w[1];
    WeylOperator expected = special_symmetrization(w, 2, 2);
    if (j == p) expected += special_symmetrization({{i, q}}, 2, 2);
    CHECK(olshanski_expand(w, 2, 2) == expected);
  });
  for (int len = 0; len <= 3; ++len)
    each_word(len, 2, [&](const EWord& w) { CHECK(olshanski_expand(w, 2, 2) == e_word_product(w, 2, 2)); });

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> idx(1, 2);
  for (int trial = 0; trial < 20; ++trial) {
    EWord w;
    for (int p = 0; p < 4; ++p) w.emplace_back(idx(rng), idx(rng));
    CHECK(olshanski_expand(w, 2, 2) == e_word_product(w, 2, 2));
  }
}

TEST_CASE("fusion matrices") {
  NCMatrix e = e_matrix(2, 2);
  auto t1 = row_tableau(Partition({1}));
  CHECK(fusion(t1, t1, 2, 2) == TensorOperator::from_matrix(e));
  CHECK(rhs_main(t1, t1, 2, 2) == TensorOperator::from_matrix(e));

  auto t2 = row_tableau(Partition({2}));
  auto lhs2 = right_mul_group(tensor(TensorOperator::from_matrix(e), TensorOperator::from_matrix(shift(e, 1))),
                              GroupAlgebraElement::identity(2) + tr(1, 2, 2));
  CHECK(fusion(t2, t2, 2, 2) == lhs2);

  auto t11 = row_tableau(Partition({1, 1}));
  auto lhs11 = right_mul_group(tensor(TensorOperator::from_matrix(e), TensorOperator::from_matrix(shift(e, -1))),
                               GroupAlgebraElement::identity(2) - tr(1, 2, 2));
  CHECK(fusion(t11, t11, 2, 2) == lhs11);

  // n = m = 1: both sides are 2 x^2 d^2 for the shape (2).
  WeylOperator xx = x(1, 1, k11), dd = d(1, 1, k11);
  CHECK(rhs_main(t2, t2, 1, 1).at({1, 1, 1, 1}) == Rational(2) * xx * xx * dd * dd);
  CHECK(fusion(t2, t2, 1, 1).at({1, 1, 1, 1}) == Rational(2) * xx * xx * dd * dd);

  // Right-hand side entries are normal ordered of bidegree (k, k).
  auto t21 = row_tableau(Partition({2, 1}));
  auto rhs21 = rhs_main(t21, t21, 2, 2);
  for (const auto& [idx, op] : rhs21.entries()) CHECK(op.bidegree_part(3, 3) == op);
}

TEST_CASE("main theorem") {
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto t1 = row_tableau(Partition({1}));
      CHECK(verify_main_theorem(t1, t1, n, m).passed);
    }
  for (const auto& mu : {Partition({2}), Partition({1, 1})}) {
    auto t = row_tableau(mu);
    CHECK(verify_main_theorem(t, t, 2, 2).passed);
  }
  auto ts = standard_tableaux(Partition({2, 1}));
  for (const auto& t : ts)
    for (const auto& tp : ts) CHECK(verify_main_theorem(t, tp, 2, 2).passed);

  // Perturbing the second content breaks the identity.
  auto t = row_tableau(Partition({2, 1}));
  std::vector<Rational> contents;
  for (int v : content_vector(t)) contents.emplace_back(v);
  contents[1] += 1;
  Outcome broken = compare_tensors(fusion_from(contents, psi_element(t, t), 2, 2), rhs_main(t, t, 2, 2));
  CHECK_FALSE(broken.passed);
  CHECK(broken.witness.find("multi-index") != std::string::npos);
}

TEST_CASE("classical Capelli identity") {
  NCMatrix e = e_matrix(2, 2);
  auto trace_e = trace(TensorOperator::from_matrix(e));
  WeylOperator euler(k22);
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) euler += x(i, a, k22) * d(i, a, k22);
  CHECK(trace_e == euler);
  CHECK(classical_capelli(2, 2, 1).passed);
  CHECK(classical_capelli(2, 2, 2).passed);
  CHECK(classical_capelli(2, 3, 2).passed);
  CHECK_THROWS_AS(classical_capelli(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(classical_capelli(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(classical_capelli(2, 2, 0), std::invalid_argument);
}

TEST_CASE("trace identity and centrality") {
  CHECK(trace_identity(Partition({1}), 2, 2).passed);
  CHECK(trace_identity(Partition({2}), 2, 2).passed);
  CHECK(trace_identity(Partition({2, 1}), 2, 2).passed);

  // The (1,1) trace equals twice the row-determinant with the +1 shift.
  NCMatrix e = e_matrix(2, 2);
  WeylOperator rowdet = e(1, 1) * (e(2, 2) + c(k22, 1)) - e(1, 2) * e(2, 1);
  auto t11 = row_tableau(Partition({1, 1}));
  CHECK(trace(fusion(t11, t11, 2, 2)) == Rational(2) * rowdet);
  CHECK(quantum_immanant(Partition({1, 1}), 2, 2) == rowdet);

  CHECK(verify_central(e(1, 1) + e(2, 2), 2, 2).passed);
  CHECK(verify_central(quantum_immanant(Partition({2, 1}), 2, 2), 2, 2).passed);
  Outcome root = verify_central(e(1, 2), 2, 2);
  CHECK_FALSE(root.passed);
  CHECK_FALSE(root.witness.empty());
}

TEST_CASE("quantum immanants") {
  WeylOperator first(k22);
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 2; ++a) first += x(i, a, k22) * d(i, a, k22);
  CHECK(quantum_immanant(Partition({1}), 2, 2) == first);
  CHECK(quantum_immanant(Partition(), 2, 2) == c(k22, 1));

  for (int k = 0; k <= 3; ++k)
    for (const auto& mu : enumerate_partitions(k))
      CHECK(quantum_immanant(mu, 2, 2) == immanant_from_character(mu, 2, 2));

  std::string golden = read_file(CAPELLI_GOLDEN_DIR "/immanant_2_n2_m2.txt");
  REQUIRE_FALSE(golden.empty());
  CHECK(dump_operator(quantum_immanant(Partition({2}), 2, 2)) == golden);
  CHECK(parse_operator(golden, k22) == immanant_from_character(Partition({2}), 2, 2));
}

TEST_CASE("ordered sums") {
  CHECK(ordered_sum_theorem(Partition({1}), 2, 2).passed);
  CHECK(ordered_sum_theorem(Partition({1, 1}), 2, 2).passed);
  CHECK(ordered_sum_theorem(Partition({2}), 2, 2).passed);
  CHECK(ordered_sum_theorem(Partition({2, 1}), 2, 2).passed);
}

TEST_CASE("projector fusion") {
  auto t2 = row_tableau(Partition({2}));
  CHECK(projector_fusion(t2, t2, t2, t2, 2, 2).passed);
  auto ts = standard_tableaux(Partition({2, 1}));
  CHECK(projector_fusion(ts[0], ts[1], ts[0], ts[0], 2, 2).passed);
  auto zero = left_mul_group(projector(ts[0], ts[1]), fusion(ts[0], ts[0], 2, 2));
  CHECK(zero.entries().empty());
  CHECK(projector_fusion(ts[0], ts[1], ts[1], ts[0], 2, 2).passed);
  CHECK(left_mul_group(projector(ts[0], ts[1]), fusion(ts[1], ts[0], 2, 2)) == fusion(ts[0], ts[0], 2, 2));
  CHECK_THROWS_AS(projector_fusion(t2, t2, ts[0], ts[0], 2, 2), std::invalid_argument);
}

TEST_CASE("independence and top terms") {
  auto small = independence_check(1, 2, 2);
  CHECK(small.outcome.passed);
  CHECK(small.rank == 2);

  auto full = independence_check(3, 2, 2);
  CHECK(full.outcome.passed);
  CHECK(full.rank == full.shapes.size());
  CHECK(full.shapes.size() == 6);
  REQUIRE(full.vanishing.size() == 1);
  CHECK(full.vanishing[0] == Partition({1, 1, 1}));
  CHECK(full.nonvanishing.empty());

  // Shape (2): (1/2)[(tr G)^2 + tr G^2] with g_ij = sum_a x_ia xi_ja.
  auto g = [](int i, int j) {
    WeylOperator out(k22);
    for (int a = 1; a <= 2; ++a) {
      WeylMonomial mono;
      mono.x[k22.slot({i, a})] = 1;
      mono.d[k22.slot({j, a})] = 1;
      out.add_term(mono, 1);
    }
    return out;
  };
  WeylOperator trg = g(1, 1) + g(2, 2);
  WeylOperator trg2(k22);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) trg2 += commuting_product(g(i, j), g(j, i));
  WeylOperator expected = ratio(1, 2) * (commuting_product(trg, trg) + trg2);
  CHECK(symbol_trace_polynomial(Partition({2}), 2, 2) == expected);
  CHECK(quantum_immanant(Partition({2}), 2, 2).bidegree_part(2, 2) == expected);
}

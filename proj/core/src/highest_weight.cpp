#include "capelli/highest_weight.hpp"

#include <stdexcept>

#include "capelli/gln.hpp"
#include "capelli/shifted_schur.hpp"

namespace capelli {

namespace {

Ambient make_ambient(int n, int m) {
  Ambient a{n, m};
  a.validate();
  return a;
}

void monomials_rec(const Ambient& amb, int slot, int remaining, WeylMonomial& mono, std::vector<WeylOperator>& out) {
  if (slot == amb.variables()) {
    out.push_back(WeylOperator::monomial(amb, mono));
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    mono.x[slot] = static_cast<std::uint8_t>(e);
    monomials_rec(amb, slot + 1, remaining - e, mono, out);
  }
  mono.x[slot] = 0;
}

}  // namespace

WeightVector WeightVector::from_partition(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("weight (" + lambda.to_string() + ") has more than " + std::to_string(n) + " rows");
  WeightVector w;
  w.lambda.assign(n, 0);
  for (int i = 1; i <= lambda.length(); ++i) w.lambda[i - 1] = lambda.row_length(i);
  return w;
}

int WeightVector::size() const {
  int s = 0;
  for (int v : lambda) s += v;
  return s;
}

WeylOperator leading_minor(int t, int n, int m) {
  Ambient amb = make_ambient(n, m);
  if (t < 1 || t > n || t > m) throw std::out_of_range("leading minor size out of range");
  WeylOperator det(amb);
  for (const auto& s : all_permutations(t)) {
    WeylMonomial mono;
    for (int r = 1; r <= t; ++r) mono.x[amb.slot({r, s(r)})] = 1;
    det.add_term(mono, s.sign());
  }
  return det;
}

WeylOperator highest_weight_vector(const WeightVector& lambda, int n, int m) {
  Ambient amb = make_ambient(n, m);
  if (lambda.n() != n) throw std::invalid_argument("weight vector length differs from n");
  for (int t = 1; t <= n; ++t) {
    if (lambda.lambda[t - 1] < 0 || (t > 1 && lambda.lambda[t - 1] > lambda.lambda[t - 2]))
      throw std::invalid_argument("weight is not a partition");
    if (t > m && lambda.lambda[t - 1] > 0)
      throw std::invalid_argument("weight has more than min(n, m) nonzero entries");
  }
  WeylOperator v = WeylOperator::constant(amb, 1);
  for (int t = 1; t <= n && t <= m; ++t) {
    int next = t < n ? lambda.lambda[t] : 0;
    int e = lambda.lambda[t - 1] - next;
    if (e == 0) continue;
    WeylOperator delta = leading_minor(t, n, m);
    for (int p = 0; p < e; ++p) v = v * delta;
  }
  if (Outcome o = verify_highest_weight(v, lambda, n, m); !o)
    throw std::logic_error("highest weight construction failed: " + o.witness);
  return v;
}

Outcome verify_highest_weight(const WeylOperator& v, const WeightVector& lambda, int n, int m) {
  NCMatrix e = e_matrix(n, m);
  for (int i = 1; i <= n; ++i) {
    WeylOperator lhs = apply(e(i, i), v);
    if (!(lhs == Rational(lambda.lambda[i - 1]) * v))
      return Outcome::fail("E_" + std::to_string(i) + std::to_string(i) + " v = " + lhs.to_string());
    for (int j = i + 1; j <= n; ++j) {
      WeylOperator up = apply(e(i, j), v);
      if (!up.is_zero()) return Outcome::fail("E_" + std::to_string(i) + std::to_string(j) + " v = " + up.to_string());
    }
  }
  return Outcome::pass();
}

std::vector<WeylOperator> low_degree_monomials(int max_degree, int n, int m) {
  Ambient amb = make_ambient(n, m);
  std::vector<WeylOperator> out;
  if (max_degree <= 0) return out;
  WeylMonomial mono;
  monomials_rec(amb, 0, max_degree - 1, mono, out);
  return out;
}

EigenvalueReport verify_eigenvalue(const WeylOperator& op, const Partition& mu, const Partition& lambda, int n, int m) {
  EigenvalueReport report;
  WeightVector w = WeightVector::from_partition(lambda, n);
  WeylOperator v = highest_weight_vector(w, n, m);
  report.shifted_value = evaluate_at(shifted_schur(mu, n), lambda);

  WeylOperator image = apply(op, v);
  const auto& [lead, lead_coeff] = *v.terms().begin();
  report.operator_eigenvalue = image.coefficient(lead) / lead_coeff;
  if (!(image == report.operator_eigenvalue * v)) {
    report.outcome = Outcome::fail("v_lambda is not an eigenvector: S v = " + image.to_string());
    return report;
  }

  report.annihilates_low_degree = true;
  for (const auto& mono : low_degree_monomials(mu.size(), n, m)) {
    WeylOperator killed = apply(op, mono);
    if (!killed.is_zero()) {
      report.annihilates_low_degree = false;
      report.outcome = Outcome::fail("does not annihilate " + mono.to_string() + ": image " + killed.to_string());
      return report;
    }
  }

  if (report.operator_eigenvalue != report.shifted_value) {
    report.outcome = Outcome::fail("eigenvalue " + to_string(report.operator_eigenvalue) + " but s*_(" +
                                   mu.to_string() + ")(" + lambda.to_string() + ") = " +
                                   to_string(report.shifted_value));
    return report;
  }
  report.outcome = Outcome::pass();
  return report;
}

EigenvalueReport verify_eigenvalue(const Partition& mu, const Partition& lambda, int n, int m) {
  return verify_eigenvalue(quantum_immanant(mu, n, m), mu, lambda, n, m);
}

}  // namespace capelli

#include "capelli/shifted_schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace capelli {

namespace {

using Grid = std::vector<std::vector<MultiPolynomial>>;

// Leibniz expansion; fine for n <= 4.
MultiPolynomial determinant(const Grid& a, int nvars) {
  const int n = static_cast<int>(a.size());
  MultiPolynomial det(nvars);
  for (const auto& s : all_permutations(n)) {
    MultiPolynomial prod = MultiPolynomial::constant(nvars, s.sign());
    for (int r = 1; r <= n; ++r) prod = prod * a[r - 1][s(r) - 1];
    det += prod;
  }
  return det;
}

std::vector<int> padded(const Partition& mu, int n) {
  if (mu.length() > n)
    throw std::invalid_argument("partition (" + mu.to_string() + ") has more than " + std::to_string(n) + " rows");
  std::vector<int> out(n, 0);
  for (int j = 1; j <= mu.length(); ++j) out[j - 1] = mu.row_length(j);
  return out;
}

MultiPolynomial power(const MultiPolynomial& x, int k) {
  MultiPolynomial out = MultiPolynomial::constant(x.nvars(), 1);
  for (int t = 0; t < k; ++t) out = out * x;
  return out;
}

}  // namespace

MultiPolynomial::MultiPolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative number of variables");
}

MultiPolynomial MultiPolynomial::constant(int nvars, const Rational& c) {
  MultiPolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
  MultiPolynomial p(nvars);
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPolynomial::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int a : e) d += a;
    best = std::max(best, d);
  }
  return best;
}

Rational MultiPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has the wrong length");
  for (int a : e)
    if (a < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPolynomial::check_arity(const MultiPolynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials in different numbers of variables");
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Rational MultiPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has the wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int t = 0; t < e[i]; ++t) term *= point[i];
    total += term;
  }
  return total;
}

MultiPolynomial MultiPolynomial::homogeneous_part(int d) const {
  MultiPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int a : e) deg += a;
    if (deg == d) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPolynomial MultiPolynomial::shift_variables(const std::vector<Rational>& shifts) const {
  if (static_cast<int>(shifts.size()) != nvars_) throw std::invalid_argument("shift vector has the wrong length");
  std::vector<MultiPolynomial> images;
  for (int i = 1; i <= nvars_; ++i) images.push_back(variable(nvars_, i) + constant(nvars_, shifts[i - 1]));
  MultiPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiPolynomial term = constant(nvars_, c);
    for (int i = 0; i < nvars_; ++i) term = term * power(images[i], e[i]);
    out += term;
  }
  return out;
}

MultiPolynomial MultiPolynomial::swap_variables(int i, int j) const {
  if (i < 1 || i > nvars_ || j < 1 || j > nvars_) throw std::out_of_range("variable index out of range");
  MultiPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents swapped = e;
    std::swap(swapped[i - 1], swapped[j - 1]);
    out.terms_.emplace(std::move(swapped), c);
  }
  return out;
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += capelli::to_string(it->second);
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (!vars.empty()) vars += ' ';
      vars += "x" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
    }
    if (!vars.empty()) out += " * " + vars;
  }
  return out;
}

MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
MultiPolynomial operator*(const Rational& c, MultiPolynomial a) { return a *= c; }

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials in different numbers of variables");
  MultiPolynomial out(a.nvars());
  MultiPolynomial::Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPolynomial divide_linear(const MultiPolynomial& p, int i, int j, const Rational& c) {
  const int nv = p.nvars();
  if (i < 1 || i > nv || j < 1 || j > nv || i == j) throw std::out_of_range("divide_linear: bad variable indices");
  // Write p = sum_e a_e x_i^e and divide by (x_i - r) with r = x_j - c (synthetic division).
  std::map<int, MultiPolynomial> coeffs;
  for (const auto& [e, v] : p.terms()) {
    auto rest = e;
    int power_i = rest[i - 1];
    rest[i - 1] = 0;
    coeffs.try_emplace(power_i, nv).first->second.add_term(rest, v);
  }
  if (coeffs.empty()) return MultiPolynomial(nv);
  MultiPolynomial r = MultiPolynomial::variable(nv, j) - MultiPolynomial::constant(nv, c);
  const int top = coeffs.rbegin()->first;
  MultiPolynomial carry(nv);
  MultiPolynomial quotient(nv);
  for (int e = top; e >= 1; --e) {
    auto it = coeffs.find(e);
    MultiPolynomial q = it == coeffs.end() ? carry : it->second + carry;
    for (const auto& [ex, v] : q.terms()) {
      auto shifted = ex;
      shifted[i - 1] = e - 1;
      quotient.add_term(shifted, v);
    }
    carry = r * q;
  }
  auto it0 = coeffs.find(0);
  MultiPolynomial remainder = it0 == coeffs.end() ? carry : it0->second + carry;
  if (!remainder.is_zero())
    throw std::logic_error("divide_linear: nonzero remainder " + remainder.to_string() + " dividing by (x" +
                           std::to_string(i) + " - x" + std::to_string(j) + " + " + to_string(c) + ")");
  return quotient;
}

Rational falling_factorial(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("negative falling factorial length");
  Rational out = 1;
  for (int t = 0; t < k; ++t) out *= x - t;
  return out;
}

MultiPolynomial falling_factorial(const MultiPolynomial& x, int k) {
  if (k < 0) throw std::invalid_argument("negative falling factorial length");
  MultiPolynomial out = MultiPolynomial::constant(x.nvars(), 1);
  for (int t = 0; t < k; ++t) out = out * (x - MultiPolynomial::constant(x.nvars(), t));
  return out;
}

std::vector<int> rho(int n) {
  if (n < 1) throw std::invalid_argument("rho requires n >= 1");
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = n - 1 - i;
  return out;
}

MultiPolynomial shifted_schur(const Partition& mu, int n) {
  const std::vector<int> m = padded(mu, n);
  const std::vector<int> r = rho(n);
  Grid a(n, std::vector<MultiPolynomial>(n, MultiPolynomial(n)));
  for (int i = 1; i <= n; ++i) {
    MultiPolynomial y = MultiPolynomial::variable(n, i) + MultiPolynomial::constant(n, r[i - 1]);
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = falling_factorial(y, m[j - 1] + r[j - 1]);
  }
  MultiPolynomial q = determinant(a, n);
  // The denominator is prod_{i<j} (y_i - y_j) = prod_{i<j} (x_i - x_j + j - i).
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) q = divide_linear(q, i, j, j - i);
  return q;
}

MultiPolynomial ordinary_schur(const Partition& mu, int n) {
  const std::vector<int> m = padded(mu, n);
  const std::vector<int> r = rho(n);
  Grid a(n, std::vector<MultiPolynomial>(n, MultiPolynomial(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = power(MultiPolynomial::variable(n, i), m[j - 1] + r[j - 1]);
  MultiPolynomial q = determinant(a, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) q = divide_linear(q, i, j, 0);
  return q;
}

Rational evaluate_at(const MultiPolynomial& p, const Partition& lambda) {
  std::vector<Rational> point;
  for (int v : padded(lambda, p.nvars())) point.emplace_back(v);
  return p.evaluate(point);
}

std::vector<Partition> partitions_up_to(int max_size, int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k)
    for (const auto& lam : enumerate_partitions(k))
      if (lam.length() <= n) out.push_back(lam);
  return out;
}

Outcome verify_characterization(const Partition& mu, int n) {
  MultiPolynomial s = shifted_schur(mu, n);
  const Rational h(static_cast<long>(hook_product(mu)));
  for (const auto& lam : partitions_up_to(mu.size(), n)) {
    Rational value = evaluate_at(s, lam);
    Rational expected = lam == mu ? h : Rational(0);
    if (value != expected)
      return Outcome::fail("s*_(" + mu.to_string() + ")(" + lam.to_string() + ") = " + to_string(value) +
                           ", expected " + to_string(expected));
  }
  if (s.degree() > mu.size()) return Outcome::fail("degree " + std::to_string(s.degree()) + " exceeds |mu|");
  MultiPolynomial top = s.homogeneous_part(mu.size());
  MultiPolynomial schur = ordinary_schur(mu, n);
  if (!(top == schur))
    return Outcome::fail("top part " + top.to_string() + " differs from s_mu = " + schur.to_string());

  // Shifted symmetry: in y_i = x_i - i the polynomial is symmetric.
  std::vector<Rational> to_y(n), from_y(n);
  for (int i = 1; i <= n; ++i) {
    to_y[i - 1] = i;
    from_y[i - 1] = -i;
  }
  MultiPolynomial in_y = s.shift_variables(to_y);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(in_y.swap_variables(i, j) == in_y))
        return Outcome::fail("not shifted-symmetric under exchanging positions " + std::to_string(i) + " and " +
                             std::to_string(j));
  if (!(in_y.shift_variables(from_y) == s)) return Outcome::fail("affine substitution does not round-trip");
  return Outcome::pass();
}

}  // namespace capelli

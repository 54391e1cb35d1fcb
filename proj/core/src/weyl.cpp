#include "capelli/weyl.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

std::uint8_t add_exponents(int a, int b) {
  int s = a + b;
  if (s > 255) throw std::overflow_error("exponent exceeds 255");
  return static_cast<std::uint8_t>(s);
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Reorders d^left * x^right across the shared variables of (left, right),
// appending each resulting (coefficient, x-loss, d-loss) to the output.
struct ReorderTerm {
  mpz_class coeff;
  std::array<std::uint8_t, kMaxVariables> lost{};
};

void reorder_rec(const std::vector<int>& shared, std::size_t pos, const WeylMonomial& left, const WeylMonomial& right,
                 ReorderTerm& current, std::vector<ReorderTerm>& out) {
  if (pos == shared.size()) {
    out.push_back(current);
    return;
  }
  int v = shared[pos];
  int a = left.d[v];
  int b = right.x[v];
  mpz_class saved = current.coeff;
  mpz_class jfact = 1;
  for (int j = 0; j <= std::min(a, b); ++j) {
    if (j > 0) jfact *= j;
    current.coeff = saved * binomial(a, j) * binomial(b, j) * jfact;
    current.lost[v] = static_cast<std::uint8_t>(j);
    reorder_rec(shared, pos + 1, left, right, current, out);
  }
  current.lost[v] = 0;
  current.coeff = saved;
}

void matchings_rec(int length, std::vector<bool>& used, int start, PairingDiagram& current,
                   std::vector<PairingDiagram>& out) {
  out.push_back(current);
  for (int i = start; i <= length; ++i) {
    if (used[i]) continue;
    for (int j = i + 1; j <= length; ++j) {
      if (used[j]) continue;
      used[i] = used[j] = true;
      current.chains.push_back({i, j});
      matchings_rec(length, used, i + 1, current, out);
      current.chains.pop_back();
      used[i] = used[j] = false;
    }
  }
}

void set_partitions_rec(int next, int length, PairingDiagram& current, std::vector<PairingDiagram>& out) {
  if (next > length) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = 0; c < current.chains.size(); ++c) {
    current.chains[c].push_back(next);
    set_partitions_rec(next + 1, length, current, out);
    current.chains[c].pop_back();
  }
  current.chains.push_back({next});
  set_partitions_rec(next + 1, length, current, out);
  current.chains.pop_back();
}

}  // namespace

void Ambient::validate() const {
  if (n < 1 || m < 1) throw std::invalid_argument("ambient dimensions must be positive");
  if (n * m > kMaxVariables)
    throw std::invalid_argument("ambient " + std::to_string(n) + "x" + std::to_string(m) + " exceeds " +
                                std::to_string(kMaxVariables) + " variables");
}

int Ambient::slot(VarIndex v) const {
  if (v.row < 1 || v.row > n || v.col < 1 || v.col > m)
    throw std::out_of_range("variable [" + std::to_string(v.row) + "," + std::to_string(v.col) + "] outside " +
                            std::to_string(n) + "x" + std::to_string(m));
  return (v.row - 1) * m + (v.col - 1);
}

int WeylMonomial::x_degree() const {
  int s = 0;
  for (auto e : x) s += e;
  return s;
}

int WeylMonomial::d_degree() const {
  int s = 0;
  for (auto e : d) s += e;
  return s;
}

std::string monomial_to_string(const WeylMonomial& mono, const Ambient& ambient) {
  std::string out;
  auto emit = [&](char letter, const std::array<std::uint8_t, kMaxVariables>& exps) {
    for (int s = 0; s < ambient.variables(); ++s) {
      if (!exps[s]) continue;
      VarIndex v = ambient.var(s);
      if (!out.empty()) out += ' ';
      out += letter;
      out += "[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]^" + std::to_string(exps[s]);
    }
  };
  emit('x', mono.x);
  emit('d', mono.d);
  return out.empty() ? "1" : out;
}

WeylOperator::WeylOperator(Ambient ambient) : ambient_(ambient) { ambient_.validate(); }

WeylOperator WeylOperator::constant(Ambient ambient, const Rational& c) {
  return monomial(ambient, WeylMonomial{}, c);
}

WeylOperator WeylOperator::monomial(Ambient ambient, const WeylMonomial& mono, const Rational& c) {
  WeylOperator op(ambient);
  op.add_term(mono, c);
  return op;
}

bool WeylOperator::is_polynomial() const {
  for (const auto& [mono, c] : terms_)
    if (mono.d_degree()) return false;
  return true;
}

int WeylOperator::order() const {
  int o = -1;
  for (const auto& [mono, c] : terms_) o = std::max(o, mono.d_degree());
  return o;
}

int WeylOperator::degree() const {
  int o = -1;
  for (const auto& [mono, c] : terms_) o = std::max(o, mono.x_degree() + mono.d_degree());
  return o;
}

Rational WeylOperator::coefficient(const WeylMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylOperator::add_term(const WeylMonomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylOperator::check_ambient(const Ambient& other) const {
  if (!(other == ambient_))
    throw std::invalid_argument("Weyl operator ambient mismatch: " + std::to_string(ambient_.n) + "x" +
                                std::to_string(ambient_.m) + " vs " + std::to_string(other.n) + "x" +
                                std::to_string(other.m));
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& other) {
  check_ambient(other.ambient_);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& other) {
  check_ambient(other.ambient_);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

WeylOperator WeylOperator::bidegree_part(int x_degree, int d_degree) const {
  WeylOperator out(ambient_);
  for (const auto& [mono, c] : terms_)
    if (mono.x_degree() == x_degree && mono.d_degree() == d_degree) out.terms_.emplace_hint(out.terms_.end(), mono, c);
  return out;
}

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out += " + ";
    out += capelli::to_string(c) + "*" + monomial_to_string(mono, ambient_);
    first = false;
  }
  return out;
}

WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
WeylOperator operator*(const Rational& c, WeylOperator a) { return a *= c; }

WeylOperator multiply(const WeylOperator& a, const WeylOperator& b) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("Weyl operator ambient mismatch in multiply");
  const int nv = a.ambient().variables();
  WeylOperator out(a.ambient());
  std::vector<int> shared;
  std::vector<ReorderTerm> reorder;
  for (const auto& [left, ca] : a.terms()) {
    for (const auto& [right, cb] : b.terms()) {
      shared.clear();
      for (int v = 0; v < nv; ++v)
        if (left.d[v] && right.x[v]) shared.push_back(v);
      Rational base = ca * cb;
      reorder.clear();
      ReorderTerm seed{1, {}};
      reorder_rec(shared, 0, left, right, seed, reorder);
      for (const auto& term : reorder) {
        WeylMonomial mono;
        for (int v = 0; v < nv; ++v) {
          mono.x[v] = add_exponents(left.x[v], right.x[v] - term.lost[v]);
          mono.d[v] = add_exponents(left.d[v] - term.lost[v], right.d[v]);
        }
        out.add_term(mono, base * term.coeff);
      }
    }
  }
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return multiply(a, b) - multiply(b, a); }

WeylOperator apply(const WeylOperator& a, const WeylOperator& p) {
  if (!(a.ambient() == p.ambient())) throw std::invalid_argument("Weyl operator ambient mismatch in apply");
  if (!p.is_polynomial()) throw std::invalid_argument("apply: argument is not a polynomial");
  const int nv = a.ambient().variables();
  WeylOperator out(a.ambient());
  for (const auto& [op, ca] : a.terms()) {
    for (const auto& [poly, cp] : p.terms()) {
      mpz_class coeff = 1;
      bool vanishes = false;
      WeylMonomial mono;
      for (int v = 0; v < nv && !vanishes; ++v) {
        int e = poly.x[v];
        int order = op.d[v];
        if (order > e) {
          vanishes = true;
          break;
        }
        for (int t = 0; t < order; ++t) coeff *= e - t;
        mono.x[v] = add_exponents(op.x[v], e - order);
      }
      if (!vanishes) out.add_term(mono, ca * cp * coeff);
    }
  }
  return out;
}

WeylOperator generator(Generator::Kind kind, VarIndex v, Ambient ambient) {
  ambient.validate();
  WeylMonomial mono;
  int s = ambient.slot(v);
  (kind == Generator::Kind::x ? mono.x : mono.d)[s] = 1;
  return WeylOperator::monomial(ambient, mono);
}

Rational pairing(const Generator& a, const Generator& b) {
  return a.kind == Generator::Kind::d && b.kind == Generator::Kind::x && a.var == b.var ? 1 : 0;
}

Rational pairing(const WeylOperator& a, const WeylOperator& b) {
  auto as_generator = [](const WeylOperator& op) {
    if (op.terms().size() != 1 || op.terms().begin()->second != 1)
      throw std::invalid_argument("pairing: operand is not a single generator");
    const WeylMonomial& mono = op.terms().begin()->first;
    if (mono.x_degree() + mono.d_degree() != 1) throw std::invalid_argument("pairing: operand is not a single generator");
    for (int s = 0; s < op.ambient().variables(); ++s) {
      if (mono.x[s]) return Generator{Generator::Kind::x, op.ambient().var(s)};
      if (mono.d[s]) return Generator{Generator::Kind::d, op.ambient().var(s)};
    }
    throw std::logic_error("unreachable");
  };
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("pairing: ambient mismatch");
  return pairing(as_generator(a), as_generator(b));
}

std::vector<PairingDiagram> partial_matchings(int length) {
  std::vector<PairingDiagram> out;
  std::vector<bool> used(length + 1, false);
  PairingDiagram current{length, {}};
  matchings_rec(length, used, 1, current, out);
  return out;
}

std::vector<PairingDiagram> set_partitions(int length) {
  std::vector<PairingDiagram> out;
  PairingDiagram current{length, {}};
  set_partitions_rec(1, length, current, out);
  return out;
}

WeylOperator normal_ordered(std::span<const Generator> word, Ambient ambient) {
  ambient.validate();
  WeylMonomial mono;
  for (const auto& g : word) {
    int s = ambient.slot(g.var);
    auto& exps = g.kind == Generator::Kind::x ? mono.x : mono.d;
    exps[s] = add_exponents(exps[s], 1);
  }
  return WeylOperator::monomial(ambient, mono);
}

WeylOperator fold_multiply(std::span<const Generator> word, Ambient ambient) {
  WeylOperator acc = WeylOperator::constant(ambient, 1);
  for (const auto& g : word) acc = acc * to_operator(g, ambient);
  return acc;
}

WeylOperator wick_expand(std::span<const Generator> word, Ambient ambient) {
  const int k = static_cast<int>(word.size());
  WeylOperator out(ambient);
  for (const auto& diagram : partial_matchings(k)) {
    Rational weight = 1;
    std::vector<bool> paired(k + 1, false);
    for (const auto& chain : diagram.chains) {
      weight *= pairing(word[chain[0] - 1], word[chain[1] - 1]);
      paired[chain[0]] = paired[chain[1]] = true;
    }
    if (weight == 0) continue;
    std::vector<Generator> rest;
    for (int p = 1; p <= k; ++p)
      if (!paired[p]) rest.push_back(word[p - 1]);
    out += weight * normal_ordered(rest, ambient);
  }
  return out;
}

std::string dump_operator(const WeylOperator& op) {
  std::vector<std::string> lines;
  for (const auto& [mono, c] : op.terms())
    lines.push_back(to_string(c) + " " + monomial_to_string(mono, op.ambient()));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

WeylOperator parse_operator(std::string_view text, Ambient ambient) {
  WeylOperator op(ambient);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string coeff_text;
    fields >> coeff_text;
    Rational coeff = parse_rational(coeff_text);
    WeylMonomial mono;
    std::string factor;
    bool saw_factor = false;
    while (fields >> factor) {
      if (factor == "1" && !saw_factor) {
        saw_factor = true;
        continue;
      }
      saw_factor = true;
      int i = 0, alpha = 0, e = 0;
      char letter = 0;
      char tail = 0;
      if (std::sscanf(factor.c_str(), "%c[%d,%d]^%d%c", &letter, &i, &alpha, &e, &tail) != 4 ||
          (letter != 'x' && letter != 'd') || e < 1)
        throw std::invalid_argument("malformed monomial factor \"" + factor + "\"");
      int s = ambient.slot({i, alpha});
      auto& exps = letter == 'x' ? mono.x : mono.d;
      exps[s] = add_exponents(exps[s], e);
    }
    if (!saw_factor) throw std::invalid_argument("missing monomial in line \"" + line + "\"");
    op.add_term(mono, coeff);
  }
  return op;
}

}  // namespace capelli

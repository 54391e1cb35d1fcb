#include "capelli/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace capelli {

namespace {

// All permutations of 1..k that map each block of `blocks` onto itself.
std::vector<Permutation> block_stabilizer(int k, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(k)};
  for (const auto& block : blocks) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> next;
    std::vector<int> arrangement = sorted;
    do {
      std::vector<int> im = Permutation::identity(k).images();
      for (std::size_t i = 0; i < sorted.size(); ++i) im[sorted[i] - 1] = arrangement[i];
      Permutation local(std::move(im));
      for (const auto& s : out) next.push_back(compose(local, s));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace

GroupAlgebraElement GroupAlgebraElement::identity(int k) { return basis(Permutation::identity(k)); }

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& s, const Rational& coeff) {
  GroupAlgebraElement a(s.degree());
  a.add_term(s, coeff);
  return a;
}

Rational GroupAlgebraElement::coefficient(const Permutation& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::check_degree(int k) const {
  if (k != k_) throw std::invalid_argument("group algebra degree mismatch: " + std::to_string(k_) + " vs " + std::to_string(k));
}

void GroupAlgebraElement::add_term(const Permutation& s, const Rational& coeff) {
  check_degree(s.degree());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  check_degree(other.k_);
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  check_degree(other.k_);
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= c;
  return *this;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += capelli::to_string(mag) + "*" + s.to_string();
    first = false;
  }
  return out;
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) { return a *= c; }

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("group algebra degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  GroupAlgebraElement out(a.degree());
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) out.add_term(compose(s, t), cs * ct);
  return out;
}

GroupAlgebraElement involution(const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.degree());
  for (const auto& [s, c] : a.terms()) out.add_term(s.inverse(), c);
  return out;
}

GroupAlgebraElement jucys_murphy(int i, int k) {
  if (i < 1 || i > k) throw std::out_of_range("Jucys-Murphy index " + std::to_string(i) + " outside 1.." + std::to_string(k));
  GroupAlgebraElement x(k);
  for (int j = 1; j < i; ++j) x.add_term(Permutation::transposition(j, i, k), 1);
  return x;
}

GroupAlgebraElement sigma_p(int p, int k) {
  if (p < 1 || p > k) throw std::out_of_range("sigma_p index " + std::to_string(p) + " outside 1.." + std::to_string(k));
  GroupAlgebraElement sum(k);
  for (int j = 2; j <= p; ++j)
    for (int i = 1; i < j; ++i) sum.add_term(Permutation::transposition(i, j, k), 1);
  return sum;
}

GroupAlgebraElement row_symmetrizer(const StandardTableau& t) {
  GroupAlgebraElement p(t.size());
  for (const auto& s : block_stabilizer(t.size(), t.rows())) p.add_term(s, 1);
  return p;
}

GroupAlgebraElement column_antisymmetrizer(const StandardTableau& t) {
  std::vector<std::vector<int>> columns;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (columns.size() <= c) columns.emplace_back();
      columns[c].push_back(row[c]);
    }
  }
  GroupAlgebraElement q(t.size());
  for (const auto& s : block_stabilizer(t.size(), columns)) q.add_term(s, s.sign());
  return q;
}

}  // namespace capelli

#include "capelli/young_reps.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

StandardTableau swap_entries(const StandardTableau& t, int a, int b) {
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& e : row) {
      if (e == a)
        e = b;
      else if (e == b)
        e = a;
    }
  return StandardTableau(std::move(rows));
}

void require_same_shape(const StandardTableau& t, const StandardTableau& tp) {
  if (t.shape() != tp.shape())
    throw std::invalid_argument("tableaux " + t.to_string() + " and " + tp.to_string() + " have different shapes");
}

}  // namespace

std::size_t SeminormalRep::index_of(const StandardTableau& t) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == t) return i;
  throw std::invalid_argument("tableau " + t.to_string() + " is not of shape (" + shape_.to_string() + ")");
}

SeminormalRep build_rep(const Partition& mu) {
  std::vector<StandardTableau> basis = standard_tableaux(mu);
  const std::size_t dim = basis.size();
  std::map<StandardTableau, std::size_t> position;
  for (std::size_t a = 0; a < dim; ++a) position.emplace(basis[a], a);

  std::vector<RationalMatrix> generators;
  for (int i = 1; i < mu.size(); ++i) {
    RationalMatrix r(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const StandardTableau& t = basis[a];
      Box lo = t.box_of(i);
      Box hi = t.box_of(i + 1);
      if (lo.row == hi.row) {
        r(a, a) = 1;
      } else if (lo.col == hi.col) {
        r(a, a) = -1;
      } else {
        int d = content(hi) - content(lo);
        std::size_t b = position.at(swap_entries(t, i, i + 1));
        r(a, a) = ratio(1, d);
        if (d < 0) {
          r(b, a) = 1;
        } else {
          r(b, a) = ratio(d * d - 1, d * d);
        }
      }
    }
    generators.push_back(std::move(r));
  }
  return SeminormalRep(mu, std::move(basis), std::move(generators));
}

const SeminormalRep& cached_rep(const Partition& mu) {
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<SeminormalRep>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[mu];
  if (!slot) slot = std::make_unique<SeminormalRep>(build_rep(mu));
  return *slot;
}

RationalMatrix rep_matrix(const SeminormalRep& rep, const Permutation& s) {
  if (s.degree() != rep.degree())
    throw std::invalid_argument("permutation of degree " + std::to_string(s.degree()) +
                                " applied to a representation of S(" + std::to_string(rep.degree()) + ")");
  RationalMatrix m = RationalMatrix::identity(rep.dim());
  for (int i : reduced_word(s)) m = m * rep.generator(i);
  return m;
}

std::map<Permutation, RationalMatrix> all_rep_matrices(const SeminormalRep& rep) {
  const int k = rep.degree();
  std::map<Permutation, RationalMatrix> out;
  std::deque<Permutation> queue;
  Permutation e = Permutation::identity(k);
  out.emplace(e, RationalMatrix::identity(rep.dim()));
  queue.push_back(e);
  while (!queue.empty()) {
    Permutation s = queue.front();
    queue.pop_front();
    for (int i = 1; i < k; ++i) {
      Permutation next = compose(s, Permutation::transposition(i, i + 1, k));
      if (out.count(next)) continue;
      out.emplace(next, out.at(s) * rep.generator(i));
      queue.push_back(next);
    }
  }
  return out;
}

RationalMatrix apply_element(const SeminormalRep& rep, const GroupAlgebraElement& a) {
  if (a.degree() != rep.degree())
    throw std::invalid_argument("element of degree " + std::to_string(a.degree()) +
                                " applied to a representation of S(" + std::to_string(rep.degree()) + ")");
  RationalMatrix out(rep.dim(), rep.dim());
  if (a.terms().size() * 4 > factorial(rep.degree())) {
    auto table = all_rep_matrices(rep);
    for (const auto& [s, c] : a.terms()) out += c * table.at(s);
  } else {
    for (const auto& [s, c] : a.terms()) out += c * rep_matrix(rep, s);
  }
  return out;
}

Rational character(const Partition& mu, const Permutation& s) {
  return rep_matrix(cached_rep(mu), s).trace();
}

GroupAlgebraElement character_element(const Partition& mu) {
  GroupAlgebraElement chi(mu.size());
  for (const auto& [s, m] : all_rep_matrices(cached_rep(mu))) chi.add_term(s, m.trace());
  return chi;
}

GroupAlgebraElement psi_element(const StandardTableau& t, const StandardTableau& tp) {
  require_same_shape(t, tp);
  const SeminormalRep& rep = cached_rep(t.shape());
  std::size_t col = rep.index_of(t);
  std::size_t row = rep.index_of(tp);
  GroupAlgebraElement psi(t.size());
  for (const auto& [s, m] : all_rep_matrices(rep)) psi.add_term(s.inverse(), m(row, col));
  return psi;
}

GroupAlgebraElement projector(const StandardTableau& t, const StandardTableau& tp) {
  Rational scale = ratio(static_cast<long>(dimension(t.shape())), static_cast<long>(factorial(t.size())));
  return scale * psi_element(t, tp);
}

Outcome verify_young_symmetrizer(const Partition& mu) {
  StandardTableau t0 = row_tableau(mu);
  GroupAlgebraElement p = row_symmetrizer(t0);
  GroupAlgebraElement q = column_antisymmetrizer(t0);
  Rational scale = ratio(1, static_cast<long>(mu.factorial_product()));
  GroupAlgebraElement rhs = scale * (p * q * p);
  GroupAlgebraElement lhs = psi_element(t0, t0);
  if (lhs == rhs) return Outcome::pass();
  for (const Permutation& s : all_permutations(mu.size())) {
    if (lhs.coefficient(s) != rhs.coefficient(s)) {
      return Outcome::fail("coefficient of " + s.to_string() + ": Psi has " + to_string(lhs.coefficient(s)) +
                           ", PQP/lambda! has " + to_string(rhs.coefficient(s)));
    }
  }
  return Outcome::fail("elements differ");
}

IntertwinerResult intertwiner_step(const SeminormalRep& rep, const std::vector<Rational>& v,
                                   const std::vector<int>& a, int p) {
  const int k = rep.degree();
  if (static_cast<int>(a.size()) != k || v.size() != rep.dim())
    throw std::invalid_argument("vector or eigenvalue list does not match the representation");
  if (p < 1 || p >= k) throw std::invalid_argument("intertwiner index p must satisfy 1 <= p < k");
  int gap = a[p] - a[p - 1];
  if (gap == 0 || gap == 1 || gap == -1) {
    std::ostringstream msg;
    msg << "intertwiner precondition violated: a_" << p + 1 << " - a_" << p << " = " << gap
        << " (must differ from 0 and +-1)";
    throw std::invalid_argument(msg.str());
  }
  for (int i = 1; i <= k; ++i) {
    auto xv = apply_element(rep, jucys_murphy(i, k)).apply(v);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (xv[r] != a[i - 1] * v[r])
        throw std::invalid_argument("input vector is not a joint eigenvector with eigenvalue a_" + std::to_string(i));
  }
  std::vector<Rational> out = rep.generator(p).apply(v);
  Rational shift = ratio(1, gap);
  for (std::size_t r = 0; r < v.size(); ++r) out[r] -= shift * v[r];
  std::vector<int> swapped = a;
  std::swap(swapped[p - 1], swapped[p]);
  return {std::move(out), std::move(swapped)};
}

}  // namespace capelli

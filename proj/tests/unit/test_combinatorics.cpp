#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "capelli/combinatorics.hpp"

using namespace capelli;

namespace {

// Brute force: every filling of the diagram by a permutation of 1..k that increases along rows and columns.
int count_fillings(const Partition& mu) {
  const int k = mu.size();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  int count = 0;
  do {
    std::vector<std::vector<int>> rows;
    int pos = 0;
    for (int part : mu.parts()) {
      rows.emplace_back(perm.begin() + pos, perm.begin() + pos + part);
      pos += part;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Brute force: weakly decreasing sequences in {1..k}^len summing to k.
int count_partitions(int k) {
  std::set<std::vector<int>> seen;
  for (int len = 1; len <= k; ++len) {
    std::vector<int> t(len, 1);
    while (true) {
      if (std::accumulate(t.begin(), t.end(), 0) == k) {
        auto s = t;
        std::sort(s.rbegin(), s.rend());
        seen.insert(s);
      }
      int p = len - 1;
      while (p >= 0 && t[p] == k) t[p--] = 1;
      if (p < 0) break;
      ++t[p];
    }
  }
  return static_cast<int>(seen.size());
}

// Direct arm + leg + 1 count over boxes.
std::uint64_t hooks_by_count(const Partition& mu) {
  Partition conj = mu.conjugate();
  std::uint64_t h = 1;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu.row_length(r); ++c) h *= (mu.row_length(r) - c) + (conj.row_length(c) - r) + 1;
  return h;
}

}  // namespace

TEST_CASE("enumerate_partitions") {
  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  auto three = enumerate_partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Partition({3}));
  CHECK(three[1] == Partition({2, 1}));
  CHECK(three[2] == Partition({1, 1, 1}));

  CHECK(enumerate_partitions(4).size() == 5);
  for (int k = 1; k <= 7; ++k) CHECK(static_cast<int>(enumerate_partitions(k).size()) == count_partitions(k));

  auto six = enumerate_partitions(6);
  CHECK(std::is_sorted(six.rbegin(), six.rend()));
}

TEST_CASE("partition validation and text form") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(parse_partition("3,1") == Partition({3, 1}));
  CHECK(parse_partition("") == Partition());
  CHECK(parse_partition("0") == Partition());
  CHECK(Partition({3, 1}).to_string() == "3,1");
  CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({3, 2}).factorial_product() == 12);
}

TEST_CASE("standard_tableaux") {
  auto col = standard_tableaux(Partition({1, 1, 1}));
  REQUIRE(col.size() == 1);
  CHECK(col[0].rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
  CHECK(standard_tableaux(Partition({2, 2})).size() == 2);
  CHECK(standard_tableaux(Partition()).size() == 1);

  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : enumerate_partitions(k)) {
      auto ts = standard_tableaux(mu);
      CHECK(static_cast<int>(ts.size()) == count_fillings(mu));
      std::set<StandardTableau> unique(ts.begin(), ts.end());
      CHECK(unique.size() == ts.size());
      for (std::size_t a = 1; a < ts.size(); ++a) CHECK(content_vector(ts[a - 1]) < content_vector(ts[a]));
    }
}

TEST_CASE("tableau validation and text form") {
  CHECK(parse_tableau("1,2/3").rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(parse_tableau("1,3/2").to_string() == "1,3/2");
  CHECK_THROWS_AS(parse_tableau("2,1/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("1,3/2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("1,2/4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tableau("1/2,3"), std::invalid_argument);
}

TEST_CASE("contents") {
  CHECK(content({1, 1}) == 0);
  CHECK(content({1, 3}) == 2);
  CHECK(content({3, 1}) == -2);
  CHECK(content_vector(row_tableau(Partition({2}))) == std::vector<int>{0, 1});
  CHECK(content_vector(row_tableau(Partition({1, 1}))) == std::vector<int>{0, -1});
  CHECK(content_vector(row_tableau(Partition({2, 1}))) == std::vector<int>{0, 1, -1});
  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : enumerate_partitions(k))
      for (const auto& t : standard_tableaux(mu)) CHECK(content_vector(t)[0] == 0);
}

TEST_CASE("hooks and dimensions") {
  CHECK(hook_product(Partition({1})) == 1);
  CHECK(hook_product(Partition({2, 1})) == 3);
  CHECK(hook_product(Partition({2, 2})) == 12);
  CHECK(dimension(Partition({4})) == 1);
  CHECK(dimension(Partition({2, 1})) == 2);
  CHECK(dimension(Partition({3, 2})) == 5);
  CHECK(hook_product(Partition({3, 2})) == 24);
  for (int k = 1; k <= 6; ++k) {
    std::uint64_t sum = 0;
    for (const auto& mu : enumerate_partitions(k)) {
      CHECK(hook_product(mu) == hooks_by_count(mu));
      CHECK(dimension(mu) * hook_product(mu) == factorial(k));
      sum += dimension(mu) * dimension(mu);
    }
    CHECK(sum == factorial(k));
  }
}

TEST_CASE("row_tableau") {
  CHECK(row_tableau(Partition({2})).rows() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(row_tableau(Partition({2, 1})).rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(row_tableau(Partition({1, 1})).rows() == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("permutations") {
  Permutation s({2, 3, 1});
  CHECK(compose(s, s.inverse()).is_identity());
  CHECK(Permutation::transposition(1, 2, 3).sign() == -1);
  CHECK(Permutation::identity(3).sign() == 1);
  CHECK(compose(Permutation({2, 1, 3}), Permutation({1, 3, 2})) == Permutation({2, 3, 1}));
  CHECK_THROWS_AS(Permutation::transposition(1, 4, 3), std::out_of_range);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK(all_permutations(4).size() == 24);

  for (const auto& p : all_permutations(5)) {
    auto word = reduced_word(p);
    CHECK(static_cast<int>(word.size()) == p.inversions());
    Permutation prod = Permutation::identity(5);
    for (int i : word) prod = prod * Permutation::transposition(i, i + 1, 5);
    CHECK(prod == p);
  }
}

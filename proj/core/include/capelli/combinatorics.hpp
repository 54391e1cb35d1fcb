#pragma once

// Partitions, standard Young tableaux, contents, hooks and permutations.
// All indices visible through the API (rows, columns, tableau entries,
// permutation images) are 1-based.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace capelli {

std::uint64_t factorial(int k);

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row length for 1-based `row`; 0 past the last row.
  int row_length(int row) const;

  Partition conjugate() const;
  /// lambda! = lambda_1! lambda_2! ...
  std::uint64_t factorial_product() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "3,1" -> (3,1). The empty string and "0" parse to the empty partition.
Partition parse_partition(std::string_view text);

struct Box {
  int row = 1;
  int col = 1;
  friend bool operator==(const Box&, const Box&) = default;
};

/// c(row, col) = col - row.
inline int content(Box b) { return b.col - b.row; }

class StandardTableau {
 public:
  /// Rows of entries, top to bottom. Throws std::invalid_argument unless the
  /// filling is a bijection onto 1..k increasing along rows and columns.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  /// Box holding `entry` (1-based).
  Box box_of(int entry) const { return boxes_[entry - 1]; }

  /// "1,2/3"
  std::string to_string() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> boxes_;
};

/// "1,2/3" -> rows {{1,2},{3}}. The empty string parses to the empty tableau.
StandardTableau parse_tableau(std::string_view text);

class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = s(i). Throws std::invalid_argument unless a bijection of 1..k.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);
  /// The transposition (a b) in S(k); a == b gives the identity.
  static Permutation transposition(int a, int b, int k);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  Permutation inverse() const;

  /// "[2,1,3]"
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// (s t)(i) = s(t(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& s, const Permutation& t);
inline Permutation operator*(const Permutation& s, const Permutation& t) { return compose(s, t); }

/// All of S(k) in lexicographic order of image tuples.
std::vector<Permutation> all_permutations(int k);

/// Adjacent-transposition indices i (meaning s_i = (i i+1)) with s = s_{w[0]} s_{w[1]} ...,
/// obtained by bubble-sorting the image tuple. The word is reduced.
std::vector<int> reduced_word(const Permutation& s);

/// All partitions of k, lexicographically decreasing: (k), (k-1,1), ..., (1^k).
std::vector<Partition> enumerate_partitions(int k);

/// All standard tableaux of shape mu, ordered by content vector (lexicographic).
std::vector<StandardTableau> standard_tableaux(const Partition& mu);

/// Entry i-1 is the content of the box holding i.
std::vector<int> content_vector(const StandardTableau& t);

/// Product over boxes of (arm + leg + 1).
std::uint64_t hook_product(const Partition& mu);

/// Rows filled left to right with 1..k.
StandardTableau row_tableau(const Partition& mu);

/// Number of standard tableaux of shape mu.
std::uint64_t dimension(const Partition& mu);

}  // namespace capelli

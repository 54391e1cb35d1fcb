#include "capelli/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    std::string_view token = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (token.empty()) throw std::invalid_argument("empty field in \"" + std::string(text) + "\"");
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw std::invalid_argument("non-digit in \"" + std::string(text) + "\"");
      value = value * 10 + (c - '0');
      if (value > 1000000) throw std::invalid_argument("value too large in \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Grow the tableau one box at a time; `filling[r]` is the current row r.
void tableaux_rec(const Partition& mu, int next, std::vector<std::vector<int>>& filling,
                  std::vector<StandardTableau>& out) {
  if (next > mu.size()) {
    out.emplace_back(filling);
    return;
  }
  for (int r = 0; r < mu.length(); ++r) {
    int len = static_cast<int>(filling[r].size());
    if (len >= mu.parts()[r]) continue;
    if (r > 0 && static_cast<int>(filling[r - 1].size()) <= len) continue;
    filling[r].push_back(next);
    tableaux_rec(mu, next + 1, filling, out);
    filling[r].pop_back();
  }
}

}  // namespace

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const {
  return row >= 1 && row <= length() ? parts_[row - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int c = 1; !parts_.empty() && c <= parts_.front(); ++c) {
    int height = 0;
    for (int p : parts_)
      if (p >= c) ++height;
    cols.push_back(height);
  }
  return Partition(std::move(cols));
}

std::uint64_t Partition::factorial_product() const {
  std::uint64_t f = 1;
  for (int p : parts_) f *= factorial(p);
  return f;
}

std::string Partition::to_string() const { return join(parts_, ','); }

Partition parse_partition(std::string_view text) {
  if (text == "0") return Partition();
  return Partition(parse_int_list(text, ','));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) {
    if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    parts.push_back(static_cast<int>(r.size()));
  }
  shape_ = Partition(parts);
  int k = shape_.size();
  boxes_.assign(k, Box{0, 0});
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int e = rows_[r][c];
      if (e < 1 || e > k || boxes_[e - 1].row != 0)
        throw std::invalid_argument("tableau entries must be a bijection onto 1..k");
      boxes_[e - 1] = Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
      if (c > 0 && rows_[r][c - 1] >= e) throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= e) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    out += join(rows_[r], ',');
  }
  return out;
}

StandardTableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t next = text.find('/', pos);
      std::string_view row = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (row.empty()) throw std::invalid_argument("empty tableau row in \"" + std::string(text) + "\"");
      rows.push_back(parse_int_list(row, ','));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  }
  return StandardTableau(std::move(rows));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v - 1]) throw std::invalid_argument("permutation images must be a bijection of 1..k");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int a, int b, int k) {
  if (a < 1 || b < 1 || a > k || b > k)
    throw std::out_of_range("transposition index out of range 1.." + std::to_string(k));
  Permutation s = identity(k);
  std::swap(s.images_[a - 1], s.images_[b - 1]);
  return s;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

int Permutation::inversions() const {
  int inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::string Permutation::to_string() const { return "[" + join(images_, ',') + "]"; }

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> im(t.degree());
  for (int i = 1; i <= t.degree(); ++i) im[i - 1] = s(t(i));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 1);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& s) {
  // Peel descents from the right: if s(i) > s(i+1) then s = (s s_i) s_i with one fewer inversion.
  std::vector<int> im = s.images();
  std::vector<int> reversed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < im.size(); ++i) {
      if (im[i] > im[i + 1]) {
        std::swap(im[i], im[i + 1]);
        reversed.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<Partition> enumerate_partitions(int k) {
  if (k < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(k, k, prefix, out);
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& mu) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> filling(mu.length());
  tableaux_rec(mu, 1, filling, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return content_vector(a) < content_vector(b);
  });
  return out;
}

std::vector<int> content_vector(const StandardTableau& t) {
  std::vector<int> c(t.size());
  for (int i = 1; i <= t.size(); ++i) c[i - 1] = content(t.box_of(i));
  return c;
}

std::uint64_t hook_product(const Partition& mu) {
  Partition conj = mu.conjugate();
  std::uint64_t h = 1;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu.row_length(r); ++c) {
      int arm = mu.row_length(r) - c;
      int leg = conj.row_length(c) - r;
      h *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  return h;
}

StandardTableau row_tableau(const Partition& mu) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : mu.parts()) {
    std::vector<int> row(p);
    std::iota(row.begin(), row.end(), next);
    next += p;
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

std::uint64_t dimension(const Partition& mu) {
  // dim(mu) = sum over removable corners of dim(mu minus corner).
  if (mu.size() <= 1) return 1;
  std::uint64_t total = 0;
  const auto& p = mu.parts();
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
    std::vector<int> smaller = p;
    if (--smaller[r] == 0) smaller.pop_back();
    total += dimension(Partition(std::move(smaller)));
  }
  return total;
}

}  // namespace capelli

#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/rational.hpp"

namespace ribbon {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3,1,1" or "(3,1,1)"; the empty string is the empty partition.
  static Partition parse(std::string text) {
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](size_t i) const { return parts_[i]; }

  int multiplicity(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

  /// z_pi = prod_i i^{m_i} m_i!
  Rational z() const {
    Rational result(1);
    for (int i = 1; i <= (parts_.empty() ? 0 : parts_.front()); ++i) {
      const int m = multiplicity(i);
      result *= pow(Rational(i), m) * factorial(m);
    }
    return result;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int col = 1; !parts_.empty() && col <= parts_.front(); ++col)
      c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [col](int r) { return r >= col; })));
    return Partition(std::move(c));
  }

  /// pi joined with k parts equal to 1.
  Partition with_ones(int k) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), static_cast<size_t>(k), 1);
    return Partition(std::move(p));
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in increasing lexicographic order (so (1^n) first and (n) last).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Dominance order: lambda >= mu iff every partial sum of lambda is >= that of mu (same size).
inline bool dominates(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  const size_t len = std::max(lambda.parts().size(), mu.parts().size());
  for (size_t i = 0; i < len; ++i) {
    a += i < lambda.parts().size() ? lambda[i] : 0;
    b += i < mu.parts().size() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

/// Young diagram in English convention: row i (1-based) has rows()[i-1] boxes.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(Partition shape) : shape_(std::move(shape)) {}

  const Partition& shape() const { return shape_; }
  int boxes() const { return shape_.size(); }
  int row_count() const { return shape_.length(); }
  int column_count() const { return shape_.empty() ? 0 : shape_[0]; }
  int row_length(int row) const { return shape_[static_cast<size_t>(row - 1)]; }
  int column_length(int column) const {
    return static_cast<int>(std::count_if(shape_.parts().begin(), shape_.parts().end(),
                                          [column](int r) { return r >= column; }));
  }
  bool contains(int row, int column) const {
    return row >= 1 && column >= 1 && row <= row_count() && column <= row_length(row);
  }

 private:
  Partition shape_;
};

}  // namespace ribbon

#pragma once

#include "shiftsym/rational.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shiftsym {

// A non-increasing finite sequence of positive integers. The empty
// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  // Textual form "(4,3,3)"; "()" is the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Arm and leg lengths of the diagonal cells; both strictly decreasing.
struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;
  friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

// Every partition of n, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n);

// Partitions of n whose parts are all >= min_part, lexicographically decreasing.
std::vector<Partition> enumerate_min_part(int n, int min_part);

// p(n); zero for negative n.
Integer count_partitions(int n);

FrobeniusCoords frobenius(const Partition& lambda);

// The signed half-integers {-b_1-1/2, ..., -b_r-1/2, a_r+1/2, ..., a_1+1/2},
// stored doubled (so every entry is odd).
std::vector<int> c_set_doubled(const Partition& lambda);

}  // namespace shiftsym

#include "shiftsym/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace shiftsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const
{
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(std::string_view text)
{
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
    throw std::invalid_argument("partition must be written as (a,b,...)");
  std::vector<int> parts;
  const std::string body = compact.substr(1, compact.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string item = body.substr(pos, comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed partition part '" + item + "'");
    parts.push_back(std::stoi(item));
    pos = comma + 1;
    if (comma + 1 == body.size()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

namespace {

void collect(int remaining, int max_part, int min_part, std::vector<int>& prefix,
             std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= min_part; --part) {
    prefix.push_back(part);
    collect(remaining - part, part, min_part, prefix, out);
    prefix.pop_back();
  }
}

constexpr int kPartitionTableSize = 1024;

// Euler's pentagonal recurrence; built once, read-only afterwards.
const std::vector<Integer>& partition_table()
{
  static const std::vector<Integer> table = [] {
    std::vector<Integer> p(kPartitionTableSize, 0);
    p[0] = 1;
    for (int n = 1; n < kPartitionTableSize; ++n) {
      Integer sum = 0;
      for (int k = 1;; ++k) {
        const int g1 = k * (3 * k - 1) / 2;
        const int g2 = k * (3 * k + 1) / 2;
        if (g1 > n) break;
        const bool plus = (k % 2) == 1;
        if (plus) sum += p[n - g1]; else sum -= p[n - g1];
        if (g2 <= n) {
          if (plus) sum += p[n - g2]; else sum -= p[n - g2];
        }
      }
      p[n] = sum;
    }
    return p;
  }();
  return table;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
  return enumerate_min_part(n, 1);
}

std::vector<Partition> enumerate_min_part(int n, int min_part)
{
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  if (min_part < 1) throw std::invalid_argument("minimal part must be positive");
  std::vector<Partition> out;
  std::vector<int> prefix;
  collect(n, n, min_part, prefix, out);
  return out;
}

Integer count_partitions(int n)
{
  if (n < 0) return 0;
  if (n < kPartitionTableSize) return partition_table()[static_cast<std::size_t>(n)];
  // Plain DP for the rare large request.
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  return p[n];
}

FrobeniusCoords frobenius(const Partition& lambda)
{
  FrobeniusCoords fc;
  // Column lengths give the conjugate partition, needed for the legs.
  for (int i = 0; i < lambda.length() && lambda[i] > i; ++i) {
    int column = 0;
    while (column < lambda.length() && lambda[column] > i) ++column;
    fc.arms.push_back(lambda[i] - i - 1);
    fc.legs.push_back(column - i - 1);
  }
  return fc;
}

std::vector<int> c_set_doubled(const Partition& lambda)
{
  const FrobeniusCoords fc = frobenius(lambda);
  const std::size_t r = fc.arms.size();
  std::vector<int> c;
  c.reserve(2 * r);
  for (std::size_t i = 0; i < r; ++i) c.push_back(-2 * fc.legs[i] - 1);
  for (std::size_t i = r; i-- > 0;) c.push_back(2 * fc.arms[i] + 1);
  return c;
}

}  // namespace shiftsym

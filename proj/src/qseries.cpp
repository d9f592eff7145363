#include "shiftsym/qseries.hpp"

#include "shiftsym/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace shiftsym {

QSeries::QSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, 0)
{
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : QSeries(order)
{
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

QSeries QSeries::constant(const Rational& c, int order)
{
  QSeries s(order);
  s[0] = c;
  return s;
}

QSeries QSeries::truncate(int order) const
{
  if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return QSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool QSeries::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QSeries QSeries::inverse() const
{
  if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  QSeries inv(order_);
  const Rational c0_inv = 1 / coeffs_[0];
  inv[0] = c0_inv;
  for (int n = 1; n <= order_; ++n) {
    Rational s = 0;
    for (int i = 1; i <= n; ++i) s += coeffs_[i] * inv[n - i];
    inv[n] = -s * c0_inv;
  }
  return inv;
}

QSeries& QSeries::operator+=(const QSeries& other)
{
  *this = truncate(std::min(order_, other.order_));
  for (int n = 0; n <= order_; ++n) coeffs_[n] += other[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other)
{
  *this = truncate(std::min(order_, other.order_));
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= other[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c)
{
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
  const int order = std::min(a.order_, b.order_);
  QSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

bool operator==(const QSeries& a, const QSeries& b)
{
  const int order = std::min(a.order_, b.order_);
  for (int n = 0; n <= order; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

std::string QSeries::to_string() const
{
  std::string out;
  for (int n = 0; n <= order_; ++n) {
    const Rational& c = coeffs_[n];
    if (c == 0) continue;
    const Rational mag = abs(c);
    std::string body;
    if (n == 0) body = shiftsym::to_string(mag);
    else {
      body = mag == 1 ? "" : shiftsym::to_string(mag) + "*";
      body += n == 1 ? "q" : "q^" + std::to_string(n);
    }
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
  }
  const std::string tail = "O(q^" + std::to_string(order_ + 1) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

QSeries QSeries::parse(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto big_o = s.rfind("O(q");
  if (big_o == std::string::npos || s.back() != ')')
    throw std::invalid_argument("series must end with O(q^N)");
  const std::string o_body = s.substr(big_o + 3, s.size() - big_o - 4);
  int bound = 1;
  if (!o_body.empty()) {
    if (o_body.front() != '^') throw std::invalid_argument("malformed O-term");
    bound = std::stoi(o_body.substr(1));
  }
  if (bound < 1) throw std::invalid_argument("O-term exponent must be positive");
  QSeries result(bound - 1);
  std::string body = s.substr(0, big_o);
  if (!body.empty() && body.back() == '+') body.pop_back();
  std::size_t pos = 0;
  while (pos < body.size()) {
    bool negative = false;
    if (body[pos] == '+' || body[pos] == '-') {
      negative = body[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < body.size() && body[end] != '+' && body[end] != '-') ++end;
    const std::string term = body.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw std::invalid_argument("empty term in series");
    Rational coeff = 1;
    int power = 0;
    const auto qpos = term.find('q');
    if (qpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string head = term.substr(0, qpos);
      if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("expected '*' before q");
        head.pop_back();
        coeff = parse_rational(head);
      }
      const std::string tail = term.substr(qpos + 1);
      if (tail.empty()) power = 1;
      else if (tail.front() == '^') power = std::stoi(tail.substr(1));
      else throw std::invalid_argument("malformed power of q");
    }
    if (power < 0 || power > result.order()) throw std::invalid_argument("term beyond the truncation order");
    result[power] += negative ? Rational(-coeff) : coeff;
  }
  return result;
}

QSeries partition_gf(int order)
{
  QSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = Rational(count_partitions(n));
  return s;
}

Integer divisor_sigma(int k, int n)
{
  Integer s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    s += p;
  }
  return s;
}

QSeries eisenstein(int k, int order)
{
  int factor = 0;
  switch (k) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: throw std::invalid_argument("Eisenstein series are provided for k = 2, 4, 6");
  }
  QSeries s = QSeries::constant(1, order);
  for (int n = 1; n <= order; ++n) s[n] = Rational(factor * divisor_sigma(k - 1, n));
  return s;
}

QSeries d_series(const QSeries& a)
{
  QSeries r = a;
  for (int n = 0; n <= r.order(); ++n) r[n] *= n;
  return r;
}

QSeries q_bracket(const SSPoly& f, int order)
{
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const SSPoly g = pr(f);
  QSeries numerator(order);
  if (g.is_zero()) return numerator;
  for (int n = 0; n <= order; ++n) {
    Rational total = 0;
    for (const Rational& v : eval_many(g, enumerate_partitions(n))) total += v;
    numerator[n] = total;
  }
  return numerator * partition_gf(order).inverse();
}

}  // namespace shiftsym

#include "shiftsym/ssym.hpp"

#include <algorithm>

namespace shiftsym {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::generator(int k, int twice_exponent)
{
  if (k < 0) throw std::invalid_argument("generator index must be non-negative");
  Monomial m;
  if (k == 0 || twice_exponent == 0) return m;
  if (k != 2 && twice_exponent % 2 != 0)
    throw std::invalid_argument("half-integer exponent is only allowed on Q2");
  m.twice_.assign(static_cast<std::size_t>(k), 0);
  m.twice_[k - 1] = twice_exponent;
  return m;
}

int Monomial::twice_exponent(int k) const
{
  if (k < 1 || k > max_index()) return 0;
  return twice_[k - 1];
}

int Monomial::weight() const
{
  int twice_weight = 0;
  for (int k = 1; k <= max_index(); ++k) twice_weight += k * twice_[k - 1];
  if (twice_weight % 2 != 0) throw std::invalid_argument("monomial has non-integer weight");
  return twice_weight / 2;
}

bool Monomial::is_polynomial() const
{
  return std::all_of(twice_.begin(), twice_.end(), [](int e) { return e >= 0 && e % 2 == 0; });
}

Monomial Monomial::with_twice_exponent(int k, int twice_exponent) const
{
  if (k == 0) return *this;
  if (k != 2 && twice_exponent % 2 != 0)
    throw std::invalid_argument("half-integer exponent is only allowed on Q2");
  Monomial m = *this;
  if (static_cast<int>(m.twice_.size()) < k) m.twice_.resize(static_cast<std::size_t>(k), 0);
  m.twice_[k - 1] = twice_exponent;
  m.trim();
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const
{
  Monomial m;
  m.twice_.assign(std::max(twice_.size(), other.twice_.size()), 0);
  for (std::size_t i = 0; i < twice_.size(); ++i) m.twice_[i] += twice_[i];
  for (std::size_t i = 0; i < other.twice_.size(); ++i) m.twice_[i] += other.twice_[i];
  m.trim();
  return m;
}

std::vector<std::pair<int, int>> Monomial::support() const
{
  std::vector<std::pair<int, int>> s;
  for (int k = 1; k <= max_index(); ++k)
    if (twice_[k - 1] != 0) s.emplace_back(k, twice_[k - 1]);
  return s;
}

void Monomial::trim()
{
  while (!twice_.empty() && twice_.back() == 0) twice_.pop_back();
}

bool operator<(const Monomial& a, const Monomial& b)
{
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  const auto sa = a.support();
  const auto sb = b.support();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

// ------------------------------------------------------------------ SSPoly

SSPoly::SSPoly(const Rational& constant)
{
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

SSPoly::SSPoly(const Monomial& m, const Rational& coeff)
{
  if (coeff != 0) terms_.emplace(m, coeff);
}

SSPoly SSPoly::q(int k)
{
  return SSPoly(Monomial::generator(k));
}

SSPoly SSPoly::q2_power(int twice_exponent)
{
  return SSPoly(Monomial::generator(2, twice_exponent));
}

Rational SSPoly::coefficient(const Monomial& m) const
{
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SSPoly::add_term(const Monomial& m, const Rational& coeff)
{
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SSPoly& SSPoly::operator+=(const SSPoly& other)
{
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SSPoly& SSPoly::operator-=(const SSPoly& other)
{
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SSPoly operator*(const SSPoly& a, const SSPoly& b)
{
  SSPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SSPoly& SSPoly::operator*=(const SSPoly& other)
{
  *this = *this * other;
  return *this;
}

SSPoly& SSPoly::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SSPoly SSPoly::pow(int e) const
{
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  SSPoly result = 1;
  SSPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool SSPoly::contains_q1() const
{
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.contains_q1(); });
}

bool SSPoly::is_polynomial() const
{
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_polynomial(); });
}

bool SSPoly::is_homogeneous() const
{
  if (terms_.empty()) return true;
  const int w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

int SSPoly::homogeneous_weight() const
{
  if (terms_.empty()) throw std::invalid_argument("the zero polynomial has no weight");
  if (!is_homogeneous()) throw std::invalid_argument("polynomial is not weight-homogeneous");
  return terms_.begin()->first.weight();
}

SSPoly SSPoly::partial(int k) const
{
  SSPoly r;
  if (k < 1) return r;
  for (const auto& [m, c] : terms_) {
    const int e2 = m.twice_exponent(k);
    if (e2 == 0) continue;
    r.add_term(m.with_twice_exponent(k, e2 - 2), c * ratio(e2, 2));
  }
  return r;
}

std::map<int, SSPoly> weight_components(const SSPoly& f)
{
  std::map<int, SSPoly> out;
  for (const auto& [m, c] : f.terms()) out[m.weight()].add_term(m, c);
  return out;
}

SSPoly pr(const SSPoly& f)
{
  SSPoly r;
  for (const auto& [m, c] : f.terms())
    if (!m.contains_q1()) r.add_term(m, c);
  return r;
}

// -------------------------------------------------------------- evaluation

namespace {

constexpr int kBetaTableSize = 128;

// 1/(2 sinh(z/2)) = z^{-1} / u(z) with u(z) = sum_j z^{2j} / (4^j (2j+1)!),
// so beta_k is the z^k coefficient of 1/u.
std::vector<Rational> beta_series(int count)
{
  std::vector<Rational> u(static_cast<std::size_t>(count), 0);
  for (int j = 0; 2 * j < count; ++j) {
    Integer den = factorial(2 * j + 1);
    den <<= static_cast<mp_bitcnt_t>(2 * j);
    u[2 * j] = Rational(1, den);
  }
  std::vector<Rational> inv(static_cast<std::size_t>(count), 0);
  inv[0] = 1;
  for (int k = 1; k < count; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += u[i] * inv[k - i];
    inv[k] = -s;
  }
  return inv;
}

const std::vector<Rational>& beta_table()
{
  static const std::vector<Rational> table = beta_series(kBetaTableSize);
  return table;
}

}  // namespace

Rational beta(int k)
{
  if (k < 0) throw std::invalid_argument("beta_k needs k >= 0");
  if (k < kBetaTableSize) return beta_table()[static_cast<std::size_t>(k)];
  return beta_series(k + 1)[static_cast<std::size_t>(k)];
}

namespace {

// Q_k(lambda) from the doubled C_lambda entries: c = d/2, so
// sgn(c) c^{k-1} = sgn(d)^k |d|^{k-1} / 2^{k-1}.
Rational qk_from_cset(int k, const std::vector<int>& doubled)
{
  if (k == 0) return 1;
  Integer sum = 0;
  for (int d : doubled) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::abs(d)), static_cast<unsigned long>(k - 1));
    if (d < 0 && k % 2 == 1) sum -= p; else sum += p;
  }
  Integer den = factorial(k - 1);
  den <<= static_cast<mp_bitcnt_t>(k - 1);
  return beta(k) + ratio(sum, den);
}

void require_evaluable(const SSPoly& f)
{
  if (!f.is_polynomial())
    throw std::invalid_argument("evaluation needs non-negative integer exponents");
}

}  // namespace

Rational eval_qk(int k, const Partition& lambda)
{
  if (k < 0) throw std::invalid_argument("Q_k needs k >= 0");
  return qk_from_cset(k, c_set_doubled(lambda));
}

Rational eval(const SSPoly& f, const Partition& lambda)
{
  return eval_many(f, {lambda}).front();
}

std::vector<Rational> eval_many(const SSPoly& f, const std::vector<Partition>& partitions)
{
  require_evaluable(f);
  const SSPoly g = pr(f);
  int max_k = 0;
  for (const auto& [m, c] : g.terms()) max_k = std::max(max_k, m.max_index());

  std::vector<Rational> values;
  values.reserve(partitions.size());
  std::vector<Rational> qk(static_cast<std::size_t>(max_k) + 1);
  for (const Partition& lambda : partitions) {
    const std::vector<int> cs = c_set_doubled(lambda);
    for (int k = 2; k <= max_k; ++k) qk[k] = qk_from_cset(k, cs);
    Rational total = 0;
    for (const auto& [m, c] : g.terms()) {
      Rational term = c;
      for (const auto& [k, e2] : m.support()) {
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), qk[k].get_num_mpz_t(), static_cast<unsigned long>(e2 / 2));
        mpz_pow_ui(p.get_den_mpz_t(), qk[k].get_den_mpz_t(), static_cast<unsigned long>(e2 / 2));
        term *= p;
      }
      total += term;
    }
    values.push_back(total);
  }
  return values;
}

}  // namespace shiftsym

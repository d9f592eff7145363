#include "shiftsym/quasimodular.hpp"

#include "shiftsym/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace shiftsym {

QMForm::QMForm(const Rational& constant)
{
  if (constant != 0) terms_.emplace(QMExponent{0, 0, 0}, constant);
}

QMForm::QMForm(const QMExponent& e, const Rational& coeff)
{
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent in QMForm");
  if (coeff != 0) terms_.emplace(e, coeff);
}

Rational QMForm::coefficient(const QMExponent& e) const
{
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QMForm::add_term(const QMExponent& e, const Rational& coeff)
{
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QMForm& QMForm::operator+=(const QMForm& other)
{
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QMForm& QMForm::operator-=(const QMForm& other)
{
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QMForm& QMForm::operator*=(const Rational& c)
{
  if (c == 0) terms_.clear();
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

QMForm operator*(const QMForm& a, const QMForm& b)
{
  QMForm r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

bool QMForm::is_homogeneous() const
{
  if (terms_.empty()) return true;
  const int w = weight_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return weight_of(t.first) == w; });
}

int QMForm::homogeneous_weight() const
{
  if (terms_.empty()) throw std::invalid_argument("the zero form has no weight");
  if (!is_homogeneous()) throw std::invalid_argument("form is not weight-homogeneous");
  return weight_of(terms_.begin()->first);
}

std::string QMForm::to_string() const
{
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    static constexpr char kNames[3] = {'P', 'Q', 'R'};
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kNames[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty()) body = shiftsym::to_string(mag);
    else if (mag == 1) body = mono;
    else body = shiftsym::to_string(mag) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

QMForm QMForm::parse(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty quasimodular form");
  QMForm result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw std::invalid_argument("empty term in quasimodular form");
    Rational coeff = negative ? -1 : 1;
    QMExponent e{0, 0, 0};
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      const std::size_t star = std::min(term.find('*', fpos), term.size());
      const std::string factor = term.substr(fpos, star - fpos);
      fpos = star + 1;
      if (factor.empty()) throw std::invalid_argument("empty factor in quasimodular form");
      const char head = factor.front();
      if (head == 'P' || head == 'Q' || head == 'R') {
        int power = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^' || factor.size() == 2) throw std::invalid_argument("malformed power '" + factor + "'");
          const std::string digits = factor.substr(2);
          if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed power '" + factor + "'");
          power = std::stoi(digits);
        }
        e[head == 'P' ? 0 : head == 'Q' ? 1 : 2] += power;
      } else {
        coeff *= parse_rational(factor);
      }
    }
    result.add_term(e, coeff);
  }
  return result;
}

std::vector<QMExponent> monomials_of_weight(int k)
{
  std::vector<QMExponent> out;
  if (k < 0 || k % 2 != 0) return out;
  for (int a = k / 2; a >= 0; --a)
    for (int b = (k - 2 * a) / 4; b >= 0; --b) {
      const int rest = k - 2 * a - 4 * b;
      if (rest % 6 == 0) out.push_back({a, b, rest / 6});
    }
  return out;
}

namespace {

QSeries power(const QSeries& base, int e, int order)
{
  QSeries r = QSeries::constant(1, order);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

QSeries expand_monomial(const QMExponent& e, int order)
{
  return power(eisenstein(2, order), e[0], order) * power(eisenstein(4, order), e[1], order) *
         power(eisenstein(6, order), e[2], order);
}

}  // namespace

QSeries expand(const QMForm& m, int order)
{
  QSeries s(order);
  for (const auto& [e, c] : m.terms()) s += expand_monomial(e, order) * c;
  return s;
}

QMForm recognize(const QSeries& s, int k, int order)
{
  if (order > s.order()) throw RecognitionError("insufficient order: series is only known to q^" + std::to_string(s.order()));
  const std::vector<QMExponent> monos = monomials_of_weight(k);
  if (order + 1 < static_cast<int>(monos.size()) + kRecognitionMargin)
    throw RecognitionError("insufficient order: weight " + std::to_string(k) + " needs at least " +
                           std::to_string(static_cast<int>(monos.size()) + kRecognitionMargin - 1) +
                           " (got " + std::to_string(order) + ")");
  if (monos.empty()) {
    if (!s.truncate(order).is_zero())
      throw RecognitionError("not quasimodular of weight " + std::to_string(k) + " at this order");
    return {};
  }
  std::vector<QSeries> columns;
  for (const auto& e : monos) columns.push_back(expand_monomial(e, order));
  RationalMatrix a(static_cast<std::size_t>(order) + 1, std::vector<Rational>(monos.size()));
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    for (std::size_t j = 0; j < monos.size(); ++j) a[n][j] = columns[j][n];
    b[n] = s[n];
  }
  const auto solution = solve(std::move(a), std::move(b));
  if (!solution) throw RecognitionError("not quasimodular of weight " + std::to_string(k) + " at this order");
  if (!solution->unique) throw RecognitionError("insufficient order: monomial expansions are dependent");
  QMForm result;
  for (std::size_t j = 0; j < monos.size(); ++j) result.add_term(monos[j], solution->x[j]);
  return result;
}

QMForm ramanujan_d(const QMForm& m)
{
  // D(P) = (P^2 - Q)/12, D(Q) = (PQ - R)/3, D(R) = (PR - Q^2)/2.
  const QMForm dp = (QMForm({2, 0, 0}) - QMForm({0, 1, 0})) * Rational(1, 12);
  const QMForm dq = (QMForm({1, 1, 0}) - QMForm({0, 0, 1})) * Rational(1, 3);
  const QMForm dr = (QMForm({1, 0, 1}) - QMForm({0, 2, 0})) * Rational(1, 2);
  const QMForm derivs[3] = {dp, dq, dr};
  QMForm out;
  for (const auto& [e, c] : m.terms()) {
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      QMExponent lowered = e;
      --lowered[i];
      out += QMForm(lowered, c * e[i]) * derivs[i];
    }
  }
  return out;
}

QMForm frak_d(const QMForm& m)
{
  QMForm out;
  for (const auto& [e, c] : m.terms())
    if (e[0] > 0) out.add_term({e[0] - 1, e[1], e[2]}, c * 12 * e[0]);
  return out;
}

QMForm d_hat(const QMForm& m)
{
  return ramanujan_d(m) - QMForm::p() * m * Rational(1, 24);
}

QMForm w_hat(const QMForm& m)
{
  if (m.is_zero()) return m;
  return m * (Rational(m.homogeneous_weight()) - Rational(1, 2));
}

int depth(const QMForm& m)
{
  int d = 0;
  for (const auto& [e, c] : m.terms()) d = std::max(d, e[0]);
  return d;
}

ModularityReport is_modular_bracket(const SSPoly& f, int order)
{
  if (!f.in_lambda_star()) throw std::invalid_argument("modularity test expects an element of Lambda*");
  const int k = f.is_zero() ? 0 : f.homogeneous_weight();
  ModularityReport report;
  report.bracket = q_bracket(f, order);
  report.form = recognize(report.bracket, k, order);
  report.modular = depth(report.form) == 0;
  report.decomposition = decompose(f);

  bool higher_vanish = true;
  for (std::size_t r = 1; r < report.decomposition.components.size(); ++r) {
    const SSPoly& h = report.decomposition.components[r];
    if (!h.is_zero() && !q_bracket(h, order).is_zero()) {
      higher_vanish = false;
      break;
    }
  }
  if (higher_vanish != report.modular)
    throw CrossCheckError("modularity cross-check failed for " + format(f) + ": depth " +
                          std::to_string(depth(report.form)) + " but higher harmonic brackets " +
                          (higher_vanish ? "vanish" : "do not vanish"));
  return report;
}

}  // namespace shiftsym

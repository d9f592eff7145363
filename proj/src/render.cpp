#include "shiftsym/render.hpp"

#include <algorithm>

namespace shiftsym {

std::vector<std::pair<Monomial, Rational>> display_terms(const SSPoly& f)
{
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.twice_exponent(2) < b.first.twice_exponent(2);
  });
  return terms;
}

std::pair<Rational, SSPoly> factor_content(const SSPoly& f)
{
  if (f.is_zero()) return {Rational(0), SSPoly{}};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rational content = ratio(num_gcd, den_lcm);
  if (display_terms(f).front().second < 0) content = -content;
  SSPoly primitive = f * (1 / content);
  return {content, primitive};
}

std::string format_factored(const SSPoly& f)
{
  const auto [content, primitive] = factor_content(f);
  if (f.is_zero()) return "0";
  std::string inner;
  for (const auto& [m, c] : display_terms(primitive)) {
    const Rational mag = abs(c);
    std::string body = m.is_one() ? to_string(mag) : (mag == 1 ? format(m) : to_string(mag) + "*" + format(m));
    if (inner.empty()) inner = (c < 0 ? "-" : "") + body;
    else inner += (c < 0 ? " - " : " + ") + body;
  }
  const bool single = primitive.size() == 1;
  if (content == 1) return inner;
  if (content == -1) return single ? "-" + inner : "-(" + inner + ")";
  if (single && primitive.terms().begin()->first.is_one()) return to_string(content);
  if (single) return to_string(content) + "*" + inner;
  return to_string(content) + "*(" + inner + ")";
}

std::string latex(const Rational& c)
{
  const std::string sign = c < 0 ? "-" : "";
  const Rational mag = abs(c);
  if (mag.get_den() == 1) return sign + mag.get_num().get_str();
  return sign + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

namespace {

std::string braced(const std::string& s)
{
  return s.size() == 1 ? s : "{" + s + "}";
}

std::string latex_exponent(int twice)
{
  if (twice == 2) return "";
  if (twice % 2 == 0) return "^" + braced(std::to_string(twice / 2));
  return "^{" + std::to_string(twice) + "/2}";
}

}  // namespace

std::string latex(const Monomial& m)
{
  std::string s;
  for (const auto& [k, e2] : m.support()) {
    if (!s.empty()) s += ' ';
    s += "Q_" + braced(std::to_string(k)) + latex_exponent(e2);
  }
  return s.empty() ? "1" : s;
}

std::string latex(const SSPoly& f)
{
  if (f.is_zero()) return "0";
  const auto [content, primitive] = factor_content(f);
  std::string inner;
  for (const auto& [m, c] : display_terms(primitive)) {
    const Rational mag = abs(c);
    std::string body = m.is_one() ? latex(mag) : (mag == 1 ? latex(m) : latex(mag) + " " + latex(m));
    if (inner.empty()) inner = (c < 0 ? "-" : "") + body;
    else inner += (c < 0 ? "-" : "+") + body;
  }
  const bool single = primitive.size() == 1;
  if (content == 1) return inner;
  if (single && primitive.terms().begin()->first.is_one()) return latex(content);
  if (content == -1) return single ? "-" + inner : "-\\left(" + inner + "\\right)";
  if (single) return latex(content) + " " + inner;
  return latex(content) + " \\left(" + inner + "\\right)";
}

std::string latex(const QMForm& m)
{
  if (m.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : m.terms()) {
    std::string mono;
    static constexpr char kNames[3] = {'P', 'Q', 'R'};
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      mono += kNames[i];
      if (e[i] > 1) mono += "^" + braced(std::to_string(e[i]));
    }
    const Rational mag = abs(c);
    std::string body = mono.empty() ? latex(mag) : (mag == 1 ? mono : latex(mag) + " " + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? "-" : "+") + body;
  }
  return out;
}

nlohmann::json to_json(const SSPoly& f)
{
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [k, e2] : m.support()) {
      if (e2 % 2 == 0) mono[std::to_string(k)] = e2 / 2;
      else mono[std::to_string(k)] = std::to_string(e2) + "/2";
    }
    terms.push_back({{"coeff", to_string(c)}, {"monomial", mono}});
  }
  return terms;
}

nlohmann::json to_json(const QMForm& m)
{
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : m.terms())
    terms.push_back({{"coeff", to_string(c)}, {"P", e[0]}, {"Q", e[1]}, {"R", e[2]}});
  return terms;
}

SSPoly poly_from_json(const nlohmann::json& j)
{
  SSPoly f;
  for (const auto& term : j) {
    Monomial m;
    for (const auto& [key, value] : term.at("monomial").items()) {
      const int k = std::stoi(key);
      const int twice = value.is_string() ? std::stoi(value.get<std::string>()) : 2 * value.get<int>();
      if (value.is_string() && value.get<std::string>().find("/2") == std::string::npos)
        throw std::invalid_argument("exponent strings must have the form \"a/2\"");
      m = m * Monomial::generator(k, twice);
    }
    f.add_term(m, parse_rational(term.at("coeff").get<std::string>()));
  }
  return f;
}

}  // namespace shiftsym

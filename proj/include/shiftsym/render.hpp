#pragma once

// Human-facing renderings: content-factored text, LaTeX table cells and JSON.

#include "shiftsym/quasimodular.hpp"
#include "shiftsym/ssym.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace shiftsym {

// Terms ordered by ascending Q2 exponent, then by the canonical monomial order.
std::vector<std::pair<Monomial, Rational>> display_terms(const SSPoly& f);

// f = content * primitive, where primitive has coprime integer coefficients
// and a positive first display term. The zero polynomial gives (0, 0).
std::pair<Rational, SSPoly> factor_content(const SSPoly& f);

// "27/4*(2*Q4 + Q2^2)"; parses back to f.
std::string format_factored(const SSPoly& f);

std::string latex(const Rational& c);
std::string latex(const Monomial& m);
// Content-factored LaTeX, e.g. "\frac{27}{4} \left(2 Q_4+Q_2^2\right)".
std::string latex(const SSPoly& f);
std::string latex(const QMForm& m);

nlohmann::json to_json(const SSPoly& f);
nlohmann::json to_json(const QMForm& m);
SSPoly poly_from_json(const nlohmann::json& j);

}  // namespace shiftsym

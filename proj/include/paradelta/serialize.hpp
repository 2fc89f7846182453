#ifndef PARADELTA_SERIALIZE_HPP
#define PARADELTA_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "paradelta/exactpoly.hpp"

namespace paradelta {

// JSON form: {"vars":["x","C"],"terms":[[i,j,"<decimal>"],...]} with terms in
// (i desc, j desc) order. Univariate polynomials use one variable and
// [i,"<decimal>"] pairs.
nlohmann::ordered_json to_json(const BivariatePolynomial& p);
nlohmann::ordered_json to_json(const IntegerPolynomial& p);

BivariatePolynomial bivariate_from_json(const nlohmann::ordered_json& j);
IntegerPolynomial univariate_from_json(const nlohmann::ordered_json& j);

// Canonical text in the same term order, e.g. "x^2 - 2*x*C - 16*x + C^3".
std::string to_text(const BivariatePolynomial& p);
std::string to_text(const IntegerPolynomial& p);

}  // namespace paradelta

#endif  // PARADELTA_SERIALIZE_HPP

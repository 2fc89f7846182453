#include "paradelta/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace paradelta {

namespace {

using Monomial = std::vector<std::pair<std::string, int>>;

std::string render(const std::vector<std::pair<Integer, Monomial>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    Integer mag = abs(coeff);
    if (first) {
      if (coeff < 0) out << "-";
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (const auto& [var, e] : mono) {
      if (e == 0) continue;
      factors.push_back(e == 1 ? var : var + "^" + std::to_string(e));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

}  // namespace

nlohmann::ordered_json to_json(const BivariatePolynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({it->first.first, it->first.second, it->second.get_str()});
  return {{"vars", {p.var1(), p.var2()}}, {"terms", terms}};
}

nlohmann::ordered_json to_json(const IntegerPolynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (int i = p.degree(); i >= 0; --i)
    if (p.coeff(i) != 0) terms.push_back({i, p.coeff(i).get_str()});
  return {{"vars", {p.var()}}, {"terms", terms}};
}

BivariatePolynomial bivariate_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto& vars = j.at("vars");
    if (vars.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected two variables");
    BivariatePolynomial p(vars[0].get<std::string>(), vars[1].get<std::string>());
    for (const auto& t : j.at("terms")) {
      if (t.size() != 3) throw Error(ErrorCode::InvalidArgument, "term must be [i,j,coeff]");
      p.set(t[0].get<int>(), t[1].get<int>(), Integer(t[2].get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::InvalidArgument, "malformed coefficient");
  }
}

IntegerPolynomial univariate_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto& vars = j.at("vars");
    if (vars.size() != 1) throw Error(ErrorCode::InvalidArgument, "expected one variable");
    std::vector<Integer> coeffs;
    for (const auto& t : j.at("terms")) {
      if (t.size() != 2) throw Error(ErrorCode::InvalidArgument, "term must be [i,coeff]");
      const int i = t[0].get<int>();
      if (i < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
      if (static_cast<int>(coeffs.size()) <= i) coeffs.resize(i + 1);
      coeffs[i] = Integer(t[1].get<std::string>());
    }
    return IntegerPolynomial(std::move(coeffs), vars[0].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::InvalidArgument, "malformed coefficient");
  }
}

std::string to_text(const BivariatePolynomial& p) {
  std::vector<std::pair<Integer, Monomial>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({it->second, {{p.var1(), it->first.first}, {p.var2(), it->first.second}}});
  return render(terms);
}

std::string to_text(const IntegerPolynomial& p) {
  std::vector<std::pair<Integer, Monomial>> terms;
  for (int i = p.degree(); i >= 0; --i)
    if (p.coeff(i) != 0) terms.push_back({p.coeff(i), {{p.var(), i}}});
  return render(terms);
}

}  // namespace paradelta

#pragma once

// Published reference values used by the verification harness: the signed
// component table of the 10-dimensional 6-form and the factored
// characteristic polynomials.

#include <string>
#include <vector>

#include "matryoshka/exterior.hpp"
#include "matryoshka/polynomial.hpp"

namespace matryoshka::reference {

/// Components of the 6-form in zero notation: the digit 0 stands for index 10.
inline const std::vector<std::string>& omega10_table() {
  static const std::vector<std::string> t = {
      "+123456", "+123478", "+123490", "+123579", "-123580", "-123670", "-123689", "-124570", "-124589", "-124679",
      "+124680", "+125678", "+125690", "+127890", "-134579", "+134580", "+134670", "+134689", "+135679", "-135680",
      "-135789", "+135790", "+136780", "-136890", "-145670", "-145689", "+145780", "-145890", "+146789", "-146790",
      "+234570", "+234589", "+234679", "-234680", "-235670", "-235689", "+235780", "-235890", "+236789", "-236790",
      "-245679", "+245680", "+245789", "-245790", "-246780", "+246890", "+345678", "+345690", "+347890", "+567890",
  };
  return t;
}

/// Reads the table with the written digit order taken literally (so a
/// trailing 0 puts index 10 last).
inline Form omega10_from_table() {
  Form f(10, 6);
  for (const auto& entry : omega10_table()) {
    std::vector<int> idx;
    for (std::size_t k = 1; k < entry.size(); ++k) idx.push_back(entry[k] == '0' ? 10 : entry[k] - '0');
    f.accumulate(idx, entry[0] == '-' ? -1 : 1);
  }
  return f;
}

struct NamedPolynomial {
  std::string name;
  std::string factored;
};

inline const std::vector<NamedPolynomial>& polynomials() {
  static const std::vector<NamedPolynomial> p = {
      {"omega10 on 3-forms", "(x^6+51x^4+699x^2+1369)^4(x^4+42x^2+361)^6(x^2+1)^35(x^2+9)"},
      {"dual of omega10 on 2-forms", "(x+4)(x+1)^8(x-1)^24(x^2+2x-19)^6"},
      {"t17 on 2-forms", "(x)^4(x^2-5)(x^4-8x^2+3)^4(x^6-14x^4+33x^2-12)"},
      {"phiA on 2-forms", "(x-1)^20(x+1)^24(x-4)"},
      {"phiB on 2-forms", "(x+2)^12(x-3)^8(x-2)^15(x+3)^8(x^2+6x-36)"},
      {"phiC on 2-forms", "(x)^33(x^2-20)^6"},
      {"phiD on 2-forms", "(x)^33(x^2-20)^6"},
      {"omegaA on 3-forms", "(x^2+1)^55(x^2+9)^5"},
      {"omegaB on 3-forms", "(x^2+36)(x^4+60x^2+144)^4(x^2+4)^27(x^2+9)^24"},
      {"omegaC on 3-forms", "(x)^80(x^2+20)^20"},
      {"omegaD on 3-forms", "(x)^80(x^2+20)^20"},
      {"dual of psi12A on 2-forms", "(x+1)^35(x-5)(x-1)^30"},
      {"dual of psi12B on 2-forms", "(x-2)^24(x+2)^20(x-4)^10(x+4)^10(x^2+8x-80)"},
      {"epsilon4 on 2-forms", "(x^2-1)^3"},
  };
  return p;
}

inline Factorization factorization(const std::string& name) {
  for (const auto& p : polynomials())
    if (p.name == name) return parse_factorization(p.factored);
  throw Error("no reference polynomial named '" + name + "'");
}

/// Every factor appearing in the reference polynomials, plus x - 1 and x + 1.
inline std::vector<IntPolynomial> known_factors() {
  std::vector<IntPolynomial> out = {IntPolynomial::linear(1), IntPolynomial::linear(-1)};
  for (const auto& p : polynomials())
    for (const auto& f : parse_factorization(p.factored)) out.push_back(f.poly);
  return out;
}

}  // namespace matryoshka::reference

#pragma once

#include <string>

#include "qshift/lweight.hpp"

namespace qshift {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent-sorted rendering: "q^2 - q^-2", "(q^2 - q^-2)/(q - q^-1)".
std::string laurent_to_string(const LaurentQ& p);
std::string ratq_to_string(const RatQ& f);
// Parser for the same grammar (+, -, *, /, ^ with integer exponents, q,
// integer literals and parentheses).
RatQ ratq_from_string(const std::string& text);

// l-weight grammar: products of Psi[i,k]^n, Y[i,k]^n and t[i]^e separated
// by '*'; "1" is the identity. Rendering emits canonical form (torus then
// Psi factors) and parses back to an equal value.
std::string lweight_to_string(const LWeight& w);
LWeight lweight_from_string(const CartanData& cd, const std::string& text);

std::string torus_to_string(const TorusWeight& t);
std::string coweight_to_string(const Coweight& mu);
std::string a_monomial_to_string(const AMonomial& m);
std::string y_monomial_to_string(const YMonomial& m);

}  // namespace qshift

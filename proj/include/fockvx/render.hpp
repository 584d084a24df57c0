#pragma once

// Human-readable (text) and LaTeX renderings.

#include <string>

#include <fockvx/polynomial.hpp>
#include <fockvx/scalar.hpp>
#include <fockvx/vertex.hpp>

namespace fockvx
{

std::string to_latex(const Scalar &s);

// "1/2 f_1^2 (g_2)*", "1" for the identity, "0" when empty.
std::string to_text(const SchurOperator &op);
std::string to_latex(const SchurOperator &op);

// "1/2 z^-1 + 1 + z"
std::string to_text(const LaurentPolynomial &series);
std::string to_latex(const LaurentPolynomial &series);

// Variables rendered as <symbol>_k.
std::string to_text(const Polynomial &poly, const std::string &symbol = "x");
std::string to_latex(const Polynomial &poly, const std::string &symbol = "x");

} // namespace fockvx

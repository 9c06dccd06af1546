#pragma once

// Text syntax for words, weights and W_ext elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := scalar | letter | '(' expr ')'
//   scalar := rational | 'q' ['^' exp] | 't' ['^' exp]
//   exp    := ['-'] int | '(' rational ')'
//   letter := T[i] Tinv[i] Tp[i] Tpinv[i] D[i] Dp[i] X[wt] Y[wt] ['^-1'] pi[r] Xd[r] Yd[r]
//   wt     := c1 w1 + c2 a2 - ...   |   n1,n2,...   (fundamental-weight coordinates)
//
// Xd[r] / Yd[r] take a rational r with r*e integral. Errors carry line:column.

#include <string>
#include <string_view>

#include "siflag/daha.hpp"

namespace siflag {

Expr parse_expr(const RootSystem& rs, std::string_view src);
/// Merges repeated words (first occurrence order) and drops zero coefficients.
Expr normalize(const Expr& e);
/// Canonical print; parse_expr(print_expr(e)) == normalize(e).
std::string print_expr(const RootSystem& rs, const Expr& e);
std::string print_letter(const RootSystem& rs, const Letter& l);

Weight parse_weight(const RootSystem& rs, std::string_view src);
/// "e", "s1*s0*y[1,1]", "pi[1]*s2", "y[a1+a2]".
ExtAffineElt parse_ext_elt(const RootSystem& rs, std::string_view src);

}  // namespace siflag

#pragma once

// JSON emission and parsing. Matrices follow
//   {"group", "order": [w...], "tag": "H" | "H'", "entries": [[ [term...] ...] ...]}
// with term = {"q": int, "x": [..], "y": [..], "c": "p/r"}. OpMat entries use
// {"y": [..], "num": [poly-term...], "den": [poly-term...]} and poly-term =
// [q_exp_scaled, t_exp_scaled, "p/r", coords...]; the scales are in the header.

#include <string>
#include <string_view>
#include <vector>

#include "siflag/ktheory.hpp"
#include "siflag/matrix_rep.hpp"

namespace siflag::json {

std::string heis_mat(const RootSystem& rs, const WeylGroup& W, const HeisMat& m);
std::string heis_elt(const RootSystem& rs, const HeisElt& h);
std::string op_mat(const RootSystem& rs, const WeylGroup& W, const OpMat& m);
std::string ipc(const RootSystem& rs, const Weight& lambda, const ExtAffineElt& w, const KClass& c);

/// Parsers throw IoError on malformed documents.
HeisMat parse_heis_mat(const RootSystem& rs, std::string_view text);
HeisElt parse_heis_elt(const RootSystem& rs, std::string_view text);
OpMat parse_op_mat(const RootSystem& rs, std::string_view text);

struct Golden {
  std::string name;
  std::string map;       // rho_prime | kappa_rho_prime | rho0_prime | rho0 | sph | toda
  std::string elt;       // expression text
  std::string expected;  // JSON of the expected value
};

std::vector<Golden> parse_goldens(std::string_view text);
/// Golden set compiled into the library; empty when none exists for the group.
std::string_view builtin_goldens(std::string_view group);

}  // namespace siflag::json

#pragma once

// Check suites shared by the `verify` / `relations` commands and the tests.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "siflag/root_system.hpp"

namespace siflag {

struct CheckItem {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Evaluates every golden of a JSON golden document against the pipeline.
std::vector<CheckItem> check_goldens(std::shared_ptr<const RootSystem> rs, std::string_view text);

/// Entrywise closed forms for rho_0'(T_i'), all i in I_aff.
std::vector<CheckItem> check_closed_forms(std::shared_ptr<const RootSystem> rs);

/// Defining relations of H at generic t (quadratic, braid, Bernstein), Y
/// commutativity, and the nil relations for rho_0 and rho_0'.
std::vector<CheckItem> relation_suite(std::shared_ptr<const RootSystem> rs);

/// NilDaha::diagram_check as check items.
std::vector<CheckItem> diagram_suite(std::shared_ptr<const RootSystem> rs);

/// Affine Coxeter number m_ij for simply-laced data (0 for infinity).
int affine_braid_order(const RootSystem& rs, int i, int j);

}  // namespace siflag

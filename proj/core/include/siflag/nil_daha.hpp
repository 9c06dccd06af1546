#pragma once

// The nil-DAHA side: rho_0 through the commutative diagram with rho_0',
// Demazure matrices, the nil polynomial representations and the spherical /
// q-Toda projections.
//
// Nil words reuse Expr with letters T, Tinv (= D at t = 0), D, X, Xd. A scalar
// q in a nil word stands for X^{-delta}, so rho_0 is Z[q^{+-1}]-linear.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "siflag/matrix_rep.hpp"

namespace siflag {

/// Z[q^{+-1}][P] with basis e^nu.
using CharPoly = std::map<Weight, QLaurent>;

void add_term(CharPoly& f, const Weight& nu, const QLaurent& c);
std::string format(const CharPoly& f, int rank);

enum class NilVariant { plain, star };

struct DiagramItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

class NilDaha {
 public:
  explicit NilDaha(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  const MatrixRep& matrix_rep() const { return rep_; }
  const Heisenberg& heis() const { return rep_.heis(); }
  const WeylGroup& weyl() const { return rep_.weyl(); }

  /// phi_0 on nil words (same table as phi).
  Expr phi0(const Expr& e) const;
  Expr phi0_inverse(const Expr& e) const;

  /// rho_0(H) = star(tau(rho_0'(phi_0(H)))), computed word by word.
  HeisMat rho0(const Expr& e) const;
  /// Sum over terms of the product of per-letter images. Agrees with rho0 when
  /// rho0 is multiplicative, so it must not be used to test that property.
  HeisMat rho0_factored(const Expr& e) const;
  /// The 0/1 and y-monomial matrices of D_i read off from the K-theory action.
  HeisMat rho0_D_direct(int node) const;

  /// Left action of a nil word on Z[q^{+-1}][P]; the rightmost letter acts first.
  CharPoly nil_poly_apply(const Expr& e, const CharPoly& f, NilVariant variant) const;

  /// (e,e) entry of rho_0(f) for W-invariant f in X; asserts the rest of the e-column vanishes.
  HeisElt rho0_sph(const Expr& f) const;
  /// (e,e) entry of rho_0'(f) for W-invariant f in Y; asserts the rest of the e-row vanishes.
  HeisElt qtoda(const Expr& f) const;

  /// Checks the diagram on T_i' (against rho0_D_direct) and Y^{+-omega_r}
  /// (split construction of Y against the epsilon construction).
  std::vector<DiagramItem> diagram_check() const;

  /// Scalar coefficient of a nil word as an element of Z[q^{+-1}].
  QLaurent nil_scalar(const Poly& c) const;

 private:
  void check_nil_word(const Expr& e) const;
  HeisMat from_primed(const HeisMat& rho0p) const;

  std::shared_ptr<const RootSystem> rs_;
  MatrixRep rep_;
};

}  // namespace siflag

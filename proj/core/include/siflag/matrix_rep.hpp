#pragma once

// The matrix realization rho' of DAHA elements in Mat_W(k(P) x| P), the kappa
// twist and the t -> 0 limit into Mat_W(H').

#include <map>
#include <memory>
#include <vector>

#include "siflag/daha.hpp"
#include "siflag/heisenberg.hpp"
#include "siflag/weyl_group.hpp"

namespace siflag {

/// Element of k(P) x| P written as sum_eta f_eta y^eta (f to the left of y).
class OpEntry {
 public:
  using Map = std::map<Weight, FieldElt>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Weight& eta, const FieldElt& f);

  OpEntry& operator+=(const OpEntry& o);
  OpEntry& operator-=(const OpEntry& o);
  friend bool operator==(const OpEntry& a, const OpEntry& b);

 private:
  Map terms_;
};

struct OpMat {
  std::size_t n = 0;
  std::vector<OpEntry> entries;

  OpMat() = default;
  explicit OpMat(std::size_t size) : n(size), entries(size * size) {}

  OpEntry& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const OpEntry& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  friend bool operator==(const OpMat& a, const OpMat& b) { return a.n == b.n && a.entries == b.entries; }
};

class MatrixRep {
 public:
  explicit MatrixRep(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  const Daha& daha() const { return daha_; }
  const WeylGroup& weyl() const { return weyl_; }
  const Heisenberg& heis() const { return heis_; }

  OpEntry mul(const OpEntry& a, const OpEntry& b) const;
  OpMat mul(const OpMat& a, const OpMat& b) const;
  OpMat add(const OpMat& a, const OpMat& b) const;
  OpMat sub(const OpMat& a, const OpMat& b) const;
  OpMat identity() const;

  /// Entry (v, u^{-1} v) receives (v^{-1} f) y^{v^{-1}(eta)} for every term f y^eta u.
  OpMat to_matrix(const DiffReflOp& d) const;
  /// x^lambda -> t^{-<lambda,rho>} x^lambda, y^mu -> t^{<mu,rho>} y^mu, entrywise.
  OpMat kappa(const OpMat& m) const;
  /// Entrywise t -> 0; asserts the result lies in Mat_W(H').
  HeisMat re_limit(const OpMat& m) const;

  /// rho'(e) = to_matrix(evaluate(e)).
  OpMat rho_prime(const Expr& e) const;
  /// lim_{t->0} kappa(rho'(e)) for a primed expression.
  HeisMat rho0_prime(const Expr& e) const;
  /// Sum over terms of products of per-letter limits (for relation checks only;
  /// it presumes the multiplicativity that rho0_prime is tested for).
  HeisMat rho0_prime_factored(const Expr& e) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  Daha daha_;
  WeylGroup weyl_;
  Heisenberg heis_;
  std::vector<ExtAffineElt> inv_finite_;  // (v^{-1}, 0) per Weyl index
};

}  // namespace siflag
